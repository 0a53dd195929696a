#pragma once

#include <array>
#include <string>
#include <vector>

#include "chainmail/graph.hpp"

namespace chainmail {

// One crossing of a planar diagram: arc labels in counterclockwise slot order
// starting from the incoming under-strand.
struct PdCrossing {
  std::array<int, 4> arcs{};
};

struct PlanarDiagramCode {
  std::vector<PdCrossing> crossings;
  int arc_count = 0;
  int components = 0;
};

// Accepts "X[1,4,2,5] X[3,6,4,1] ..." with an optional PD[...] wrapper.
// Validates that every arc label occurs exactly twice and that the underlying
// 4-valent graph is connected.
PlanarDiagramCode parse_pd(const std::string& text);

// Corner c of a crossing sits between slots c and (c+1) mod 4.
struct FaceCorner {
  int crossing = 0;
  int corner = 0;

  bool operator==(const FaceCorner&) const = default;
};

struct Face {
  std::vector<FaceCorner> corners;
};

// Face orbits of the diagram: a dart arriving at slot j departs again at slot
// j+1 (mod 4) of the same crossing. Faces are listed in first-traversal order;
// an empty diagram yields two cornerless faces. Throws when the face count is
// not crossings + 2 (the diagram would not be spherical).
std::vector<Face> trace_faces(const PlanarDiagramCode& pd);

enum class FaceColor { black, white };

struct Coloring {
  std::vector<FaceColor> color;  // per face
  int outer_face = 0;
  FaceColor outer_color = FaceColor::black;
};

// Proper two-coloring of the faces. The outer face is the one with the most
// corners (first-traced wins ties) and receives `outer`.
Coloring checkerboard_coloring(const PlanarDiagramCode& pd, const std::vector<Face>& faces,
                               FaceColor outer);

// +1 when the white corners of the crossing are corners 0 and 2, -1 when they
// are corners 1 and 3.
int crossing_sign(const PlanarDiagramCode& pd, const std::vector<Face>& faces,
                  const Coloring& coloring, int crossing);

// A chainmail graph together with a distinguished root vertex.
struct TaitGraph {
  ChainmailGraph graph;
  std::string root;
};

// White checkerboard graph: one vertex per white face (ids w1, w2, ... in face
// order), one edge per crossing joining its two white faces with sign equal to
// minus the crossing sign, vertex weights equal to minus the incident sign
// sum, and the rotation system read off the face boundaries. The root is the
// white face with the longest boundary. Throws errc::math on a nugatory
// crossing (both white corners on one face).
TaitGraph white_tait_graph(const PlanarDiagramCode& pd, const std::vector<Face>& faces,
                           const Coloring& coloring);

// Deletes the root (default: the stored one), keeping everything else.
ChainmailGraph reduce_tait(const TaitGraph& t);
ChainmailGraph reduce_tait(const TaitGraph& t, const std::string& root);

// Adds a fresh root vertex and, for each vertex v with defect
// m_v = -weight(v) - (signed incident sum), |m_v| root edges of sign m_v,
// making every vertex satisfy the Tait weight relation; the root weight is
// -sum m_v. Root edges are appended at the end of each rotation list when the
// input carries one. reduce_tait inverts this construction.
TaitGraph complete_to_tait(const ChainmailGraph& g);

}  // namespace chainmail
