#include "chainmail/tait.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <sstream>

namespace chainmail {

namespace {

// Strand ends are indexed 4 * crossing + slot.
struct PdTopology {
  std::vector<int> other_end;    // paired end of the same arc
  std::vector<int> corner_face;  // face index per corner, filled by face trace
};

std::vector<int> pair_ends(const PlanarDiagramCode& pd) {
  std::map<int, std::vector<int>> ends_of_label;
  for (size_t i = 0; i < pd.crossings.size(); ++i)
    for (int j = 0; j < 4; ++j)
      ends_of_label[pd.crossings[i].arcs[j]].push_back(static_cast<int>(4 * i) + j);
  std::vector<int> other(4 * pd.crossings.size(), -1);
  for (const auto& [label, ends] : ends_of_label) {
    if (ends.size() != 2)
      throw Error(errc::invalid, "arc label " + std::to_string(label) + " occurs " +
                                     std::to_string(ends.size()) + " times; expected 2");
    other[ends[0]] = ends[1];
    other[ends[1]] = ends[0];
  }
  return other;
}

}  // namespace

PlanarDiagramCode parse_pd(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.rfind("PD[", 0) == 0 && s.back() == ']') s = s.substr(3, s.size() - 4);

  PlanarDiagramCode pd;
  size_t i = 0;
  while (i < s.size()) {
    if (s[i] == ',') { ++i; continue; }
    if (s[i] != 'X')
      throw Error(errc::parse, "PD text: expected 'X' at position " + std::to_string(i));
    ++i;
    if (i >= s.size() || s[i] != '[')
      throw Error(errc::parse, "PD text: expected '[' after 'X'");
    ++i;
    PdCrossing cr;
    for (int k = 0; k < 4; ++k) {
      size_t start = i;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      if (i == start) throw Error(errc::parse, "PD text: expected arc label");
      long v = std::stol(s.substr(start, i - start));
      if (v <= 0 || v > 1'000'000) throw Error(errc::parse, "PD text: arc label out of range");
      cr.arcs[k] = static_cast<int>(v);
      if (k < 3) {
        if (i >= s.size() || s[i] != ',')
          throw Error(errc::parse, "PD text: expected ',' inside X[...]");
        ++i;
      }
    }
    if (i >= s.size() || s[i] != ']')
      throw Error(errc::parse, "PD text: expected ']' closing X[...]");
    ++i;
    pd.crossings.push_back(cr);
  }

  std::vector<int> other = pair_ends(pd);  // validates label multiplicity
  size_t c = pd.crossings.size();
  pd.arc_count = static_cast<int>(other.size() / 2);

  if (c == 0) {
    pd.components = 1;  // empty code denotes the round unknot
    return pd;
  }

  // Connectivity of the 4-valent projection graph.
  std::vector<int> comp(c, -1);
  std::vector<size_t> stack{0};
  comp[0] = 0;
  while (!stack.empty()) {
    size_t v = stack.back();
    stack.pop_back();
    for (int j = 0; j < 4; ++j) {
      int o = other[4 * v + j] / 4;
      if (comp[o] < 0) { comp[o] = 0; stack.push_back(o); }
    }
  }
  for (size_t i2 = 0; i2 < c; ++i2)
    if (comp[i2] < 0)
      throw Error(errc::invalid, "disconnected diagram: split PD codes are not supported");

  // Link components: walk through-strands (slots 0<->2 and 1<->3 pass through).
  std::vector<bool> seen(4 * c, false);
  int components = 0;
  for (size_t e = 0; e < 4 * c; ++e) {
    if (seen[e]) continue;
    ++components;
    int cur = static_cast<int>(e);
    while (!seen[cur]) {
      seen[cur] = true;
      int through = (cur & ~3) + ((cur & 3) ^ 2);  // slot j -> j+2 mod 4
      seen[through] = true;
      cur = other[through];
    }
  }
  pd.components = components;
  return pd;
}

std::vector<Face> trace_faces(const PlanarDiagramCode& pd) {
  size_t c = pd.crossings.size();
  if (c == 0) return {Face{}, Face{}};

  std::vector<int> other = pair_ends(pd);
  std::vector<bool> used(4 * c, false);  // darts, indexed by departing end
  std::vector<Face> faces;
  for (size_t start = 0; start < 4 * c; ++start) {
    if (used[start]) continue;
    Face face;
    int d = static_cast<int>(start);
    while (!used[d]) {
      used[d] = true;
      int arrive = other[d];
      face.corners.push_back({arrive / 4, arrive & 3});
      d = (arrive & ~3) + (((arrive & 3) + 1) & 3);  // depart at the next slot
    }
    faces.push_back(std::move(face));
  }
  if (faces.size() != c + 2)
    throw Error(errc::invalid, "diagram is not spherical: traced " +
                                   std::to_string(faces.size()) + " faces, expected " +
                                   std::to_string(c + 2));
  return faces;
}

namespace {

std::vector<int> corner_face_map(const PlanarDiagramCode& pd, const std::vector<Face>& faces) {
  std::vector<int> cf(4 * pd.crossings.size(), -1);
  for (size_t f = 0; f < faces.size(); ++f)
    for (const auto& corner : faces[f].corners)
      cf[4 * corner.crossing + corner.corner] = static_cast<int>(f);
  for (int x : cf)
    if (x < 0) throw Error(errc::internal, "face trace left a corner unassigned");
  return cf;
}

int pick_outer_face(const std::vector<Face>& faces) {
  int best = 0;
  for (size_t f = 1; f < faces.size(); ++f)
    if (faces[f].corners.size() > faces[best].corners.size()) best = static_cast<int>(f);
  return best;
}

}  // namespace

Coloring checkerboard_coloring(const PlanarDiagramCode& pd, const std::vector<Face>& faces,
                               FaceColor outer) {
  Coloring col;
  col.outer_color = outer;
  col.outer_face = pick_outer_face(faces);
  col.color.assign(faces.size(), FaceColor::black);

  if (pd.crossings.empty()) {
    col.color[col.outer_face] = outer;
    col.color[1 - col.outer_face] = outer == FaceColor::black ? FaceColor::white
                                                              : FaceColor::black;
    return col;
  }

  std::vector<int> other = pair_ends(pd);
  std::vector<int> cf = corner_face_map(pd, faces);
  // The two sides of the arc through ends (e, other[e]) are the faces holding
  // the corners at those ends.
  std::vector<std::vector<int>> adj(faces.size());
  for (size_t e = 0; e < other.size(); ++e) {
    int f1 = cf[e], f2 = cf[other[e]];
    if (f1 == f2)
      throw Error(errc::invalid, "diagram is not checkerboard colorable");
    adj[f1].push_back(f2);
    adj[f2].push_back(f1);
  }

  std::vector<int> mark(faces.size(), -1);
  std::vector<int> stack{col.outer_face};
  mark[col.outer_face] = 0;
  while (!stack.empty()) {
    int f = stack.back();
    stack.pop_back();
    for (int o : adj[f]) {
      if (mark[o] < 0) { mark[o] = 1 - mark[f]; stack.push_back(o); }
      else if (mark[o] == mark[f])
        throw Error(errc::invalid, "diagram is not checkerboard colorable");
    }
  }
  FaceColor flip = outer == FaceColor::black ? FaceColor::white : FaceColor::black;
  for (size_t f = 0; f < faces.size(); ++f) {
    if (mark[f] < 0) throw Error(errc::internal, "face left uncolored");
    col.color[f] = mark[f] == 0 ? outer : flip;
  }
  return col;
}

int crossing_sign(const PlanarDiagramCode& pd, const std::vector<Face>& faces,
                  const Coloring& coloring, int crossing) {
  if (crossing < 0 || crossing >= static_cast<int>(pd.crossings.size()))
    throw Error(errc::bad_argument, "crossing index out of range");
  std::vector<int> cf = corner_face_map(pd, faces);
  bool w0 = coloring.color[cf[4 * crossing + 0]] == FaceColor::white;
  bool w1 = coloring.color[cf[4 * crossing + 1]] == FaceColor::white;
  bool w2 = coloring.color[cf[4 * crossing + 2]] == FaceColor::white;
  bool w3 = coloring.color[cf[4 * crossing + 3]] == FaceColor::white;
  if (w0 && w2 && !w1 && !w3) return 1;
  if (w1 && w3 && !w0 && !w2) return -1;
  throw Error(errc::internal, "corner colors do not alternate around a crossing");
}

TaitGraph white_tait_graph(const PlanarDiagramCode& pd, const std::vector<Face>& faces,
                           const Coloring& coloring) {
  std::vector<int> white_index(faces.size(), -1);  // face -> white vertex index
  GraphData d;
  for (size_t f = 0; f < faces.size(); ++f) {
    if (coloring.color[f] != FaceColor::white) continue;
    white_index[f] = static_cast<int>(d.vertices.size());
    d.vertices.push_back({"w" + std::to_string(d.vertices.size() + 1), 0});
  }

  std::vector<int> cf;
  std::vector<int> edge_of_crossing(pd.crossings.size(), -1);
  if (!pd.crossings.empty()) {
    cf = corner_face_map(pd, faces);
    for (size_t c = 0; c < pd.crossings.size(); ++c) {
      int sign = crossing_sign(pd, faces, coloring, static_cast<int>(c));
      int ca = sign > 0 ? 0 : 1;  // the two white corners
      int f1 = cf[4 * c + ca], f2 = cf[4 * c + ca + 2];
      if (f1 == f2)
        throw Error(errc::math, "nugatory crossing " + std::to_string(c) +
                                    ": both white corners lie on one face");
      edge_of_crossing[c] = static_cast<int>(d.edges.size());
      d.edges.push_back({d.vertices[white_index[f1]].id, d.vertices[white_index[f2]].id, -sign});
      d.vertices[white_index[f1]].weight += sign;
      d.vertices[white_index[f2]].weight += sign;
    }
  }

  // Rotation: the corners along a white face boundary list its incident
  // crossings, i.e. its incident edges, in cyclic order.
  std::map<std::string, std::vector<int>> rot;
  for (size_t f = 0; f < faces.size(); ++f) {
    if (white_index[f] < 0) continue;
    std::vector<int> order;
    for (const auto& corner : faces[f].corners) order.push_back(edge_of_crossing[corner.crossing]);
    rot[d.vertices[white_index[f]].id] = std::move(order);
  }
  d.rotation = std::move(rot);

  TaitGraph t;
  t.graph = build_graph(d);

  int best = -1;
  size_t best_len = 0;
  for (size_t f = 0; f < faces.size(); ++f) {
    if (white_index[f] < 0) continue;
    if (best < 0 || faces[f].corners.size() > best_len) {
      best = white_index[f];
      best_len = faces[f].corners.size();
    }
  }
  if (best < 0) throw Error(errc::internal, "no white face");
  t.root = t.graph.vertex(best).id;
  return t;
}

ChainmailGraph reduce_tait(const TaitGraph& t) { return reduce_tait(t, t.root); }

ChainmailGraph reduce_tait(const TaitGraph& t, const std::string& root) {
  int r = t.graph.require_index(root);
  std::vector<int> keep;
  for (int i = 0; i < t.graph.vertex_count(); ++i)
    if (i != r) keep.push_back(i);
  return induced_subgraph(t.graph, VertexSubset::of_indices(t.graph, keep));
}

TaitGraph complete_to_tait(const ChainmailGraph& g) {
  std::string root = "r";
  for (int k = 1; g.index_of(root); ++k) root = "r" + std::to_string(k);

  std::vector<long long> defect(g.vertex_count());
  for (int i = 0; i < g.vertex_count(); ++i) {
    __int128 m = -static_cast<__int128>(g.vertex(i).weight);
    for (const auto& e : g.edges())
      if (e.u == i || e.v == i) m -= e.sign;
    if (m > 1'000'000 || m < -1'000'000)
      throw Error(errc::invalid, "completion of \"" + g.vertex(i).id +
                                     "\" needs too many root edges");
    defect[i] = static_cast<long long>(m);
  }

  GraphData d;
  d.vertices = g.vertices();
  for (const auto& e : g.edges())
    d.edges.push_back({g.vertex(e.u).id, g.vertex(e.v).id, e.sign});

  std::vector<std::vector<int>> root_edges(g.vertex_count());
  long long defect_sum = 0;
  for (int i = 0; i < g.vertex_count(); ++i) {
    defect_sum += defect[i];
    for (long long k = 0; k < std::abs(defect[i]); ++k) {
      root_edges[i].push_back(static_cast<int>(d.edges.size()));
      d.edges.push_back({g.vertex(i).id, root, defect[i] > 0 ? 1 : -1});
    }
  }
  d.vertices.push_back({root, -defect_sum});

  if (g.has_rotation()) {
    std::map<std::string, std::vector<int>> rot;
    std::vector<int> at_root;
    for (int i = 0; i < g.vertex_count(); ++i) {
      std::vector<int> order = g.rotation()[i];
      order.insert(order.end(), root_edges[i].begin(), root_edges[i].end());
      rot[g.vertex(i).id] = std::move(order);
      at_root.insert(at_root.end(), root_edges[i].begin(), root_edges[i].end());
    }
    rot[root] = std::move(at_root);
    d.rotation = std::move(rot);
  }

  TaitGraph t;
  t.graph = build_graph(d);
  t.root = root;
  return t;
}

}  // namespace chainmail
