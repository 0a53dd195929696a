#include "doctest.h"

#include <algorithm>
#include <random>

#include "chainmail/family.hpp"
#include "chainmail/spin.hpp"
#include "chainmail/tait.hpp"
#include "testutil.hpp"

using namespace chainmail;

namespace {

const char* kTrefoil = "X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]";
const char* kFigureEight = "X[4,2,5,1] X[8,6,1,5] X[6,3,7,4] X[2,7,3,8]";
const char* kKink = "X[1,1,2,2]";
const char* kHopf = "X[4,1,3,2] X[2,3,1,4]";

std::vector<size_t> face_sizes(const std::vector<Face>& faces) {
  std::vector<size_t> sizes;
  for (const auto& f : faces) sizes.push_back(f.corners.size());
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

}  // namespace

TEST_CASE("pd parsing") {
  PlanarDiagramCode tre = parse_pd(kTrefoil);
  CHECK(tre.crossings.size() == 3);
  CHECK(tre.arc_count == 6);
  CHECK(tre.components == 1);
  CHECK(tre.crossings[0].arcs == std::array<int, 4>{1, 4, 2, 5});

  PlanarDiagramCode wrapped = parse_pd("PD[X[1,4,2,5], X[3,6,4,1], X[5,2,6,3]]");
  CHECK(wrapped.crossings.size() == 3);

  PlanarDiagramCode empty = parse_pd("");
  CHECK(empty.crossings.empty());
  CHECK(empty.arc_count == 0);
  CHECK(empty.components == 1);

  CHECK(parse_pd(kHopf).components == 2);
  CHECK(parse_pd(kFigureEight).components == 1);
}

TEST_CASE("pd parsing failures") {
  auto code_of = [](const std::string& text) {
    try {
      parse_pd(text);
      return errc::internal;
    } catch (const Error& e) {
      return e.code();
    }
  };
  CHECK(code_of("Y[1,2,3,4]") == errc::parse);
  CHECK(code_of("X[1,2,3]") == errc::parse);
  CHECK(code_of("X[1,2,3,4") == errc::parse);
  CHECK(code_of("X[0,1,1,2]") == errc::parse);
  CHECK(code_of("X[1,2,3,4]") == errc::invalid);           // labels occur once
  CHECK(code_of("X[1,1,1,2]") == errc::invalid);           // label occurs 3 times
  CHECK(code_of("X[1,1,2,2] X[3,3,4,4]") == errc::invalid);  // split diagram
}

TEST_CASE("face tracing") {
  CHECK(face_sizes(trace_faces(parse_pd(kTrefoil))) == std::vector<size_t>{2, 2, 2, 3, 3});
  CHECK(face_sizes(trace_faces(parse_pd(kFigureEight))) ==
        std::vector<size_t>{2, 2, 3, 3, 3, 3});
  CHECK(face_sizes(trace_faces(parse_pd(kKink))) == std::vector<size_t>{1, 1, 2});
  CHECK(trace_faces(parse_pd("")).size() == 2);

  // Every corner appears exactly once across all faces.
  PlanarDiagramCode pd = parse_pd(kFigureEight);
  auto faces = trace_faces(pd);
  std::vector<int> seen(4 * pd.crossings.size(), 0);
  for (const auto& f : faces)
    for (const auto& corner : f.corners) seen[4 * corner.crossing + corner.corner] += 1;
  CHECK(std::count(seen.begin(), seen.end(), 1) == static_cast<long>(seen.size()));

  // A code whose face count is off the sphere is rejected.
  CHECK_THROWS_AS(trace_faces(parse_pd("X[1,3,2,4] X[2,4,1,3]")), Error);
}

TEST_CASE("checkerboard coloring") {
  PlanarDiagramCode pd = parse_pd(kTrefoil);
  auto faces = trace_faces(pd);

  Coloring black = checkerboard_coloring(pd, faces, FaceColor::black);
  CHECK(black.outer_face == 0);  // first face of maximal length
  CHECK(black.color[black.outer_face] == FaceColor::black);
  int whites = 0;
  for (auto c : black.color) whites += c == FaceColor::white ? 1 : 0;
  CHECK(whites == 3);

  Coloring white = checkerboard_coloring(pd, faces, FaceColor::white);
  CHECK(white.outer_face == black.outer_face);
  REQUIRE(white.color.size() == black.color.size());
  for (size_t f = 0; f < faces.size(); ++f) CHECK(white.color[f] != black.color[f]);

  // Adjacent faces (sharing an arc) get opposite colors; spot-check through
  // the crossing-sign helper, which throws if any crossing's corner colors
  // fail to alternate.
  for (int c = 0; c < 3; ++c) {
    int s = crossing_sign(pd, faces, black, c);
    CHECK((s == 1 || s == -1));
    CHECK(crossing_sign(pd, faces, white, c) == -s);
  }
  CHECK_THROWS_AS(crossing_sign(pd, faces, black, 7), Error);
}

TEST_CASE("trefoil crossing signs and tait graph") {
  PlanarDiagramCode pd = parse_pd(kTrefoil);
  auto faces = trace_faces(pd);
  Coloring col = checkerboard_coloring(pd, faces, FaceColor::black);
  for (int c = 0; c < 3; ++c) CHECK(crossing_sign(pd, faces, col, c) == 1);

  TaitGraph t = white_tait_graph(pd, faces, col);
  REQUIRE(t.graph.vertex_count() == 3);
  CHECK(t.graph.vertex(0).id == "w1");
  for (const auto& v : t.graph.vertices()) CHECK(v.weight == 2);
  REQUIRE(t.graph.edges().size() == 3);
  for (const auto& e : t.graph.edges()) CHECK(e.sign == -1);
  CHECK(t.root == "w1");
  CHECK(t.graph.has_rotation());

  ChainmailGraph reduced = reduce_tait(t);
  CHECK(reduced.vertex_count() == 2);
  CHECK(homology_order(reduced) == 3);

  // Outer-white gives the other checkerboard graph; same knot, same order.
  Coloring colw = checkerboard_coloring(pd, faces, FaceColor::white);
  TaitGraph tw = white_tait_graph(pd, faces, colw);
  CHECK(tw.graph.vertex_count() == 2);
  for (const auto& v : tw.graph.vertices()) CHECK(v.weight == -3);
  CHECK(tw.graph.edges().size() == 3);
  for (const auto& e : tw.graph.edges()) CHECK(e.sign == 1);
  CHECK(homology_order(reduce_tait(tw)) == 3);
}

TEST_CASE("figure-eight tait graph has determinant 5 from every root") {
  PlanarDiagramCode pd = parse_pd(kFigureEight);
  auto faces = trace_faces(pd);
  for (FaceColor outer : {FaceColor::black, FaceColor::white}) {
    Coloring col = checkerboard_coloring(pd, faces, outer);
    TaitGraph t = white_tait_graph(pd, faces, col);
    REQUIRE(t.graph.vertex_count() == 3);
    for (const auto& v : t.graph.vertices()) {
      CHECK(homology_order(reduce_tait(t, v.id)) == 5);
    }
  }
}

TEST_CASE("hopf link tait graph") {
  PlanarDiagramCode pd = parse_pd(kHopf);
  auto faces = trace_faces(pd);
  Coloring col = checkerboard_coloring(pd, faces, FaceColor::black);
  TaitGraph t = white_tait_graph(pd, faces, col);
  CHECK(t.graph.vertex_count() == 2);
  CHECK(homology_order(reduce_tait(t)) == 2);
}

TEST_CASE("kink: reduced graph is trivial, opposite coloring is nugatory") {
  PlanarDiagramCode pd = parse_pd(kKink);
  auto faces = trace_faces(pd);
  Coloring black = checkerboard_coloring(pd, faces, FaceColor::black);
  CHECK(crossing_sign(pd, faces, black, 0) == 1);
  TaitGraph t = white_tait_graph(pd, faces, black);
  CHECK(t.graph.vertex_count() == 2);
  CHECK(homology_order(reduce_tait(t)) == 1);

  Coloring white = checkerboard_coloring(pd, faces, FaceColor::white);
  CHECK_THROWS_AS(white_tait_graph(pd, faces, white), Error);
  try {
    white_tait_graph(pd, faces, white);
  } catch (const Error& e) {
    CHECK(e.code() == errc::math);
  }
}

TEST_CASE("empty diagram yields the one-vertex tait graph of the unknot") {
  PlanarDiagramCode pd = parse_pd("");
  auto faces = trace_faces(pd);
  Coloring col = checkerboard_coloring(pd, faces, FaceColor::black);
  TaitGraph t = white_tait_graph(pd, faces, col);
  CHECK(t.graph.vertex_count() == 1);
  CHECK(t.graph.vertex(0).weight == 0);
  CHECK(t.graph.edges().empty());
  ChainmailGraph reduced = reduce_tait(t);
  CHECK(reduced.vertex_count() == 0);
  CHECK(homology_order(reduced) == 1);
}

TEST_CASE("completion adds the root edges demanded by the weight relation") {
  ChainmailGraph g = testutil::dex();
  TaitGraph t = complete_to_tait(g);
  REQUIRE(t.graph.vertex_count() == 5);
  CHECK(t.root == "r");
  int r = t.graph.require_index("r");
  CHECK(t.graph.vertex(r).weight == 3);
  CHECK(signed_edge_count(t.graph, "v1", "r") == 1);
  CHECK(signed_edge_count(t.graph, "v2", "r") == -2);
  CHECK(signed_edge_count(t.graph, "v3", "r") == -4);
  CHECK(signed_edge_count(t.graph, "v4", "r") == 2);

  // Tait weight relation at every vertex, root included.
  for (int i = 0; i < t.graph.vertex_count(); ++i) {
    long long sign_sum = 0;
    for (const auto& e : t.graph.edges())
      if (e.u == i || e.v == i) sign_sum += e.sign;
    CHECK(t.graph.vertex(i).weight == -sign_sum);
  }

  CHECK(reduce_tait(t) == g);
}

TEST_CASE("completion tracks the family: root weight 3 - 2n") {
  FamilySpec spec{testutil::dex(), "v1"};
  for (unsigned long n : {0ul, 1ul, 5ul}) {
    ChainmailGraph member = family_member(spec, n);
    TaitGraph t = complete_to_tait(member);
    long long nn = static_cast<long long>(n);
    CHECK(signed_edge_count(t.graph, "v1", "r") == 2 * nn + 1);
    CHECK(signed_edge_count(t.graph, "v2", "r") == -2);
    CHECK(signed_edge_count(t.graph, "v3", "r") == -4);
    CHECK(signed_edge_count(t.graph, "v4", "r") == 2);
    CHECK(t.graph.vertex(t.graph.require_index("r")).weight == 3 - 2 * nn);
    CHECK(reduce_tait(t) == member);
  }
}

TEST_CASE("reduce inverts complete on random graphs") {
  std::mt19937_64 rng(1212);
  for (int trial = 0; trial < 100; ++trial) {
    testutil::RandomGraphOptions opt;
    opt.with_rotation = trial % 2 == 0;
    ChainmailGraph g = testutil::random_graph(rng, opt);
    TaitGraph t = complete_to_tait(g);
    CHECK(reduce_tait(t) == g);
    if (g.has_rotation()) CHECK(t.graph.has_rotation());
  }
}

TEST_CASE("completion picks a fresh root id") {
  ChainmailGraph g = make_graph({{"r", 1}, {"r1", 2}}, {{"r", "r1", 1}});
  TaitGraph t = complete_to_tait(g);
  CHECK(t.root == "r2");
  CHECK(reduce_tait(t) == g);
}

TEST_CASE("tait graph round-trips through the pipeline") {
  // reduce(tait(trefoil)) completed back is the tait graph again up to the
  // root name.
  PlanarDiagramCode pd = parse_pd(kTrefoil);
  auto faces = trace_faces(pd);
  Coloring col = checkerboard_coloring(pd, faces, FaceColor::black);
  TaitGraph t = white_tait_graph(pd, faces, col);
  ChainmailGraph reduced = reduce_tait(t);
  TaitGraph back = complete_to_tait(reduced);
  CHECK(testutil::iso_invariant(back.graph) == testutil::iso_invariant(t.graph));
}
