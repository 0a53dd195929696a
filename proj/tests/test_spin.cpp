#include "doctest.h"

#include <random>
#include <set>

#include "chainmail/spin.hpp"
#include "testutil.hpp"

using namespace chainmail;

TEST_CASE("framing values of the running example") {
  ChainmailGraph g = testutil::dex();
  CHECK(f_value(g, VertexSubset::of_ids(g, {"v1", "v4"})) == -9);
  CHECK(f_value(g, VertexSubset::of_ids(g, {"v1", "v2", "v3", "v4"})) == 3);
  CHECK(f_value(g, VertexSubset()) == 0);
  CHECK(f_value(g, VertexSubset::of_ids(g, {"v1", "v3"})) == -5 + 0 + 2 * 3);
}

TEST_CASE("framing equals the quadratic form and the edge-sum oracle") {
  std::mt19937_64 rng(111);
  for (int trial = 0; trial < 150; ++trial) {
    ChainmailGraph g = testutil::random_graph(rng);
    SymIntMatrix a = laplacian(g);
    std::vector<int> subset;
    for (int i = 0; i < g.vertex_count(); ++i)
      if (rng() % 2) subset.push_back(i);
    mpz_class f = f_value(g, VertexSubset::of_indices(g, subset));
    CHECK(f == testutil::f_oracle(g, subset));
    CHECK(f == testutil::quadratic_form(a, subset));
  }
}

TEST_CASE("characteristic subgraphs of the running example") {
  ChainmailGraph g = testutil::dex();
  auto spins = characteristic_subgraphs(g);
  REQUIRE(spins.size() == 2);
  CHECK(spins[0].subgraph.to_text(g) == "{v1,v4}");
  CHECK(spins[0].f == -9);
  CHECK(spins[1].subgraph.to_text(g) == "{v1,v2,v3,v4}");
  CHECK(spins[1].f == 3);
}

TEST_CASE("kaplan invariants of the running example") {
  ChainmailGraph g = testutil::dex();
  auto spins = characteristic_subgraphs(g);
  FillingInvariants first = kaplan_invariants(g, spins[0]);
  CHECK(first.b2 == 11);
  CHECK(first.sigma == 9);
  FillingInvariants second = kaplan_invariants(g, spins[1]);
  CHECK(second.b2 == 5);
  CHECK(second.sigma == -3);
}

TEST_CASE("degenerate framing is rejected") {
  ChainmailGraph g = make_graph({{"v1", 0}}, {});
  auto spins = characteristic_subgraphs(g);
  // Even the zero weight admits two characteristic subgraphs (the GF(2)
  // system is 0 * x = 0); both framings vanish.
  REQUIRE(spins.size() == 2);
  CHECK(spins[0].subgraph.size() == 0);
  CHECK(spins[1].subgraph.to_text(g) == "{v1}");
  for (const auto& s : spins) {
    CHECK(s.f == 0);
    CHECK_THROWS_AS(kaplan_invariants(g, s), DegenerateFraming);
  }
  try {
    kaplan_invariants(g, spins[0]);
  } catch (const Error& e) {
    CHECK(e.code() == errc::math);
  }
}

TEST_CASE("single odd-weight vertex has exactly one spin structure") {
  ChainmailGraph g = make_graph({{"v1", 3}}, {});
  auto spins = characteristic_subgraphs(g);
  REQUIRE(spins.size() == 1);
  CHECK(spins[0].subgraph.to_text(g) == "{v1}");
  CHECK(spins[0].f == 3);
  FillingInvariants inv = kaplan_invariants(g, spins[0]);
  CHECK(inv.b2 == 1 + 3 - 2);
  CHECK(inv.sigma == 1 - 3);
}

TEST_CASE("characteristic subgraphs match exhaustive search") {
  std::mt19937_64 rng(222);
  for (int trial = 0; trial < 120; ++trial) {
    testutil::RandomGraphOptions opt;
    opt.max_vertices = trial % 10 == 0 ? 12 : 7;
    ChainmailGraph g = testutil::random_graph(rng, opt);
    SymIntMatrix a = laplacian(g);

    auto spins = characteristic_subgraphs(g);
    std::vector<uint32_t> brute = testutil::characteristic_masks_brute(a);
    REQUIRE(spins.size() == brute.size());
    CHECK(spins.size() == (size_t{1} << testutil::gf2_corank_oracle(a)));

    std::set<uint32_t> got;
    for (const auto& s : spins) {
      uint32_t mask = 0;
      for (int i : s.subgraph.indices()) mask |= uint32_t{1} << i;
      got.insert(mask);
      CHECK(s.f == testutil::f_oracle(g, s.subgraph.indices()));
      // Defining congruence, row by row: sum over S of a(i, j) = a(i, i) mod 2.
      for (int i = 0; i < a.size(); ++i) {
        mpz_class row_sum = 0;
        for (int j : s.subgraph.indices()) row_sum += a(i, j);
        CHECK((row_sum - a(i, i)) % 2 == 0);
      }
    }
    CHECK(got.size() == spins.size());  // all distinct
    std::set<uint32_t> want(brute.begin(), brute.end());
    CHECK(got == want);

    // Deterministic: a second call gives the identical sequence.
    auto again = characteristic_subgraphs(g);
    REQUIRE(again.size() == spins.size());
    for (size_t k = 0; k < spins.size(); ++k) {
      CHECK(again[k].subgraph == spins[k].subgraph);
      CHECK(again[k].f == spins[k].f);
    }
  }
}

TEST_CASE("kaplan simulation reproduces the framing") {
  ChainmailGraph g = testutil::dex();
  VertexSubset s = VertexSubset::of_ids(g, {"v1", "v2", "v3", "v4"});
  KaplanTrace trace = simulate_kaplan(g, s);
  CHECK(trace.final_framing == 3);
  REQUIRE(trace.steps.size() == 3);
  // Lexicographically first pair at every step.
  CHECK(trace.steps[0].kept == "v1");
  CHECK(trace.steps[0].absorbed == "v2");
  CHECK(trace.steps[0].weight == -5 + 0 + 2 * 1);
  CHECK(trace.steps[1].kept == "v1");
  CHECK(trace.steps[1].absorbed == "v3");
  CHECK(trace.steps[2].kept == "v1");
  CHECK(trace.steps[2].absorbed == "v4");

  CHECK(simulate_kaplan(g, VertexSubset::of_ids(g, {"v1", "v4"})).final_framing == -9);
  CHECK_THROWS_AS(simulate_kaplan(g, VertexSubset()), Error);
}

TEST_CASE("kaplan simulation is order-independent") {
  std::mt19937_64 rng(333);
  for (int trial = 0; trial < 80; ++trial) {
    testutil::RandomGraphOptions opt;
    opt.max_vertices = 6;
    ChainmailGraph g = testutil::random_graph(rng, opt);
    std::vector<int> subset;
    for (int i = 0; i < g.vertex_count(); ++i)
      if (rng() % 2) subset.push_back(i);
    if (subset.empty()) subset.push_back(0);
    VertexSubset s = VertexSubset::of_indices(g, subset);
    mpz_class want = f_value(g, s);
    CHECK(to_mpz(simulate_kaplan(g, s).final_framing) == want);
    for (uint64_t seed = 0; seed < 5; ++seed)
      CHECK(to_mpz(simulate_kaplan(g, s, seed).final_framing) == want);
  }
}

TEST_CASE("kaplan simulation survives every contraction order on small subsets") {
  std::mt19937_64 rng(444);
  for (int trial = 0; trial < 25; ++trial) {
    testutil::RandomGraphOptions opt;
    opt.max_vertices = 5;
    ChainmailGraph g = testutil::random_graph(rng, opt);
    std::vector<int> all(g.vertex_count());
    std::iota(all.begin(), all.end(), 0);
    VertexSubset s = VertexSubset::of_indices(g, all);
    mpz_class want = f_value(g, s);

    // Exhaust contraction orders directly on the library's contraction.
    std::function<void(const ChainmailGraph&)> walk = [&](const ChainmailGraph& cur) {
      if (cur.vertex_count() == 1) {
        CHECK(to_mpz(cur.vertex(0).weight) == want);
        return;
      }
      for (int i = 0; i < cur.vertex_count(); ++i)
        for (int j = 0; j < cur.vertex_count(); ++j) {
          if (i == j) continue;
          walk(contract_vertices(cur, cur.vertex(i).id, cur.vertex(j).id));
        }
    };
    if (g.vertex_count() <= 4) walk(induced_subgraph(g, s));
  }
}

TEST_CASE("homology helpers") {
  ChainmailGraph g = testutil::dex();
  CHECK(homology_order(g) == 4);
  CHECK(homology_group(g).to_text() == "1 1 1 4");
  CHECK(homology_name(homology_group(g)) == "Z/4");
  CHECK(homology_order(ChainmailGraph()) == 1);

  CHECK(homology_name(SnfDiagonal{{mpz_class(1), mpz_class(1)}}) == "1");
  CHECK(homology_name(SnfDiagonal{{mpz_class(2), mpz_class(0)}}) == "Z/2 + Z");
  CHECK(homology_name(SnfDiagonal{{mpz_class(0), mpz_class(0)}}) == "Z^2");
  CHECK(homology_name(SnfDiagonal{{mpz_class(1), mpz_class(2), mpz_class(6)}}) == "Z/2 + Z/6");
}
