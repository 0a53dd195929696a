#include "chainmail/spin.hpp"

#include <algorithm>
#include <functional>
#include <memory>
#include <random>
#include <sstream>

namespace chainmail {

mpz_class f_value(const ChainmailGraph& g, const VertexSubset& s) {
  mpz_class f = 0;
  const auto& idx = s.indices();
  for (int i : idx) f += to_mpz(g.vertex(i).weight);
  for (size_t a = 0; a < idx.size(); ++a)
    for (size_t b = a + 1; b < idx.size(); ++b)
      f += 2 * to_mpz(signed_edge_count(g, idx[a], idx[b]));
  return f;
}

std::vector<SpinStructure> characteristic_subgraphs(const ChainmailGraph& g) {
  SymIntMatrix a = laplacian(g);
  BitVec diag(a.size());
  for (int i = 0; i < a.size(); ++i) diag.set(i, mpz_odd_p(a(i, i).get_mpz_t()));
  Gf2AffineSolutionSet sol = solve_affine_gf2(a, diag);
  if (!sol.consistent)
    throw Error(errc::internal, "characteristic system unsolvable; A x = diag(A) over GF(2) "
                                "is always consistent for symmetric A");
  std::vector<SpinStructure> out;
  for (const BitVec& x : enumerate_gf2_solutions(sol)) {
    VertexSubset s = VertexSubset::of_bits(x);
    mpz_class f = f_value(g, s);
    out.push_back({std::move(s), std::move(f)});
  }
  return out;
}

FillingInvariants kaplan_invariants(const ChainmailGraph& g, const SpinStructure& s) {
  if (s.f == 0)
    throw DegenerateFraming("filling invariants undefined: framing f(" +
                            s.subgraph.to_text(g) + ") = 0");
  FillingInvariants inv;
  inv.b2 = g.vertex_count() + abs(s.f) - 2;
  inv.sigma = signature(laplacian(g)) - s.f;
  return inv;
}

namespace {

KaplanTrace run_kaplan(const ChainmailGraph& g, const VertexSubset& s,
                       const std::function<size_t(size_t)>& pick) {
  if (s.size() == 0)
    throw Error(errc::bad_argument, "cannot simulate on the empty subset");
  ChainmailGraph cur = induced_subgraph(g, s);
  KaplanTrace trace;
  while (cur.vertex_count() > 1) {
    // Candidate pairs (a, b) with id(a) < id(b), listed in lexicographic order.
    std::vector<std::pair<std::string, std::string>> pairs;
    std::vector<std::string> ids;
    for (const auto& v : cur.vertices()) ids.push_back(v.id);
    std::sort(ids.begin(), ids.end());
    for (size_t i = 0; i < ids.size(); ++i)
      for (size_t j = i + 1; j < ids.size(); ++j) pairs.emplace_back(ids[i], ids[j]);
    const auto& [a, b] = pairs[pick(pairs.size())];
    cur = contract_vertices(cur, a, b);
    trace.steps.push_back({a, b, cur.vertex(cur.require_index(a)).weight});
  }
  trace.final_framing = cur.vertex(0).weight;
  return trace;
}

}  // namespace

KaplanTrace simulate_kaplan(const ChainmailGraph& g, const VertexSubset& s) {
  return run_kaplan(g, s, [](size_t) { return size_t{0}; });
}

KaplanTrace simulate_kaplan(const ChainmailGraph& g, const VertexSubset& s, uint64_t seed) {
  auto rng = std::make_shared<std::mt19937_64>(seed);
  // Plain modulo keeps the draw sequence identical across standard libraries.
  return run_kaplan(g, s, [rng](size_t n) { return static_cast<size_t>((*rng)() % n); });
}

mpz_class homology_order(const ChainmailGraph& g) {
  return abs(determinant(laplacian(g)));
}

SnfDiagonal homology_group(const ChainmailGraph& g) {
  return smith_normal_form(laplacian(g));
}

std::string homology_name(const SnfDiagonal& d) {
  std::vector<std::string> parts;
  int free_rank = 0;
  for (const auto& f : d.factors) {
    if (f == 0) ++free_rank;
    else if (f != 1) parts.push_back("Z/" + f.get_str());
  }
  if (free_rank == 1) parts.push_back("Z");
  else if (free_rank > 1) parts.push_back("Z^" + std::to_string(free_rank));
  if (parts.empty()) return "1";
  std::ostringstream out;
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) out << " + ";
    out << parts[i];
  }
  return out.str();
}

}  // namespace chainmail
