#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "chainmail/graph.hpp"
#include "chainmail/linalg.hpp"

namespace chainmail {

// A spin structure on the surgered manifold, encoded by its characteristic
// subgraph S (a solution of A x = diag(A) over GF(2)) and the framing f(S).
struct SpinStructure {
  VertexSubset subgraph;
  mpz_class f;
};

struct FillingInvariants {
  mpz_class b2;
  mpz_class sigma;
};

struct KaplanStep {
  std::string kept;
  std::string absorbed;
  long long weight = 0;  // weight of the merged vertex after this contraction
};

struct KaplanTrace {
  std::vector<KaplanStep> steps;
  long long final_framing = 0;
};

// Sum of the subset's weights plus twice the signed edge count over unordered
// pairs inside it; equals 1_S^T A 1_S.
mpz_class f_value(const ChainmailGraph& g, const VertexSubset& s);

// All characteristic subgraphs, deterministically ordered: the particular
// GF(2) solution first, then Gray-code steps over the kernel basis. There are
// exactly 2^(mod-2 corank of the Laplacian) of them.
std::vector<SpinStructure> characteristic_subgraphs(const ChainmailGraph& g);

// b2 = |V| + |f| - 2 and sigma = signature(A) - f for the Kaplan filling.
// Throws DegenerateFraming when f == 0.
FillingInvariants kaplan_invariants(const ChainmailGraph& g, const SpinStructure& s);

// Repeatedly contracts pairs inside S until one vertex remains and reports
// each step; the surviving weight must equal f_value(g, S). The default picks
// the lexicographically smallest id pair at every step; the seeded overload
// draws pairs from a deterministic generator instead.
KaplanTrace simulate_kaplan(const ChainmailGraph& g, const VertexSubset& s);
KaplanTrace simulate_kaplan(const ChainmailGraph& g, const VertexSubset& s, uint64_t seed);

// |det A|; 0 encodes an infinite first homology group.
mpz_class homology_order(const ChainmailGraph& g);

// Invariant factors of the first homology group.
SnfDiagonal homology_group(const ChainmailGraph& g);

// "Z/4", "Z/2 + Z", "Z^2", "1" from invariant factors.
std::string homology_name(const SnfDiagonal& d);

}  // namespace chainmail
