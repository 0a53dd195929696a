#pragma once

#include <optional>
#include <string>
#include <vector>

#include "chainmail/graph.hpp"
#include "chainmail/linalg.hpp"
#include "chainmail/spin.hpp"

namespace chainmail {

// A one-parameter family: member n is the base graph with the pivot's weight
// lowered by 2n.
struct FamilySpec {
  ChainmailGraph base;
  std::string pivot;
};

ChainmailGraph family_member(const FamilySpec& spec, unsigned long n);

struct HypothesisReport {
  mpz_class det;
  bool det_nonzero = false;
  bool det_even = false;
  bool pivot_in_all = false;
  std::optional<std::pair<std::string, std::string>> mirror_pair;

  bool all_pass() const {
    return det_nonzero && det_even && pivot_in_all && mirror_pair.has_value();
  }
  std::string to_text() const;
};

// (1) det != 0 and even; (2) the pivot lies in every characteristic subgraph;
// (3) some pair v', v'' away from the pivot has equal weights, matching signed
// counts to every third vertex, and signed count between them equal to that
// weight. The first qualifying pair in declaration order is reported.
HypothesisReport check_genex_hypotheses(const ChainmailGraph& g, const std::string& pivot);

struct FramingSequence {
  std::string subset;  // "{v1,v4}"
  mpz_class f0;
  int slope = 0;  // -2 when the pivot lies in the subset, else 0
};

struct InvarianceReport {
  unsigned long n_max = 0;
  mpz_class det0;
  bool det_constant = false;
  bool spins_constant = false;
  bool slopes_ok = false;
  std::vector<std::string> failures;
  std::vector<FramingSequence> sequences;

  bool all_pass() const { return det_constant && spins_constant && slopes_ok; }
};

// Recomputes determinant, characteristic subgraphs and framings for every
// member n = 0..n_max and compares them with the base-member predictions.
InvarianceReport verify_family_invariance(const FamilySpec& spec, unsigned long n_max);

// One evaluation of the obstruction chain at member n.
struct ChainEvaluation {
  mpz_class n, f, b2_upper, sigma_lower;
  mpz_class lhs;  // 4 * b2_upper
  mpz_class rhs;  // 5 * sigma_lower + 8
  bool holds = false;
};

struct SpinChainReport {
  std::string subset;
  mpz_class f0;
  std::optional<mpz_class> degenerate_n;  // member with vanishing framing, if any
  mpz_class minimal_n;
  ChainEvaluation witness;                    // chain at minimal_n
  std::optional<ChainEvaluation> boundary;    // chain at minimal_n - 1
};

struct ObstructionCertificate {
  std::string graph_json;
  std::string pivot;
  HypothesisReport hypotheses;
  mpz_class b_count;    // B = vertex count
  mpz_class h_order;    // h = |det|
  mpz_class abs_sigma;  // |signature of the base Laplacian|
  mpz_class threshold;  // chain holds iff |f| > threshold
  mpz_class threshold_furuta;
  mpz_class threshold_positivity;
  std::vector<SpinChainReport> spins;
  mpz_class n_threshold;  // N = max over spins of minimal_n

  std::string to_text() const;
};

// Derives the least N such that for every n >= N and every spin structure the
// filling bounds b2_upper(n) = |f(n)| + B + h - 1 and
// sigma_lower(n) = |f(n)| - |sigma_A| - h - 1 violate the spin inequality
// 4*b2 >= 5*|sigma| + 8. Throws errc::math when the hypotheses fail.
ObstructionCertificate obstruction_threshold(const FamilySpec& spec);

struct ProspectOptions {
  int max_vertices = 4;
  long long weight_min = -5;
  long long weight_max = 0;
  int max_multiplicity = 3;
  unsigned long long candidate_cap = 200'000'000;
  int threads = 0;  // 0: hardware count, capped by CHAINMAIL_THREADS
};

struct ProspectResult {
  std::vector<FamilySpec> specs;  // canonical forms, sorted
  unsigned long long candidates = 0;
  bool partial = false;
};

// Enumerates weighted signed-count graphs inside the bounds (weights
// non-decreasing, one representative per isomorphism class), keeping every
// (graph, pivot) that passes all three hypotheses. Parallel edges of mixed
// sign are redundant for these checks, so representatives carry
// sign-homogeneous multiedges only.
ProspectResult prospect_base_graphs(const ProspectOptions& opts);

// Lexicographically least relabeling of (weights, signed counts, pivot).
// Requires sign-homogeneous parallel edges.
FamilySpec canonical_family_spec(const FamilySpec& spec);

}  // namespace chainmail
