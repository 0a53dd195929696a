#pragma once

#include <optional>
#include <string>
#include <vector>

#include "chainmail/graph.hpp"
#include "chainmail/linalg.hpp"

namespace chainmail {

// Freely reduced word in abstract generators: a run of syllables g^e with
// nonzero exponents and distinct adjacent generators.
class GroupWord {
public:
  struct Syllable {
    int gen = 0;
    long long exp = 0;

    bool operator==(const Syllable&) const = default;
  };

  GroupWord() = default;
  static GroupWord power(int gen, long long exp);

  const std::vector<Syllable>& syllables() const { return syl_; }
  bool empty() const { return syl_.empty(); }

  GroupWord& append(int gen, long long exp);
  GroupWord& append(const GroupWord& w);
  GroupWord inverse() const;

  // Replaces every g^e by replacement^e and freely reduces.
  GroupWord substitute(int gen, const GroupWord& replacement) const;

  long long exponent_sum(int gen) const;
  // Total letter count of `gen`, i.e. the sum of |e| over its syllables.
  long long occurrences(int gen) const;
  std::vector<int> generators_used() const;

  bool operator==(const GroupWord&) const = default;

private:
  std::vector<Syllable> syl_;
};

struct GroupPresentation {
  std::vector<std::string> generator_names;  // index = generator id in words
  std::vector<GroupWord> relators;
};

// Negative-edge relator convention. Only the inverse-factor rule is
// implemented; mixed-sign graphs are flagged experimental in reports.
enum class NegEdgeRule { inverse_factor };

// Generators x1..xn, one per vertex in declaration order. The relator of
// vertex v is x_v^(e(v)) followed by one factor (x_u^-1 x_v)^(sign e) per
// incident edge, where e(v) = -weight(v) - (signed incident sum); factors
// follow the rotation system when present and otherwise pair declaration
// order of the far endpoint with canonical edge order.
GroupPresentation presentation_from_graph(const ChainmailGraph& g,
                                          NegEdgeRule rule = NegEdgeRule::inverse_factor);

// Invariant factors of the relator exponent matrix (rows = relators,
// columns = generators); for a chainmail presentation this matches the
// homology of the surgered manifold.
SnfDiagonal abelianization(const GroupPresentation& p);

struct EliminationStep {
  std::string eliminated;
  GroupWord solved;  // the eliminated generator, written in the survivors
};

struct SimplificationResult {
  GroupPresentation presentation;
  std::vector<EliminationStep> log;
};

// Sets `kill` to the identity, then repeatedly eliminates: relators that
// contained the killed generator are scanned first (in original order), the
// rest afterwards; within a relator the earliest-declared generator occurring
// exactly once is solved for, its relator is consumed, and the scan restarts.
// Relators that reduce to the empty word are kept.
SimplificationResult kill_generator_and_simplify(const GroupPresentation& p,
                                                 const std::string& kill);

struct WeightOneCertificate {
  bool valid = false;
  std::string killed;
  std::vector<EliminationStep> log;
  std::optional<std::string> survivor;
  std::vector<long long> final_exponents;  // exponent sums of surviving relators
  long long gcd = 0;
  std::string reason;  // set when not valid
};

// Valid exactly when one generator survives the simplification and the gcd of
// the surviving relator exponents is 1 (the quotient by the killed generator's
// normal closure is then visibly trivial).
WeightOneCertificate weight_one_certificate(const GroupPresentation& p, const std::string& kill);

// "x1^3 x2^-1 x1" (identity word prints as "1").
std::string word_to_text(const GroupPresentation& p, const GroupWord& w);

}  // namespace chainmail
