#include "chainmail/pi1.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace chainmail {

GroupWord GroupWord::power(int gen, long long exp) {
  GroupWord w;
  w.append(gen, exp);
  return w;
}

GroupWord& GroupWord::append(int gen, long long exp) {
  if (exp == 0) return *this;
  if (!syl_.empty() && syl_.back().gen == gen) {
    syl_.back().exp += exp;
    if (syl_.back().exp == 0) syl_.pop_back();
    return *this;
  }
  syl_.push_back({gen, exp});
  return *this;
}

GroupWord& GroupWord::append(const GroupWord& w) {
  for (const auto& s : w.syl_) append(s.gen, s.exp);
  return *this;
}

GroupWord GroupWord::inverse() const {
  GroupWord w;
  for (auto it = syl_.rbegin(); it != syl_.rend(); ++it) w.append(it->gen, -it->exp);
  return w;
}

GroupWord GroupWord::substitute(int gen, const GroupWord& replacement) const {
  GroupWord out;
  for (const auto& s : syl_) {
    if (s.gen != gen) {
      out.append(s.gen, s.exp);
      continue;
    }
    if (replacement.syl_.size() <= 1) {
      if (!replacement.syl_.empty()) {
        __int128 e = static_cast<__int128>(replacement.syl_[0].exp) * s.exp;
        if (e > INT64_MAX || e < INT64_MIN)
          throw Error(errc::math, "substitution exponent overflows");
        out.append(replacement.syl_[0].gen, static_cast<long long>(e));
      }
      continue;
    }
    if (std::llabs(s.exp) > 1'000'000)
      throw Error(errc::math, "substitution would blow up the word");
    const GroupWord& block = s.exp > 0 ? replacement : replacement.inverse();
    for (long long t = 0; t < std::llabs(s.exp); ++t) out.append(block);
  }
  return out;
}

long long GroupWord::exponent_sum(int gen) const {
  long long sum = 0;
  for (const auto& s : syl_)
    if (s.gen == gen) sum += s.exp;
  return sum;
}

long long GroupWord::occurrences(int gen) const {
  long long count = 0;
  for (const auto& s : syl_)
    if (s.gen == gen) count += std::llabs(s.exp);
  return count;
}

std::vector<int> GroupWord::generators_used() const {
  std::vector<int> gens;
  for (const auto& s : syl_) gens.push_back(s.gen);
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  return gens;
}

GroupPresentation presentation_from_graph(const ChainmailGraph& g, NegEdgeRule rule) {
  (void)rule;  // only the inverse-factor convention exists
  GroupPresentation p;
  for (const auto& v : g.vertices()) p.generator_names.push_back("x_" + v.id);
  // Generator names follow the vertices; use plain x1..xn when ids are v1..vn.
  bool plain = true;
  for (int i = 0; i < g.vertex_count(); ++i)
    if (g.vertex(i).id != "v" + std::to_string(i + 1)) { plain = false; break; }
  if (plain)
    for (int i = 0; i < g.vertex_count(); ++i) p.generator_names[i] = "x" + std::to_string(i + 1);

  for (int v = 0; v < g.vertex_count(); ++v) {
    __int128 e_v = -static_cast<__int128>(g.vertex(v).weight);
    std::vector<int> incident;  // edge indices at v in factor order
    if (g.has_rotation()) {
      incident = g.rotation()[v];
    } else {
      for (size_t k = 0; k < g.edges().size(); ++k)
        if (g.edges()[k].u == v || g.edges()[k].v == v) incident.push_back(static_cast<int>(k));
      std::stable_sort(incident.begin(), incident.end(), [&](int a, int b) {
        int ua = g.edges()[a].u == v ? g.edges()[a].v : g.edges()[a].u;
        int ub = g.edges()[b].u == v ? g.edges()[b].v : g.edges()[b].u;
        return ua < ub;
      });
    }
    for (int k : incident) e_v -= g.edges()[k].sign;
    if (e_v > INT64_MAX || e_v < INT64_MIN)
      throw Error(errc::invalid, "relator exponent overflows");

    GroupWord r = GroupWord::power(v, static_cast<long long>(e_v));
    for (int k : incident) {
      const Edge& e = g.edges()[k];
      int u = e.u == v ? e.v : e.u;
      if (e.sign > 0) {
        r.append(u, -1).append(v, 1);
      } else {
        r.append(v, -1).append(u, 1);
      }
    }
    p.relators.push_back(std::move(r));
  }
  return p;
}

SnfDiagonal abelianization(const GroupPresentation& p) {
  size_t n = p.generator_names.size();
  if (p.relators.empty())
    return SnfDiagonal{std::vector<mpz_class>(n, mpz_class(0))};
  std::vector<std::vector<mpz_class>> rows;
  for (const auto& r : p.relators) {
    std::vector<mpz_class> row(n);
    for (size_t j = 0; j < n; ++j) row[j] = to_mpz(r.exponent_sum(static_cast<int>(j)));
    rows.push_back(std::move(row));
  }
  return smith_normal_form(rows);
}

namespace {

// Splits w = P g^e Q at the unique syllable of g and solves w = 1 for g.
GroupWord solve_for(const GroupWord& w, int gen) {
  GroupWord prefix, suffix;
  long long exp = 0;
  bool seen = false;
  for (const auto& s : w.syllables()) {
    if (s.gen == gen) {
      exp = s.exp;
      seen = true;
    } else {
      (seen ? suffix : prefix).append(s.gen, s.exp);
    }
  }
  GroupWord qp = suffix;
  qp.append(prefix);
  return exp > 0 ? qp.inverse() : qp;
}

}  // namespace

SimplificationResult kill_generator_and_simplify(const GroupPresentation& p,
                                                 const std::string& kill) {
  int killed = -1;
  for (size_t i = 0; i < p.generator_names.size(); ++i)
    if (p.generator_names[i] == kill) killed = static_cast<int>(i);
  if (killed < 0) throw Error(errc::bad_argument, "unknown generator \"" + kill + "\"");

  struct Slot {
    int original;
    GroupWord word;
  };
  std::vector<Slot> slots;
  std::vector<int> order;  // scan priority: killed-touching relators first
  for (size_t i = 0; i < p.relators.size(); ++i)
    slots.push_back({static_cast<int>(i), p.relators[i].substitute(killed, GroupWord())});
  for (size_t i = 0; i < p.relators.size(); ++i)
    if (p.relators[i].occurrences(killed) > 0) order.push_back(static_cast<int>(i));
  for (size_t i = 0; i < p.relators.size(); ++i)
    if (p.relators[i].occurrences(killed) == 0) order.push_back(static_cast<int>(i));

  std::vector<bool> alive(p.generator_names.size(), true);
  alive[killed] = false;
  std::vector<bool> active(p.relators.size(), true);
  std::vector<EliminationStep> log;
  std::vector<GroupWord> solved_words;

  bool progress = true;
  while (progress) {
    progress = false;
    for (int slot_idx : order) {
      if (!active[slot_idx]) continue;
      const GroupWord& w = slots[slot_idx].word;
      int candidate = -1;
      for (int gen : w.generators_used())
        if (w.occurrences(gen) == 1) { candidate = gen; break; }
      if (candidate < 0) continue;

      GroupWord solved = solve_for(w, candidate);
      active[slot_idx] = false;
      alive[candidate] = false;
      for (size_t i = 0; i < slots.size(); ++i)
        if (active[i]) slots[i].word = slots[i].word.substitute(candidate, solved);
      // Keep earlier solutions expressed in surviving generators.
      for (auto& prior : solved_words) prior = prior.substitute(candidate, solved);
      solved_words.push_back(solved);
      log.push_back({p.generator_names[candidate], solved});
      progress = true;
      break;
    }
  }

  // Renumber surviving generators.
  std::vector<int> remap(p.generator_names.size(), -1);
  GroupPresentation out;
  for (size_t i = 0; i < p.generator_names.size(); ++i) {
    if (!alive[i]) continue;
    remap[i] = static_cast<int>(out.generator_names.size());
    out.generator_names.push_back(p.generator_names[i]);
  }
  auto renumber = [&remap](const GroupWord& w) {
    GroupWord r;
    for (const auto& s : w.syllables()) {
      if (remap[s.gen] < 0) throw Error(errc::internal, "dead generator survived");
      r.append(remap[s.gen], s.exp);
    }
    return r;
  };
  for (size_t i = 0; i < slots.size(); ++i)
    if (active[i]) out.relators.push_back(renumber(slots[i].word));
  for (size_t i = 0; i < log.size(); ++i) log[i].solved = renumber(solved_words[i]);

  return {std::move(out), std::move(log)};
}

WeightOneCertificate weight_one_certificate(const GroupPresentation& p,
                                            const std::string& kill) {
  SimplificationResult sim = kill_generator_and_simplify(p, kill);
  WeightOneCertificate cert;
  cert.killed = kill;
  cert.log = sim.log;

  size_t survivors = sim.presentation.generator_names.size();
  if (survivors != 1) {
    cert.valid = false;
    cert.reason = survivors == 0
                      ? "no generator survives; the quotient collapsed before reaching the "
                        "single-generator form"
                      : std::to_string(survivors) +
                            " generators survive; simplification stalled";
    return cert;
  }
  cert.survivor = sim.presentation.generator_names[0];
  for (const auto& r : sim.presentation.relators)
    cert.final_exponents.push_back(r.exponent_sum(0));
  long long g = 0;
  for (long long e : cert.final_exponents) g = std::gcd(g, e);
  cert.gcd = g;
  cert.valid = g == 1;
  if (!cert.valid)
    cert.reason = cert.final_exponents.empty()
                      ? "no relators survive; the quotient is free of rank 1"
                      : "gcd of surviving exponents is " + std::to_string(g);
  return cert;
}

std::string word_to_text(const GroupPresentation& p, const GroupWord& w) {
  if (w.empty()) return "1";
  std::ostringstream out;
  bool first = true;
  for (const auto& s : w.syllables()) {
    if (!first) out << " ";
    first = false;
    out << p.generator_names.at(s.gen);
    if (s.exp != 1) out << "^" << s.exp;
  }
  return out.str();
}

}  // namespace chainmail
