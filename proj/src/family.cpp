#include "chainmail/family.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cstdlib>
#include <numeric>
#include <set>
#include <sstream>
#include <thread>

namespace chainmail {

ChainmailGraph family_member(const FamilySpec& spec, unsigned long n) {
  int p = spec.base.require_index(spec.pivot);
  __int128 w = static_cast<__int128>(spec.base.vertex(p).weight) -
               2 * static_cast<__int128>(n);
  if (w < INT64_MIN) throw Error(errc::invalid, "family member weight overflows");

  GraphData d;
  d.vertices = spec.base.vertices();
  d.vertices[p].weight = static_cast<long long>(w);
  for (const auto& e : spec.base.edges())
    d.edges.push_back({spec.base.vertex(e.u).id, spec.base.vertex(e.v).id, e.sign});
  if (spec.base.has_rotation()) {
    std::map<std::string, std::vector<int>> rot;
    for (int i = 0; i < spec.base.vertex_count(); ++i)
      rot[spec.base.vertex(i).id] = spec.base.rotation()[i];
    d.rotation = std::move(rot);
  }
  return build_graph(d);
}

std::string HypothesisReport::to_text() const {
  std::ostringstream out;
  out << "hypothesis-1 determinant nonzero and even: "
      << (det_nonzero && det_even ? "pass" : "FAIL") << " det=" << det.get_str() << "\n";
  out << "hypothesis-2 pivot in every characteristic subgraph: "
      << (pivot_in_all ? "pass" : "FAIL") << "\n";
  out << "hypothesis-3 mirror pair: ";
  if (mirror_pair)
    out << "pass pair=(" << mirror_pair->first << "," << mirror_pair->second << ")";
  else
    out << "FAIL";
  out << "\n";
  return out.str();
}

HypothesisReport check_genex_hypotheses(const ChainmailGraph& g, const std::string& pivot) {
  int p = g.require_index(pivot);
  HypothesisReport rep;
  rep.det = determinant(laplacian(g));
  rep.det_nonzero = rep.det != 0;
  rep.det_even = mpz_even_p(rep.det.get_mpz_t()) != 0;

  rep.pivot_in_all = true;
  for (const auto& s : characteristic_subgraphs(g))
    if (!s.subgraph.contains(p)) { rep.pivot_in_all = false; break; }

  int n = g.vertex_count();
  for (int i = 0; i < n && !rep.mirror_pair; ++i) {
    if (i == p) continue;
    for (int j = i + 1; j < n; ++j) {
      if (j == p) continue;
      if (g.vertex(i).weight != g.vertex(j).weight) continue;
      if (signed_edge_count(g, i, j) != g.vertex(i).weight) continue;
      bool mirror = true;
      for (int x = 0; x < n && mirror; ++x) {
        if (x == p || x == i || x == j) continue;
        mirror = signed_edge_count(g, x, i) == signed_edge_count(g, x, j);
      }
      if (mirror) { rep.mirror_pair = {g.vertex(i).id, g.vertex(j).id}; break; }
    }
  }
  return rep;
}

InvarianceReport verify_family_invariance(const FamilySpec& spec, unsigned long n_max) {
  if (n_max > 1'000'000)
    throw Error(errc::bad_argument, "n_max too large");
  InvarianceReport rep;
  rep.n_max = n_max;
  rep.det0 = determinant(laplacian(spec.base));
  rep.det_constant = rep.spins_constant = rep.slopes_ok = true;

  int p = spec.base.require_index(spec.pivot);
  auto base_spins = characteristic_subgraphs(spec.base);
  for (const auto& s : base_spins)
    rep.sequences.push_back(
        {s.subgraph.to_text(spec.base), s.f, s.subgraph.contains(p) ? -2 : 0});

  auto note = [&rep](const std::string& msg) {
    if (rep.failures.size() < 16) rep.failures.push_back(msg);
  };

  for (unsigned long n = 0; n <= n_max; ++n) {
    ChainmailGraph g = family_member(spec, n);
    mpz_class det_n = determinant(laplacian(g));
    if (det_n != rep.det0) {
      rep.det_constant = false;
      note("det drift at n=" + std::to_string(n) + ": " + det_n.get_str() + " != " +
           rep.det0.get_str());
    }
    auto spins_n = characteristic_subgraphs(g);
    if (spins_n.size() != base_spins.size()) {
      rep.spins_constant = false;
      note("spin count changed at n=" + std::to_string(n));
      continue;
    }
    for (size_t i = 0; i < spins_n.size(); ++i) {
      if (!(spins_n[i].subgraph == base_spins[i].subgraph)) {
        rep.spins_constant = false;
        note("characteristic subgraph changed at n=" + std::to_string(n) + ": " +
             spins_n[i].subgraph.to_text(g));
        continue;
      }
      mpz_class expected = rep.sequences[i].f0 + mpz_class(rep.sequences[i].slope) * n;
      if (spins_n[i].f != expected) {
        rep.slopes_ok = false;
        note("framing off the line at n=" + std::to_string(n) + " on " +
             rep.sequences[i].subset + ": " + spins_n[i].f.get_str() + " != " +
             expected.get_str());
      }
    }
  }
  return rep;
}

namespace {

ChainEvaluation eval_chain(const mpz_class& b_count, const mpz_class& h_order,
                           const mpz_class& abs_sigma, const mpz_class& f0,
                           const mpz_class& n) {
  ChainEvaluation e;
  e.n = n;
  e.f = f0 - 2 * n;
  mpz_class af = abs(e.f);
  e.b2_upper = af + b_count + h_order - 1;
  e.sigma_lower = af - abs_sigma - h_order - 1;
  e.lhs = 4 * e.b2_upper;
  e.rhs = 5 * e.sigma_lower + 8;
  e.holds = e.sigma_lower > 0 && e.lhs < e.rhs;
  return e;
}

std::string chain_line(const ChainEvaluation& e) {
  std::ostringstream out;
  out << "n=" << e.n.get_str() << " f=" << e.f.get_str()
      << " |f|=" << mpz_class(abs(e.f)).get_str()
      << " b2_upper=" << e.b2_upper.get_str() << " sigma_lower=" << e.sigma_lower.get_str()
      << " 4*b2_upper=" << e.lhs.get_str() << " 5*sigma_lower+8=" << e.rhs.get_str()
      << " holds=" << (e.holds ? "yes" : "no");
  return out.str();
}

std::string framing_poly(const mpz_class& f0, int slope) {
  std::string s = f0.get_str();
  if (slope == 0) return s;
  if (f0 == 0) return "-2n";
  return s + "-2n";
}

}  // namespace

ObstructionCertificate obstruction_threshold(const FamilySpec& spec) {
  HypothesisReport hyp = check_genex_hypotheses(spec.base, spec.pivot);
  if (!hyp.all_pass())
    throw Error(errc::math, "no certificate: hypotheses fail\n" + hyp.to_text());

  ObstructionCertificate cert;
  cert.graph_json = serialize_graph(spec.base);
  cert.pivot = spec.pivot;
  cert.hypotheses = hyp;
  cert.b_count = spec.base.vertex_count();
  cert.h_order = abs(hyp.det);
  cert.abs_sigma = abs(mpz_class(signature(laplacian(spec.base))));
  cert.threshold_furuta = 4 * cert.b_count + 9 * cert.h_order + 5 * cert.abs_sigma - 7;
  cert.threshold_positivity = cert.abs_sigma + cert.h_order + 1;
  cert.threshold = std::max(cert.threshold_furuta, cert.threshold_positivity);

  for (const auto& s : characteristic_subgraphs(spec.base)) {
    SpinChainReport rep;
    rep.subset = s.subgraph.to_text(spec.base);
    rep.f0 = s.f;
    if (mpz_even_p(s.f.get_mpz_t()) && s.f >= 0) rep.degenerate_n = s.f / 2;

    // |f0 - 2m| <= threshold exactly for m <= floor((f0 + threshold) / 2),
    // so the first member past every failure is that floor plus one.
    mpz_class m_hi;
    mpz_class num = s.f + cert.threshold;
    mpz_fdiv_q_2exp(m_hi.get_mpz_t(), num.get_mpz_t(), 1);
    rep.minimal_n = m_hi < 0 ? mpz_class(0) : mpz_class(m_hi + 1);

    rep.witness = eval_chain(cert.b_count, cert.h_order, cert.abs_sigma, s.f, rep.minimal_n);
    if (!rep.witness.holds)
      throw Error(errc::internal, "chain does not hold at its own minimal n");
    if (rep.minimal_n > 0) {
      rep.boundary =
          eval_chain(cert.b_count, cert.h_order, cert.abs_sigma, s.f, rep.minimal_n - 1);
      if (rep.boundary->holds)
        throw Error(errc::internal, "chain already holds below the minimal n");
    }
    if (rep.minimal_n > cert.n_threshold) cert.n_threshold = rep.minimal_n;
    cert.spins.push_back(std::move(rep));
  }
  return cert;
}

std::string ObstructionCertificate::to_text() const {
  std::ostringstream out;
  out << "chainmail certificate v1\n";
  out << "graph: " << graph_json << "\n";
  out << "pivot: " << pivot << "\n";
  out << "family rule: w_n(pivot) = w_0(pivot) - 2n\n";
  out << hypotheses.to_text();
  out << "bounds: B=" << b_count.get_str() << " h=" << h_order.get_str()
      << " |sigma_A|=" << abs_sigma.get_str() << "\n";
  out << "filling: b2_upper(n) = |f(n)| + B + h - 1 ; sigma_lower(n) = |f(n)| - |sigma_A| - h"
         " - 1\n";
  out << "predicate: spin obstruction at n means sigma_lower(n) > 0 and 4*b2_upper(n) <"
         " 5*sigma_lower(n) + 8\n";
  out << "threshold: both hold iff |f(n)| > max(4B + 9h + 5|sigma_A| - 7, |sigma_A| + h + 1)"
         " = max(" << threshold_furuta.get_str() << ", " << threshold_positivity.get_str()
      << ") = " << threshold.get_str() << "\n";
  for (const auto& s : spins) {
    out << "spin: S=" << s.subset << " f(n)=" << framing_poly(s.f0, -2) << "\n";
    if (s.degenerate_n)
      out << "  degenerate: n=" << s.degenerate_n->get_str()
          << " f=0 (member skipped; framing vanishes)\n";
    out << "  minimal-n: " << s.minimal_n.get_str() << "\n";
    out << "  witness: " << chain_line(s.witness) << "\n";
    if (s.boundary) out << "  boundary: " << chain_line(*s.boundary) << "\n";
  }
  out << "N: " << n_threshold.get_str() << "\n";
  out << "statement: for all n >= " << n_threshold.get_str()
      << ", Y_D_n is not Dehn surgery on a knot in S^3\n";
  return out.str();
}

// ---------------------------------------------------------------------------
// Prospecting.

namespace {

constexpr int kMaxProspect = 8;

struct Cand {
  int k = 0;
  std::array<long long, kMaxProspect> w{};
  int mu[kMaxProspect][kMaxProspect] = {};
};

__int128 det128(const Cand& c) {
  __int128 a[kMaxProspect][kMaxProspect];
  for (int i = 0; i < c.k; ++i)
    for (int j = 0; j < c.k; ++j) a[i][j] = i == j ? c.w[i] : c.mu[i][j];
  int sign = 1;
  __int128 prev = 1;
  for (int t = 0; t + 1 < c.k; ++t) {
    int p = -1;
    for (int i = t; i < c.k; ++i)
      if (a[i][t] != 0) { p = i; break; }
    if (p < 0) return 0;
    if (p != t) {
      for (int j = 0; j < c.k; ++j) std::swap(a[p][j], a[t][j]);
      sign = -sign;
    }
    for (int i = t + 1; i < c.k; ++i)
      for (int j = t + 1; j < c.k; ++j)
        a[i][j] = (a[i][j] * a[t][t] - a[i][t] * a[t][j]) / prev;
    prev = a[t][t];
  }
  return sign * a[c.k - 1][c.k - 1];
}

// AND-mask over all GF(2) solutions of A x = diag(A); bit p set means vertex p
// lies in every characteristic subgraph. Second return: solvable (always true
// in practice).
uint32_t char_subgraph_mask(const Cand& c) {
  int k = c.k;
  std::array<uint32_t, kMaxProspect> rows{};
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      long long v = i == j ? c.w[i] : c.mu[i][j];
      if (v & 1) rows[i] |= uint32_t{1} << j;
    }
    if (c.w[i] & 1) rows[i] |= uint32_t{1} << k;  // rhs
  }
  std::array<int, kMaxProspect> pivot_col{};
  int r = 0;
  for (int col = 0; col < k && r < k; ++col) {
    int p = -1;
    for (int i = r; i < k; ++i)
      if (rows[i] >> col & 1) { p = i; break; }
    if (p < 0) continue;
    std::swap(rows[p], rows[r]);
    for (int i = 0; i < k; ++i)
      if (i != r && (rows[i] >> col & 1)) rows[i] ^= rows[r];
    pivot_col[r++] = col;
  }
  for (int i = r; i < k; ++i)
    if (rows[i] >> k & 1) return 0;  // inconsistent: no solutions, mask empty

  uint32_t particular = 0;
  for (int i = 0; i < r; ++i)
    if (rows[i] >> k & 1) particular |= uint32_t{1} << pivot_col[i];
  std::array<uint32_t, kMaxProspect> basis{};
  int dim = 0;
  uint32_t is_pivot = 0;
  for (int i = 0; i < r; ++i) is_pivot |= uint32_t{1} << pivot_col[i];
  for (int col = 0; col < k; ++col) {
    if (is_pivot >> col & 1) continue;
    uint32_t v = uint32_t{1} << col;
    for (int i = 0; i < r; ++i)
      if (rows[i] >> col & 1) v |= uint32_t{1} << pivot_col[i];
    basis[dim++] = v;
  }
  uint32_t mask = particular;
  for (uint32_t t = 1; t < (uint32_t{1} << dim); ++t) {
    uint32_t x = particular;
    for (int b = 0; b < dim; ++b)
      if (t >> b & 1) x ^= basis[b];
    mask &= x;
  }
  return mask;
}

bool mirror_for_pivot(const Cand& c, int p, int* out_i, int* out_j) {
  for (int i = 0; i < c.k; ++i) {
    if (i == p) continue;
    for (int j = i + 1; j < c.k; ++j) {
      if (j == p) continue;
      if (c.w[i] != c.w[j] || c.mu[i][j] != c.w[i]) continue;
      bool ok = true;
      for (int x = 0; x < c.k && ok; ++x) {
        if (x == p || x == i || x == j) continue;
        ok = c.mu[x][i] == c.mu[x][j];
      }
      if (ok) {
        if (out_i) *out_i = i;
        if (out_j) *out_j = j;
        return true;
      }
    }
  }
  return false;
}

// weights ++ upper-triangle counts ++ pivot position, minimized over all
// relabelings.
std::vector<long long> canonical_key(const Cand& c, int pivot) {
  std::array<int, kMaxProspect> perm{};
  std::iota(perm.begin(), perm.begin() + c.k, 0);
  std::vector<long long> best;
  std::vector<long long> cur;
  cur.reserve(1 + c.k + c.k * (c.k - 1) / 2 + 1);
  do {
    cur.clear();
    cur.push_back(c.k);
    for (int i = 0; i < c.k; ++i) cur.push_back(c.w[perm[i]]);
    for (int i = 0; i < c.k; ++i)
      for (int j = i + 1; j < c.k; ++j) cur.push_back(c.mu[perm[i]][perm[j]]);
    for (int i = 0; i < c.k; ++i)
      if (perm[i] == pivot) { cur.push_back(i); break; }
    if (best.empty() || cur < best) best = cur;
  } while (std::next_permutation(perm.begin(), perm.begin() + c.k));
  return best;
}

FamilySpec spec_from_key(const std::vector<long long>& key) {
  int k = static_cast<int>(key[0]);
  GraphData d;
  for (int i = 0; i < k; ++i) d.vertices.push_back({"v" + std::to_string(i + 1), key[1 + i]});
  int pos = 1 + k;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) {
      long long m = key[pos++];
      for (long long t = 0; t < std::llabs(m); ++t)
        d.edges.push_back({d.vertices[i].id, d.vertices[j].id, m > 0 ? 1 : -1});
    }
  FamilySpec spec;
  spec.base = build_graph(d);
  spec.pivot = "v" + std::to_string(key[pos] + 1);
  return spec;
}

void scan_candidate(const Cand& c, std::set<std::vector<long long>>& out) {
  bool plausible = false;
  for (int i = 0; i < c.k && !plausible; ++i)
    for (int j = i + 1; j < c.k; ++j)
      if (c.w[i] == c.w[j] && c.mu[i][j] == c.w[i]) { plausible = true; break; }
  if (!plausible) return;

  __int128 det = det128(c);
  if (det == 0 || (static_cast<long long>(det & 1)) != 0) return;

  uint32_t in_all = char_subgraph_mask(c);
  if (!in_all) return;
  for (int p = 0; p < c.k; ++p) {
    if (!(in_all >> p & 1)) continue;
    if (mirror_for_pivot(c, p, nullptr, nullptr)) out.insert(canonical_key(c, p));
  }
}

struct ProspectTask {
  int k = 0;
  std::array<long long, kMaxProspect> weights{};
  unsigned long long size = 0;  // candidate count
};

void run_task(const ProspectTask& task, const ProspectOptions& opts,
              std::set<std::vector<long long>>& out) {
  Cand c;
  c.k = task.k;
  c.w = task.weights;
  int pairs = task.k * (task.k - 1) / 2;
  std::vector<int> digits(pairs, -opts.max_multiplicity);
  auto load = [&] {
    int d = 0;
    for (int i = 0; i < c.k; ++i)
      for (int j = i + 1; j < c.k; ++j) {
        c.mu[i][j] = digits[d];
        c.mu[j][i] = digits[d];
        ++d;
      }
  };
  while (true) {
    load();
    scan_candidate(c, out);
    int d = pairs - 1;
    while (d >= 0 && digits[d] == opts.max_multiplicity) digits[d--] = -opts.max_multiplicity;
    if (d < 0) break;
    ++digits[d];
  }
}

int worker_count(const ProspectOptions& opts, size_t tasks) {
  int n = opts.threads > 0 ? opts.threads
                           : static_cast<int>(std::thread::hardware_concurrency());
  if (n < 1) n = 1;
  if (const char* env = std::getenv("CHAINMAIL_THREADS")) {
    int cap = std::atoi(env);
    if (cap >= 1 && cap < n) n = cap;
  }
  if (static_cast<size_t>(n) > tasks) n = tasks ? static_cast<int>(tasks) : 1;
  return n;
}

}  // namespace

ProspectResult prospect_base_graphs(const ProspectOptions& opts) {
  if (opts.max_vertices < 1 || opts.max_vertices > kMaxProspect)
    throw Error(errc::bad_argument, "max_vertices must be in [1, 8]");
  if (opts.weight_min > opts.weight_max)
    throw Error(errc::bad_argument, "weight_min must not exceed weight_max");
  if (opts.weight_min < -1000 || opts.weight_max > 1000)
    throw Error(errc::bad_argument, "weights must lie in [-1000, 1000]");
  if (opts.max_multiplicity < 0 || opts.max_multiplicity > 1000)
    throw Error(errc::bad_argument, "max_multiplicity must be in [0, 1000]");
  if (opts.candidate_cap < 1 || opts.candidate_cap > 1'000'000'000'000ull)
    throw Error(errc::bad_argument, "candidate_cap must be in [1, 1e12]");

  // One task per non-decreasing weight sequence; adjacency digits spin inside.
  std::vector<ProspectTask> tasks;
  for (int k = 3; k <= opts.max_vertices; ++k) {
    unsigned long long per = 1;
    bool overflow = false;
    for (int p = 0; p < k * (k - 1) / 2; ++p) {
      unsigned long long m = 2ull * opts.max_multiplicity + 1;
      if (per > opts.candidate_cap * 2 / m + 1) { overflow = true; break; }
      per *= m;
    }
    std::vector<long long> seq(k, opts.weight_min);
    while (true) {
      ProspectTask t;
      t.k = k;
      std::copy(seq.begin(), seq.end(), t.weights.begin());
      t.size = overflow ? opts.candidate_cap + 1 : per;
      tasks.push_back(t);
      int d = k - 1;
      while (d >= 0 && seq[d] == opts.weight_max) --d;
      if (d < 0) break;
      ++seq[d];
      for (int i = d + 1; i < k; ++i) seq[i] = seq[d];
    }
  }

  ProspectResult result;
  size_t runnable = 0;
  unsigned long long budget = opts.candidate_cap;
  for (const auto& t : tasks) {
    if (t.size > budget) { result.partial = true; break; }
    budget -= t.size;
    result.candidates += t.size;
    ++runnable;
  }

  std::vector<std::set<std::vector<long long>>> found(runnable);
  std::atomic<size_t> next{0};
  int workers = worker_count(opts, runnable);
  auto work = [&] {
    while (true) {
      size_t i = next.fetch_add(1);
      if (i >= runnable) break;
      run_task(tasks[i], opts, found[i]);
    }
  };
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int i = 0; i < workers; ++i) pool.emplace_back(work);
    for (auto& th : pool) th.join();
  }

  std::vector<std::vector<long long>> keys;
  for (auto& s : found) keys.insert(keys.end(), s.begin(), s.end());
  std::sort(keys.begin(), keys.end());
  keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
  for (const auto& key : keys) result.specs.push_back(spec_from_key(key));
  return result;
}

FamilySpec canonical_family_spec(const FamilySpec& spec) {
  int k = spec.base.vertex_count();
  if (k < 1 || k > kMaxProspect)
    throw Error(errc::bad_argument, "canonical form supports 1..8 vertices");
  Cand c;
  c.k = k;
  for (int i = 0; i < k; ++i) c.w[i] = spec.base.vertex(i).weight;
  for (const auto& e : spec.base.edges()) {
    int cur = c.mu[e.u][e.v];
    if ((cur > 0 && e.sign < 0) || (cur < 0 && e.sign > 0))
      throw Error(errc::bad_argument,
                  "mixed-sign parallel edges have no canonical representative");
    c.mu[e.u][e.v] += e.sign;
    c.mu[e.v][e.u] = c.mu[e.u][e.v];
  }
  return spec_from_key(canonical_key(c, spec.base.require_index(spec.pivot)));
}

}  // namespace chainmail
