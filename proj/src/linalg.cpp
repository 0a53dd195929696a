#include "chainmail/linalg.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

namespace chainmail {

SymIntMatrix SymIntMatrix::from_rows(const std::vector<std::vector<mpz_class>>& rows) {
  int n = static_cast<int>(rows.size());
  SymIntMatrix m(n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(rows[i].size()) != n)
      throw Error(errc::bad_argument, "matrix rows must form a square array");
    for (int j = 0; j < n; ++j) m.a_[m.idx(i, j)] = rows[i][j];
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (m(i, j) != m(j, i))
        throw Error(errc::bad_argument, "matrix is not symmetric");
  return m;
}

SymIntMatrix SymIntMatrix::principal_submatrix(const std::vector<int>& keep) const {
  SymIntMatrix r(static_cast<int>(keep.size()));
  for (size_t i = 0; i < keep.size(); ++i)
    for (size_t j = 0; j < keep.size(); ++j)
      r.a_[r.idx(static_cast<int>(i), static_cast<int>(j))] = (*this)(keep[i], keep[j]);
  return r;
}

std::string SymIntMatrix::to_text() const {
  std::ostringstream out;
  out << "[";
  for (int i = 0; i < n_; ++i) {
    if (i) out << ", ";
    out << "[";
    for (int j = 0; j < n_; ++j) {
      if (j) out << ", ";
      out << (*this)(i, j).get_str();
    }
    out << "]";
  }
  out << "]";
  return out.str();
}

mpz_class determinant(const SymIntMatrix& m) {
  int n = m.size();
  if (n == 0) return 1;
  std::vector<std::vector<mpz_class>> a(n, std::vector<mpz_class>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[i][j] = m(i, j);

  // Bareiss fraction-free elimination: every division below is exact.
  int sign = 1;
  mpz_class prev = 1;
  for (int k = 0; k < n - 1; ++k) {
    int pivot = -1;
    for (int i = k; i < n; ++i)
      if (a[i][k] != 0) { pivot = i; break; }
    if (pivot < 0) return 0;
    if (pivot != k) { std::swap(a[pivot], a[k]); sign = -sign; }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) {
        mpz_class t = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        a[i][j] = t;
      }
    prev = a[k][k];
  }
  return sign > 0 ? a[n - 1][n - 1] : mpz_class(-a[n - 1][n - 1]);
}

int signature(const SymIntMatrix& m) {
  int n = m.size();
  std::vector<std::vector<mpq_class>> a(n, std::vector<mpq_class>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[i][j] = mpq_class(m(i, j));

  int pos = 0, neg = 0;
  std::vector<bool> done(n, false);
  for (int step = 0; step < n; ++step) {
    // Prefer a nonzero diagonal pivot, earliest index first.
    int p = -1;
    for (int i = 0; i < n; ++i)
      if (!done[i] && a[i][i] != 0) { p = i; break; }
    if (p < 0) {
      // Diagonal is all zero on the remaining block; find an off-diagonal
      // entry and symmetrically add one line to the other, creating a 2a
      // diagonal pivot (the paired hyperbolic block contributes 0 overall).
      int bi = -1, bj = -1;
      for (int i = 0; i < n && bi < 0; ++i) {
        if (done[i]) continue;
        for (int j = i + 1; j < n; ++j)
          if (!done[j] && a[i][j] != 0) { bi = i; bj = j; break; }
      }
      if (bi < 0) break;  // remaining block is zero
      for (int k = 0; k < n; ++k) a[bi][k] += a[bj][k];
      for (int k = 0; k < n; ++k) a[k][bi] += a[k][bj];
      p = bi;
    }
    mpq_class d = a[p][p];
    if (d > 0) ++pos; else ++neg;
    done[p] = true;
    for (int i = 0; i < n; ++i) {
      if (done[i] || a[i][p] == 0) continue;
      mpq_class f = a[i][p] / d;
      for (int j = 0; j < n; ++j) a[i][j] -= f * a[p][j];
      for (int j = 0; j < n; ++j) a[j][i] -= f * a[j][p];
    }
  }
  return pos - neg;
}

std::string SnfDiagonal::to_text() const {
  if (factors.empty()) return "-";
  std::ostringstream out;
  for (size_t i = 0; i < factors.size(); ++i) {
    if (i) out << " ";
    out << factors[i].get_str();
  }
  return out.str();
}

SnfDiagonal smith_normal_form(const std::vector<std::vector<mpz_class>>& rows) {
  int m = static_cast<int>(rows.size());
  int n = m ? static_cast<int>(rows[0].size()) : 0;
  for (const auto& r : rows)
    if (static_cast<int>(r.size()) != n)
      throw Error(errc::bad_argument, "ragged matrix");
  std::vector<std::vector<mpz_class>> a = rows;

  auto abs_cmp_less = [](const mpz_class& x, const mpz_class& y) {
    return mpz_cmpabs(x.get_mpz_t(), y.get_mpz_t()) < 0;
  };

  int t = 0;
  int lim = std::min(m, n);
  while (t < lim) {
    // Pick the smallest-magnitude nonzero entry as pivot.
    int pi = -1, pj = -1;
    for (int i = t; i < m; ++i)
      for (int j = t; j < n; ++j)
        if (a[i][j] != 0 && (pi < 0 || abs_cmp_less(a[i][j], a[pi][pj]))) { pi = i; pj = j; }
    if (pi < 0) break;
    std::swap(a[pi], a[t]);
    if (pj != t)
      for (int i = 0; i < m; ++i) std::swap(a[i][pj], a[i][t]);

    bool dirty = true;
    while (dirty) {
      dirty = false;
      for (int i = t + 1; i < m; ++i) {
        if (a[i][t] == 0) continue;
        mpz_class q = a[i][t] / a[t][t];
        if (q != 0)
          for (int j = t; j < n; ++j) a[i][j] -= q * a[t][j];
        if (a[i][t] != 0) { std::swap(a[i], a[t]); dirty = true; }
      }
      for (int j = t + 1; j < n; ++j) {
        if (a[t][j] == 0) continue;
        mpz_class q = a[t][j] / a[t][t];
        if (q != 0)
          for (int i = t; i < m; ++i) a[i][j] -= q * a[i][t];
        if (a[t][j] != 0) {
          for (int i = 0; i < m; ++i) std::swap(a[i][j], a[i][t]);
          dirty = true;
        }
      }
    }
    ++t;
  }

  std::vector<mpz_class> d;
  for (int i = 0; i < lim; ++i) d.push_back(abs(a[i][i]));
  // Enforce the divisibility chain; the zero rule (gcd pulls the nonzero
  // value forward, lcm pushes 0 back) also sorts zeros to the end.
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i + 1 < d.size(); ++i)
      for (size_t j = i + 1; j < d.size(); ++j) {
        if (d[j] != 0 && d[i] != 0 && mpz_divisible_p(d[j].get_mpz_t(), d[i].get_mpz_t())) continue;
        if (d[i] == 0 && d[j] == 0) continue;
        mpz_class g, l;
        mpz_gcd(g.get_mpz_t(), d[i].get_mpz_t(), d[j].get_mpz_t());
        if (g != 0) l = d[i] / g * d[j]; else l = 0;
        if (g != d[i] || l != d[j]) { d[i] = g; d[j] = abs(l); changed = true; }
      }
  }
  while (static_cast<int>(d.size()) < n) d.emplace_back(0);
  return SnfDiagonal{std::move(d)};
}

SnfDiagonal smith_normal_form(const SymIntMatrix& m) {
  std::vector<std::vector<mpz_class>> rows(m.size(), std::vector<mpz_class>(m.size()));
  for (int i = 0; i < m.size(); ++i)
    for (int j = 0; j < m.size(); ++j) rows[i][j] = m(i, j);
  return smith_normal_form(rows);
}

int BitVec::popcount() const {
  int c = 0;
  for (uint64_t w : w_) c += std::popcount(w);
  return c;
}

bool BitVec::any() const {
  for (uint64_t w : w_)
    if (w) return true;
  return false;
}

std::vector<int> BitVec::ones() const {
  std::vector<int> r;
  for (int i = 0; i < n_; ++i)
    if (test(i)) r.push_back(i);
  return r;
}

Gf2AffineSolutionSet solve_affine_gf2(const SymIntMatrix& m, const BitVec& b) {
  int n = m.size();
  if (b.size() != n) throw Error(errc::bad_argument, "rhs size mismatch");

  // Augmented rows over GF(2): n matrix columns plus the rhs bit.
  std::vector<BitVec> rows(n, BitVec(n + 1));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j)
      if (mpz_odd_p(m(i, j).get_mpz_t())) rows[i].set(j, true);
    rows[i].set(n, b.test(i));
  }

  std::vector<int> pivot_col;
  int r = 0;
  for (int c = 0; c < n && r < n; ++c) {
    int p = -1;
    for (int i = r; i < n; ++i)
      if (rows[i].test(c)) { p = i; break; }
    if (p < 0) continue;
    std::swap(rows[p], rows[r]);
    for (int i = 0; i < n; ++i)
      if (i != r && rows[i].test(c)) rows[i].xor_with(rows[r]);
    pivot_col.push_back(c);
    ++r;
  }

  Gf2AffineSolutionSet out;
  for (int i = r; i < n; ++i)
    if (rows[i].test(n)) { out.consistent = false; return out; }
  out.consistent = true;

  std::vector<bool> is_pivot(n, false);
  for (int c : pivot_col) is_pivot[c] = true;

  out.particular = BitVec(n);
  for (int i = 0; i < r; ++i) out.particular.set(pivot_col[i], rows[i].test(n));

  for (int c = 0; c < n; ++c) {
    if (is_pivot[c]) continue;
    BitVec v(n);
    v.set(c, true);
    for (int i = 0; i < r; ++i)
      if (rows[i].test(c)) v.set(pivot_col[i], true);
    out.kernel_basis.push_back(std::move(v));
  }
  return out;
}

std::vector<BitVec> enumerate_gf2_solutions(const Gf2AffineSolutionSet& s) {
  if (!s.consistent) return {};
  int k = static_cast<int>(s.kernel_basis.size());
  if (k > 24)
    throw Error(errc::math, "solution set too large to enumerate (2^" + std::to_string(k) + ")");
  std::vector<BitVec> out;
  out.reserve(size_t{1} << k);
  BitVec cur = s.particular;
  out.push_back(cur);
  for (uint64_t t = 1; t < (uint64_t{1} << k); ++t) {
    cur.xor_with(s.kernel_basis[std::countr_zero(t)]);
    out.push_back(cur);
  }
  return out;
}

}  // namespace chainmail
