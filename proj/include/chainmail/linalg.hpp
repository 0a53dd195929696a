#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "chainmail/error.hpp"

namespace chainmail {

// Exact conversion; gmpxx provides no long long constructor or operators.
inline mpz_class to_mpz(long long v) {
  unsigned long long mag =
      v < 0 ? 0ULL - static_cast<unsigned long long>(v) : static_cast<unsigned long long>(v);
  mpz_class r;
  mpz_import(r.get_mpz_t(), 1, 1, sizeof(mag), 0, 0, &mag);
  if (v < 0) mpz_neg(r.get_mpz_t(), r.get_mpz_t());
  return r;
}

// Dense symmetric integer matrix with arbitrary-precision entries.
class SymIntMatrix {
public:
  SymIntMatrix() = default;
  explicit SymIntMatrix(int n) : n_(n), a_(static_cast<size_t>(n) * n, mpz_class(0)) {
    if (n < 0) throw Error(errc::bad_argument, "matrix size must be non-negative");
  }

  static SymIntMatrix from_rows(const std::vector<std::vector<mpz_class>>& rows);

  int size() const { return n_; }

  const mpz_class& operator()(int i, int j) const { return a_[idx(i, j)]; }

  // Sets both (i,j) and (j,i).
  void set(int i, int j, const mpz_class& v) {
    a_[idx(i, j)] = v;
    a_[idx(j, i)] = v;
  }

  void add(int i, int j, const mpz_class& v) {
    a_[idx(i, j)] += v;
    if (i != j) a_[idx(j, i)] += v;
  }

  SymIntMatrix principal_submatrix(const std::vector<int>& keep) const;

  bool operator==(const SymIntMatrix& o) const { return n_ == o.n_ && a_ == o.a_; }

  // "[[a, b], [c, d]]"; "[]" for the empty matrix.
  std::string to_text() const;

private:
  size_t idx(int i, int j) const {
    if (i < 0 || j < 0 || i >= n_ || j >= n_)
      throw Error(errc::bad_argument, "matrix index out of range");
    return static_cast<size_t>(i) * n_ + j;
  }

  int n_ = 0;
  std::vector<mpz_class> a_;
};

// Exact determinant (fraction-free elimination); determinant of the empty matrix is 1.
mpz_class determinant(const SymIntMatrix& m);

// Signature of a symmetric matrix: positive minus negative eigenvalue count,
// computed by exact congruence diagonalization over the rationals.
int signature(const SymIntMatrix& m);

// Invariant factors d_1 | d_2 | ... | d_n of an integer matrix, non-negative,
// zeros last, padded to the column count (so the cokernel is
// Z/d_1 x ... x Z/d_k x Z^{#zeros}).
struct SnfDiagonal {
  std::vector<mpz_class> factors;

  bool operator==(const SnfDiagonal& o) const { return factors == o.factors; }
  std::string to_text() const;  // "1 1 1 4"; "-" when empty
};

SnfDiagonal smith_normal_form(const std::vector<std::vector<mpz_class>>& rows);
SnfDiagonal smith_normal_form(const SymIntMatrix& m);

// Packed bit vector used for GF(2) work and subset bookkeeping.
class BitVec {
public:
  BitVec() = default;
  explicit BitVec(int n) : n_(n), w_((n + 63) / 64, 0) {}

  int size() const { return n_; }
  bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
  void set(int i, bool v) {
    uint64_t bit = uint64_t{1} << (i & 63);
    if (v) w_[i >> 6] |= bit; else w_[i >> 6] &= ~bit;
  }
  void flip(int i) { w_[i >> 6] ^= uint64_t{1} << (i & 63); }

  void xor_with(const BitVec& o) {
    for (size_t k = 0; k < w_.size(); ++k) w_[k] ^= o.w_[k];
  }

  int popcount() const;
  bool any() const;
  std::vector<int> ones() const;

  bool operator==(const BitVec& o) const { return n_ == o.n_ && w_ == o.w_; }

private:
  int n_ = 0;
  std::vector<uint64_t> w_;
};

// Solution set of M x = b over GF(2) (M reduced mod 2): a particular solution
// (free variables zero, pivots chosen in column order) plus a kernel basis,
// one vector per free column in ascending column order.
struct Gf2AffineSolutionSet {
  bool consistent = false;
  BitVec particular;
  std::vector<BitVec> kernel_basis;
};

Gf2AffineSolutionSet solve_affine_gf2(const SymIntMatrix& m, const BitVec& b);

// All solutions, particular first, then Gray-code order over the kernel basis:
// step t flips basis vector ctz(t). Throws when the kernel is too large to list.
std::vector<BitVec> enumerate_gf2_solutions(const Gf2AffineSolutionSet& s);

}  // namespace chainmail
