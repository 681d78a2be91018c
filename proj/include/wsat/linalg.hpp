#pragma once

#include <algorithm>
#include <cstddef>
#include <vector>

#include "wsat/errors.hpp"
#include "wsat/scalar.hpp"

namespace wsat {

template <typename S>
using Matrix = std::vector<std::vector<S>>;

namespace detail {

inline std::size_t check_rectangular(const auto& m) {
  const std::size_t cols = m.empty() ? 0 : m.front().size();
  for (const auto& row : m)
    if (row.size() != cols) throw InputError("matrix rows have different lengths");
  return cols;
}

// Fraction-free (Bareiss) echelon rank of an integer matrix. Every division is exact.
inline std::size_t bareiss_rank(Matrix<BigInt> m) {
  const std::size_t rows = m.size();
  const std::size_t cols = check_rectangular(m);
  BigInt prev = 1;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && sgn(m[piv][c]) == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[rank]);
    const BigInt& p = m[rank][c];
    for (std::size_t i = rank + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        BigInt t = p * m[i][j] - m[i][c] * m[rank][j];
        mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      m[i][c] = 0;
    }
    prev = p;
    ++rank;
  }
  return rank;
}

}  // namespace detail

/// Exact rank. Rationals: rows are cleared of denominators and reduced by
/// Bareiss elimination over the integers. Prime field: Gaussian elimination.
inline std::size_t rank_of(const Matrix<Rational>& m) {
  detail::check_rectangular(m);
  Matrix<BigInt> ints;
  ints.reserve(m.size());
  for (const auto& row : m) {
    BigInt l = 1;
    for (const auto& x : row) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    std::vector<BigInt> out;
    out.reserve(row.size());
    for (const auto& x : row) out.push_back(BigInt(x.get_num() * (l / x.get_den())));
    ints.push_back(std::move(out));
  }
  return detail::bareiss_rank(std::move(ints));
}

inline std::size_t rank_of(Matrix<Fp61> m) {
  const std::size_t rows = m.size();
  const std::size_t cols = detail::check_rectangular(m);
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && m[piv][c] == Fp61(0)) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[rank]);
    const Fp61 inv = m[rank][c].inverse();
    for (std::size_t i = rank + 1; i < rows; ++i) {
      if (m[i][c] == Fp61(0)) continue;
      const Fp61 f = m[i][c] * inv;
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[rank][j];
    }
    ++rank;
  }
  return rank;
}

/// Incrementally maintained reduced row-echelon basis of a row space, for
/// exact membership tests against a fixed generator set.
template <typename S>
class RowSpace {
  using T = ScalarTraits<S>;

 public:
  explicit RowSpace(std::size_t cols) : cols_(cols) {}

  std::size_t dim() const { return basis_.size(); }
  std::size_t cols() const { return cols_; }

  /// Adds v; returns true iff it was independent of the rows so far.
  bool insert(std::vector<S> v) {
    reduce(v);
    std::size_t p = 0;
    while (p < cols_ && T::is_zero(v[p])) ++p;
    if (p == cols_) return false;
    const S inv = T::one() / v[p];
    for (auto& x : v) x *= inv;
    // keep the basis fully reduced in the new pivot column
    for (auto& row : basis_) {
      if (T::is_zero(row[p])) continue;
      const S f = row[p];
      for (std::size_t j = 0; j < cols_; ++j) row[j] -= f * v[j];
    }
    const auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), p) - pivots_.begin();
    pivots_.insert(pivots_.begin() + pos, p);
    basis_.insert(basis_.begin() + pos, std::move(v));
    return true;
  }

  bool contains(std::vector<S> v) const {
    reduce(v);
    return std::all_of(v.begin(), v.end(), [](const S& x) { return T::is_zero(x); });
  }

 private:
  void reduce(std::vector<S>& v) const {
    if (v.size() != cols_) throw InputError("RowSpace: vector length mismatch");
    for (std::size_t k = 0; k < basis_.size(); ++k) {
      const std::size_t p = pivots_[k];
      if (T::is_zero(v[p])) continue;
      const S f = v[p];
      for (std::size_t j = 0; j < cols_; ++j) v[j] -= f * basis_[k][j];
    }
  }

  std::size_t cols_;
  std::vector<std::vector<S>> basis_;
  std::vector<std::size_t> pivots_;
};

}  // namespace wsat
