#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <vector>

#include "grajac/errors.hpp"

namespace grajac {

using Int = mpz_class;
using Rat = mpq_class;

/// Dense rectangular matrix of arbitrary-precision integers, row-major.
class IntegerMatrix {
 public:
  IntegerMatrix() = default;
  IntegerMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols) {}
  IntegerMatrix(std::size_t rows, std::size_t cols, std::vector<Int> entries)
      : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_) {
      fail(Errc::ParseError, "entry count does not match matrix shape");
    }
  }

  static IntegerMatrix identity(std::size_t n) {
    IntegerMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Int& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Int& at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  friend bool operator==(const IntegerMatrix&, const IntegerMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> entries_;
};

IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b);
IntegerMatrix transpose(const IntegerMatrix& m);

/// Exact determinant via fraction-free (Bareiss) elimination.
Int determinant(const IntegerMatrix& m);

/// Nonnegative generator of the ideal of k x k minors: 1 for k <= 0, 0 for
/// k > min(rows, cols). Exhaustive minor enumeration, guarded at dimension 8.
Int determinantal_divisor(const IntegerMatrix& m, long k);

/// Unique exact rational solution of m x = b; SingularMatrix if det(m) = 0.
std::vector<Rat> solve_exact(const IntegerMatrix& m, const std::vector<Int>& b);

/// d = p * m * q with p, q unimodular, d diagonal with nonnegative entries,
/// d_ii | d_{i+1,i+1}, zeros trailing.
struct SnfResult {
  IntegerMatrix d, p, q;
};

SnfResult smith_normal_form(const IntegerMatrix& m);

/// Number of nonzero diagonal entries of smith_normal_form(m).d.
std::size_t rank(const IntegerMatrix& m);

}  // namespace grajac
