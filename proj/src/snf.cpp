#include <algorithm>
#include <cstdlib>

#include "grajac/matrix.hpp"

namespace grajac {

namespace {

struct Reducer {
  IntegerMatrix d, p, q;

  explicit Reducer(const IntegerMatrix& m)
      : d(m),
        p(IntegerMatrix::identity(m.rows())),
        q(IntegerMatrix::identity(m.cols())) {}

  std::size_t rows() const { return d.rows(); }
  std::size_t cols() const { return d.cols(); }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols(); ++j) std::swap(d.at(a, j), d.at(b, j));
    for (std::size_t j = 0; j < rows(); ++j) std::swap(p.at(a, j), p.at(b, j));
  }

  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows(); ++i) std::swap(d.at(i, a), d.at(i, b));
    for (std::size_t i = 0; i < cols(); ++i) std::swap(q.at(i, a), q.at(i, b));
  }

  // row a -= f * row b
  void add_row(std::size_t a, std::size_t b, const Int& f) {
    if (f == 0) return;
    for (std::size_t j = 0; j < cols(); ++j) d.at(a, j) -= f * d.at(b, j);
    for (std::size_t j = 0; j < rows(); ++j) p.at(a, j) -= f * p.at(b, j);
  }

  // col a -= f * col b
  void add_col(std::size_t a, std::size_t b, const Int& f) {
    if (f == 0) return;
    for (std::size_t i = 0; i < rows(); ++i) d.at(i, a) -= f * d.at(i, b);
    for (std::size_t i = 0; i < cols(); ++i) q.at(i, a) -= f * q.at(i, b);
  }

  void negate_row(std::size_t a) {
    for (std::size_t j = 0; j < cols(); ++j) d.at(a, j) = -d.at(a, j);
    for (std::size_t j = 0; j < rows(); ++j) p.at(a, j) = -p.at(a, j);
  }

  // Nonzero entry of minimum absolute value in the submatrix starting at t,
  // ties broken by smallest (row, col).
  bool find_pivot(std::size_t t, std::size_t& pi, std::size_t& pj) const {
    bool found = false;
    Int best;
    for (std::size_t i = t; i < rows(); ++i) {
      for (std::size_t j = t; j < cols(); ++j) {
        const Int& e = d.at(i, j);
        if (e == 0) continue;
        Int a = abs(e);
        if (!found || a < best) {
          found = true;
          best = a;
          pi = i;
          pj = j;
        }
      }
    }
    return found;
  }
};

}  // namespace

SnfResult smith_normal_form(const IntegerMatrix& m) {
  Reducer r(m);
  const std::size_t mind = std::min(m.rows(), m.cols());

  for (std::size_t t = 0; t < mind; ++t) {
    std::size_t pi, pj;
    if (!r.find_pivot(t, pi, pj)) break;
    r.swap_rows(t, pi);
    r.swap_cols(t, pj);

    bool clean = false;
    while (!clean) {
      clean = true;
      for (std::size_t i = t + 1; i < r.rows(); ++i) {
        if (r.d.at(i, t) == 0) continue;
        Int f = r.d.at(i, t) / r.d.at(t, t);  // truncated quotient
        r.add_row(i, t, f);
        if (r.d.at(i, t) != 0) {
          // remainder strictly smaller in absolute value; promote it
          r.swap_rows(t, i);
          clean = false;
        }
      }
      for (std::size_t j = t + 1; j < r.cols(); ++j) {
        if (r.d.at(t, j) == 0) continue;
        Int f = r.d.at(t, j) / r.d.at(t, t);
        r.add_col(j, t, f);
        if (r.d.at(t, j) != 0) {
          r.swap_cols(t, j);
          clean = false;
        }
      }
      if (!clean) continue;
      // divisibility chain: the pivot must divide every remaining entry
      for (std::size_t i = t + 1; i < r.rows() && clean; ++i) {
        for (std::size_t j = t + 1; j < r.cols() && clean; ++j) {
          if (r.d.at(i, j) % r.d.at(t, t) != 0) {
            r.add_row(t, i, Int(-1));  // drags a non-multiple into row t
            clean = false;
          }
        }
      }
    }
  }

  for (std::size_t i = 0; i < mind; ++i) {
    if (r.d.at(i, i) < 0) r.negate_row(i);
  }
  return {std::move(r.d), std::move(r.p), std::move(r.q)};
}

}  // namespace grajac
