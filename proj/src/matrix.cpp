#include "grajac/matrix.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace grajac {

IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b) {
  if (a.cols() != b.rows()) fail(Errc::NotSquare, "matrix shape mismatch in product");
  IntegerMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a.at(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        c.at(i, j) += a.at(i, k) * b.at(k, j);
      }
    }
  }
  return c;
}

IntegerMatrix transpose(const IntegerMatrix& m) {
  IntegerMatrix t(m.cols(), m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) t.at(j, i) = m.at(i, j);
  }
  return t;
}

Int determinant(const IntegerMatrix& m) {
  if (m.rows() != m.cols()) fail(Errc::NotSquare, "determinant needs a square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntegerMatrix a = m;
  Int prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a.at(k, k) == 0) {
      std::size_t piv = k;
      while (piv < n && a.at(piv, k) == 0) ++piv;
      if (piv == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(piv, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a.at(i, j) = (a.at(k, k) * a.at(i, j) - a.at(i, k) * a.at(k, j)) / prev;
      }
      a.at(i, k) = 0;
    }
    prev = a.at(k, k);
  }
  return sign > 0 ? a.at(n - 1, n - 1) : Int(-a.at(n - 1, n - 1));
}

namespace {

// All size-k index subsets of 0..n-1 in lexicographic order.
void for_each_subset(std::size_t n, std::size_t k,
                     const std::function<void(const std::vector<std::size_t>&)>& fn) {
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    fn(idx);
    std::size_t i = k;
    while (i > 0) {
      --i;
      if (idx[i] != i + n - k) break;
      if (i == 0) return;
    }
    if (idx[i] == i + n - k) return;
    ++idx[i];
    for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

Int determinantal_divisor(const IntegerMatrix& m, long k) {
  if (k <= 0) return 1;
  const std::size_t r = m.rows(), c = m.cols();
  const std::size_t mind = std::min(r, c);
  if (static_cast<std::size_t>(k) > mind) return 0;
  if (mind > 8) {
    fail(Errc::MinorEnumerationTooLarge, "minor enumeration limited to min dimension 8");
  }
  Int g = 0;
  const std::size_t kk = static_cast<std::size_t>(k);
  for_each_subset(r, kk, [&](const std::vector<std::size_t>& ri) {
    for_each_subset(c, kk, [&](const std::vector<std::size_t>& ci) {
      IntegerMatrix sub(kk, kk);
      for (std::size_t i = 0; i < kk; ++i) {
        for (std::size_t j = 0; j < kk; ++j) sub.at(i, j) = m.at(ri[i], ci[j]);
      }
      Int d = determinant(sub);
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
    });
  });
  return g;
}

std::vector<Rat> solve_exact(const IntegerMatrix& m, const std::vector<Int>& b) {
  if (m.rows() != m.cols()) fail(Errc::NotSquare, "solve_exact needs a square matrix");
  const std::size_t n = m.rows();
  if (b.size() != n) fail(Errc::LengthMismatch, "right-hand side length mismatch");
  std::vector<std::vector<Rat>> a(n, std::vector<Rat>(n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = Rat(m.at(i, j));
    a[i][n] = Rat(b[i]);
  }
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && a[piv][k] == 0) ++piv;
    if (piv == n) fail(Errc::SingularMatrix, "matrix is singular");
    std::swap(a[k], a[piv]);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || a[i][k] == 0) continue;
      Rat f = a[i][k] / a[k][k];
      for (std::size_t j = k; j <= n; ++j) a[i][j] -= f * a[k][j];
    }
  }
  std::vector<Rat> x(n);
  for (std::size_t i = 0; i < n; ++i) {
    x[i] = a[i][n] / a[i][i];
    x[i].canonicalize();
  }
  return x;
}

std::size_t rank(const IntegerMatrix& m) {
  SnfResult s = smith_normal_form(m);
  std::size_t r = 0;
  const std::size_t mind = std::min(m.rows(), m.cols());
  for (std::size_t i = 0; i < mind; ++i) {
    if (s.d.at(i, i) != 0) ++r;
  }
  return r;
}

}  // namespace grajac
