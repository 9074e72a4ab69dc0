#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "grajac/families.hpp"
#include "grajac/matrix.hpp"

using namespace grajac;

namespace {

IntegerMatrix make(std::size_t r, std::size_t c, std::vector<long> v) {
  IntegerMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m.at(i, j) = v[i * c + j];
  return m;
}

std::vector<Int> diagonal(const IntegerMatrix& m) {
  std::vector<Int> d;
  for (std::size_t i = 0; i < std::min(m.rows(), m.cols()); ++i) d.push_back(m.at(i, i));
  return d;
}

bool unimodular(const IntegerMatrix& m) {
  Int d = determinant(m);
  return d == 1 || d == -1;
}

void check_snf_contract(const IntegerMatrix& m) {
  SnfResult r = smith_normal_form(m);
  CHECK(r.p * m * r.q == r.d);
  CHECK(unimodular(r.p));
  CHECK(unimodular(r.q));
  std::vector<Int> d = diagonal(r.d);
  for (std::size_t i = 0; i < r.d.rows(); ++i)
    for (std::size_t j = 0; j < r.d.cols(); ++j)
      if (i != j) CHECK(r.d.at(i, j) == 0);
  for (std::size_t i = 0; i + 1 < d.size(); ++i) {
    CHECK(d[i] >= 0);
    if (d[i] == 0) CHECK(d[i + 1] == 0);
    if (d[i] != 0) CHECK(d[i + 1] % d[i] == 0);
  }
}

IntegerMatrix random_matrix(SplitMix64& rng, std::size_t r, std::size_t c) {
  IntegerMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m.at(i, j) = static_cast<long>(rng.next() % 19) - 9;
  return m;
}

}  // namespace

TEST_CASE("determinant basics") {
  CHECK(determinant(IntegerMatrix::identity(4)) == 1);
  CHECK(determinant(make(2, 2, {2, -1, -1, 2})) == 3);
  CHECK(determinant(make(3, 3, {0, 0, 0, -1, 2, -1, -1, -1, 2})) == 0);
  CHECK(determinant(make(2, 2, {0, 1, 1, 0})) == -1);
  CHECK_THROWS_AS(determinant(IntegerMatrix(2, 3)), Error);
}

TEST_CASE("matrix_M determinant and SNF") {
  for (int n = 1; n <= 12; ++n) {
    IntegerMatrix m = matrix_M(n);
    CHECK(determinant(m) == n + 1);
    std::vector<Int> d = diagonal(smith_normal_form(m).d);
    for (int i = 0; i + 1 < n; ++i) CHECK(d[i] == 1);
    CHECK(d[n - 1] == n + 1);
  }
}

TEST_CASE("frozen SNF diagonals") {
  // mixed star: center both in and out of every leaf
  IntegerMatrix lt = make(5, 5,
                          {1, 0, -1, 0, 0,
                           0, 1, -1, 0, 0,
                           -1, -1, 4, -1, -1,
                           0, 0, -1, 1, 0,
                           0, 0, -1, 0, 1});
  // all leaves into the center
  IntegerMatrix ltp = make(5, 5,
                           {1, 0, -1, 0, 0,
                            0, 1, -1, 0, 0,
                            0, 0, 0, 0, 0,
                            0, 0, -1, 1, 0,
                            0, 0, -1, 0, 1});
  // center out to every leaf
  IntegerMatrix ltpp = make(5, 5,
                            {0, 0, 0, 0, 0,
                             0, 0, 0, 0, 0,
                             -1, -1, 4, -1, -1,
                             0, 0, 0, 0, 0,
                             0, 0, 0, 0, 0});
  std::vector<Int> expected{1, 1, 1, 1, 0};
  CHECK(diagonal(smith_normal_form(lt).d) == expected);
  CHECK(diagonal(smith_normal_form(ltp).d) == expected);
  CHECK(diagonal(smith_normal_form(ltpp).d) == std::vector<Int>{1, 0, 0, 0, 0});

  // 3-cycle, sink at vertex 1, one bidirectional arc
  IntegerMatrix two_path = make(3, 3, {0, 0, 0, -1, 2, -1, -1, -1, 2});
  CHECK(diagonal(smith_normal_form(two_path).d) == std::vector<Int>{1, 3, 0});
}

TEST_CASE("snf contract on assorted shapes") {
  check_snf_contract(make(2, 2, {2, 4, 4, 8}));
  check_snf_contract(make(2, 3, {2, 4, 6, 10, 14, 22}));
  check_snf_contract(make(3, 2, {0, 0, 0, 0, 5, 0}));
  check_snf_contract(IntegerMatrix(3, 3));
  check_snf_contract(IntegerMatrix::identity(5));
  check_snf_contract(make(2, 2, {6, 4, 4, 6}));  // divisibility repair needed
}

TEST_CASE("snf matches the minor-gcd oracle on random matrices") {
  SplitMix64 rng(2024);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t r = rng.uniform(5), c = rng.uniform(5);
    IntegerMatrix m = random_matrix(rng, r, c);
    check_snf_contract(m);
    std::vector<Int> d = diagonal(smith_normal_form(m).d);
    Int prod = 1;
    for (std::size_t k = 1; k <= d.size(); ++k) {
      prod *= d[k - 1];
      CHECK(prod == determinantal_divisor(m, static_cast<long>(k)));
    }
  }
}

TEST_CASE("snf is transpose invariant") {
  SplitMix64 rng(7);
  for (int trial = 0; trial < 25; ++trial) {
    IntegerMatrix m = random_matrix(rng, rng.uniform(5), rng.uniform(5));
    CHECK(smith_normal_form(m).d == transpose(smith_normal_form(transpose(m)).d));
  }
}

TEST_CASE("determinantal_divisor edge cases") {
  IntegerMatrix m = make(2, 2, {2, 4, 6, 8});
  CHECK(determinantal_divisor(m, 0) == 1);
  CHECK(determinantal_divisor(m, 1) == 2);
  CHECK(determinantal_divisor(m, 2) == 8);
  CHECK(determinantal_divisor(m, 3) == 0);
  CHECK_THROWS_AS(determinantal_divisor(IntegerMatrix(9, 9), 2), Error);
}

TEST_CASE("rank") {
  CHECK(rank(IntegerMatrix(3, 3)) == 0);
  CHECK(rank(IntegerMatrix::identity(3)) == 3);
  CHECK(rank(make(2, 2, {1, 2, 2, 4})) == 1);
}

TEST_CASE("solve_exact") {
  IntegerMatrix m = matrix_M(3);
  std::vector<Rat> x = solve_exact(m, {4, 4, 4});
  CHECK(x == std::vector<Rat>{6, 8, 6});
  CHECK_THROWS_AS(solve_exact(make(2, 2, {1, 2, 2, 4}), {1, 1}), Error);

  // a genuinely rational solution
  std::vector<Rat> y = solve_exact(make(1, 1, {2}), {1});
  CHECK(y[0] == Rat(1, 2));
}
