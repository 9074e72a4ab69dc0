#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "grajac/analysis.hpp"
#include "grajac/oracles.hpp"

using namespace grajac;

TEST_CASE("tree oracle") {
  CHECK(oracle_tree(gen_random_tree(8, 11, 0.3)) ==
        picard_group(gen_random_tree(8, 11, 0.3)));
  CHECK_THROWS_AS(oracle_tree(gen_cycle("FFF")), Error);
}

TEST_CASE("cycle oracles") {
  CHECK(oracle_two_path_cycle(5, 1) == AbelianGroup{1, {3}});
  CHECK(oracle_two_path_cycle(5, 0) == AbelianGroup{1, {2}});
  CHECK(oracle_global_sink_cycle(6, 2) == AbelianGroup{1, {4}});
  CHECK_THROWS_AS(oracle_two_path_cycle(3, 2), Error);
}

TEST_CASE("wheel oracle") {
  CHECK(oracle_wheel(7, WheelVariant::SpokesOut) == AbelianGroup{1, {3, 12}});
  CHECK(oracle_wheel(4, WheelVariant::SpokesOut) == AbelianGroup{1, {3, 3}});
  CHECK(oracle_wheel(6, WheelVariant::SpokesOut) == AbelianGroup{1, {5, 5}});
  for (int n = 4; n <= 12; ++n) {
    CHECK(oracle_wheel(n, WheelVariant::SpokesOut) ==
          picard_group(gen_wheel(n, WheelVariant::SpokesOut)));
    CHECK(oracle_wheel(n, WheelVariant::SpokesIn) ==
          picard_group(gen_wheel(n, WheelVariant::SpokesIn)));
  }
  CHECK_THROWS_AS(oracle_wheel(3, WheelVariant::Undirected), Error);
}

TEST_CASE("tridiagonal system solutions") {
  CramerSolution s3 = oracle_cramer_solution(3);
  CHECK(s3.x == std::vector<Int>{6, 8, 6});
  CHECK(s3.gcd == 2);
  CramerSolution s2 = oracle_cramer_solution(2);
  CHECK(s2.x == std::vector<Int>{3, 3});
  CHECK(s2.gcd == 3);
  CramerSolution s1 = oracle_cramer_solution(1);
  CHECK(s1.x == std::vector<Int>{1});
  CHECK(s1.gcd == 1);

  for (int n = 1; n <= 20; ++n) {
    CramerSolution s = oracle_cramer_solution(n);
    IntegerMatrix m = matrix_M(n);
    Int g = 0;
    for (int i = 0; i < n; ++i) {
      Int row = 0;
      for (int j = 0; j < n; ++j) row += m.at(i, j) * s.x[j];
      CHECK(row == n + 1);
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), s.x[i].get_mpz_t());
    }
    CHECK(g == s.gcd);
  }
}

TEST_CASE("layered oracles") {
  CHECK(oracle_bipartite(2, 3) == AbelianGroup{3, {3}});
  CHECK(oracle_bipartite(1, 5) == AbelianGroup{5, {}});
  CHECK(oracle_bipartite(4, 2) == AbelianGroup{2, {2, 2, 2}});
  CHECK(oracle_three_layer(3, 1, 4) == AbelianGroup{4, {}});
  CHECK(oracle_three_layer(2, 3, 4) == AbelianGroup{4, {12, 12}});
  CHECK(oracle_three_layer(2, 4, 6) == AbelianGroup{6, {2, 6, 12, 24}});

  for (int a = 1; a <= 4; ++a) {
    for (int b = 1; b <= 4; ++b) {
      CHECK(oracle_bipartite(a, b) == picard_group(gen_multipartite({a, b})));
      for (int c = 1; c <= 4; ++c) {
        AbelianGroup predicted = oracle_three_layer(a, b, c);
        CHECK(predicted == picard_group(gen_multipartite({a, b, c})));
        // torsion order b^a * c^(b-1)
        Int expected = 1;
        for (int i = 0; i < a; ++i) expected *= b;
        for (int i = 0; i < b - 1; ++i) expected *= c;
        CHECK(order(torsion(predicted)) == expected);
      }
    }
  }
}

TEST_CASE("exhaustive cycle sweep at n = 3") {
  SweepOptions opts;
  opts.n_max = 3;
  std::vector<TheoremCheck> results = run_sweep("cycles-exhaustive", opts);
  CHECK(results.size() == 27);
  std::set<std::string> jacs;
  for (const TheoremCheck& c : results) {
    CHECK(c.pass);
    jacs.insert(render(torsion(c.computed)));
  }
  CHECK(jacs == std::set<std::string>{"0", "Z_2", "Z_3"});
}

TEST_CASE("sweeps pass and parallel matches serial") {
  for (const char* family :
       {"trees", "cycles-two-path", "cycles-global-sink", "wheels", "bipartite"}) {
    SweepOptions opts;
    opts.n_max = 5;
    opts.count = 30;
    std::vector<TheoremCheck> serial = run_sweep_serial(family, opts);
    CHECK(!serial.empty());
    for (const TheoremCheck& c : serial) CHECK(c.pass);

    opts.jobs = 4;
    std::vector<TheoremCheck> parallel = run_sweep(family, opts);
    REQUIRE(parallel.size() == serial.size());
    for (std::size_t i = 0; i < serial.size(); ++i) {
      CHECK(serial[i].theorem_id == parallel[i].theorem_id);
      CHECK(serial[i].params == parallel[i].params);
      CHECK(serial[i].computed == parallel[i].computed);
      CHECK(serial[i].pass == parallel[i].pass);
    }
  }
  CHECK_THROWS_AS(run_sweep("no-such-family", SweepOptions{}), Error);
}

TEST_CASE("exploration records carry no prediction") {
  SweepOptions opts;
  opts.layers = {2, 2, 2, 2};
  std::vector<TheoremCheck> results = run_sweep("multipartite-explore", opts);
  REQUIRE(results.size() == 1);
  CHECK(!results[0].predicted.has_value());
  CHECK(results[0].pass);
  CHECK(results[0].computed.free_rank >= 1);
}
