#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "grajac/abelian.hpp"
#include "grajac/families.hpp"
#include "grajac/graph.hpp"

namespace grajac {

/// Closed-form prediction vs direct computation for one family instance.
struct TheoremCheck {
  std::string theorem_id;
  std::vector<std::pair<std::string, long long>> params;
  std::optional<AbelianGroup> predicted;  // nullopt for exploration records
  AbelianGroup computed;
  bool pass = false;
};

/// Z^r where r is the number of terminal strong components; NotATree if the
/// underlying graph is not a tree.
AbelianGroup oracle_tree(const DirectedMultigraph& g);

/// Z x Z_{k+2} for a cycle with two opposite paths and k bidirectional arcs.
AbelianGroup oracle_two_path_cycle(int n, int k);

/// Z x Z_{k+2} for a global-sink cycle whose double chain has length k.
AbelianGroup oracle_global_sink_cycle(int n, int k);

/// SpokesOut: the even/odd closed form. Undirected and SpokesIn: the directly
/// computed group of the undirected wheel (the two are provably isomorphic).
AbelianGroup oracle_wheel(int n, WheelVariant variant);

struct CramerSolution {
  std::vector<Int> x;  // x_k = (n+1) k (n+1-k) / 2, solving M_n x = (n+1) 1
  Int gcd;             // n+1 for even n, (n+1)/2 for odd n
};

CramerSolution oracle_cramer_solution(int n);

/// Z^b x Z_b^{a-1} for the two-layer single-flow multipartite graph.
AbelianGroup oracle_bipartite(int a, int b);

/// Z^c x Jac(G) per the three-layer case split on a vs b-1.
AbelianGroup oracle_three_layer(int a, int b, int c);

struct SweepOptions {
  int n_max = 6;
  int count = 100;                  // random-instance families
  std::uint64_t seed = 1;
  double bidirectional_prob = 0.4;  // trees
  int jobs = 1;
  std::vector<int> layers;          // multipartite-explore override
};

/// Builds every instance of the family, compares prediction against direct
/// computation, and returns one TheoremCheck per instance in deterministic
/// order. Instances are evaluated in parallel when jobs > 1.
std::vector<TheoremCheck> run_sweep(const std::string& family, const SweepOptions& opts);

/// Serial reference for the parallel runner; identical output by construction.
std::vector<TheoremCheck> run_sweep_serial(const std::string& family, const SweepOptions& opts);

}  // namespace grajac
