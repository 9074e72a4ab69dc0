#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "grajac/graph.hpp"
#include "grajac/matrix.hpp"

namespace grajac {

/// Letters over {F, B, D}; letter i orients the cycle edge {v_i, v_{i+1 mod n}}:
/// F = v_i -> v_{i+1}, B = v_{i+1} -> v_i, D = bidirectional. Vertices are
/// labeled v_1..v_n counterclockwise.
DirectedMultigraph gen_cycle(const std::string& word);

enum class WheelVariant { Undirected, SpokesIn, SpokesOut };

/// Insert a vertex after the sink and redirect one incoming arc onto it;
/// preserves the Picard group.
DirectedMultigraph degree_zero_extension(const DirectedMultigraph& g, int sink_vertex);

/// Split the outgoing arc of an out-degree-1 vertex through a new vertex,
/// preserving one-directional vs bidirectional kind; preserves Pic.
DirectedMultigraph degree_one_extension(const DirectedMultigraph& g, int v);

/// Cycle with a forward path of p1_len arcs into the sink, a backward path of
/// n - k - p1_len arcs into the sink, and k bidirectional arcs.
DirectedMultigraph gen_two_opposite_paths(int n, int k, int p1_len);

/// Arcs v_n -> v_1, v_2 -> v_1, v_3 -> v_2, all others bidirectional;
/// Jac = Z_{n-1}. For n = 3 this is the G_2 pattern.
DirectedMultigraph gen_obj4_cycle(int n);

/// v_1 has out-degree 0, every other vertex has two outgoing arrows;
/// Jac = Z_n.
DirectedMultigraph gen_final_lemma_cycle(int n);

/// Vertex 1 is the axle, vertices 2..n form the all-bidirectional rim.
DirectedMultigraph gen_wheel(int n, WheelVariant variant);

/// Complete one-directional arcs from layer i to layer i+1 only.
DirectedMultigraph gen_multipartite(const std::vector<int>& layer_sizes);

enum class TreeDirectionRule { Random, TowardRoot, AwayFromRoot };

/// Uniform random labeled tree (Prufer sequence from a splitmix64 PRNG); each
/// edge independently bidirectional with the given probability, otherwise
/// one-directional per the rule. Deterministic for fixed arguments.
DirectedMultigraph gen_random_tree(int n, std::uint64_t seed, double bidirectional_prob,
                                   TreeDirectionRule rule = TreeDirectionRule::Random);

/// Tridiagonal matrix with 2 on the diagonal and -1 on the sub/super
/// diagonals; det = n + 1.
IntegerMatrix matrix_M(int n);

/// splitmix64: the PRNG behind gen_random_tree, exposed for reproducibility.
struct SplitMix64 {
  std::uint64_t state;
  explicit SplitMix64(std::uint64_t seed) : state(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }
  /// Uniform in [1, n] via modulo (documented bias is irrelevant at desk scale).
  int uniform(int n) { return static_cast<int>(next() % static_cast<std::uint64_t>(n)) + 1; }
  /// True with probability p, using the top 53 bits.
  bool bernoulli(double p) { return static_cast<double>(next() >> 11) * 0x1.0p-53 < p; }
};

}  // namespace grajac
