#pragma once

#include <optional>
#include <vector>

#include "grajac/abelian.hpp"
#include "grajac/graph.hpp"
#include "grajac/matrix.hpp"

namespace grajac {

/// Maximal strongly connected components, ordered by smallest contained
/// vertex. A component is terminal iff no arc leaves it.
struct SccDecomposition {
  std::vector<std::vector<int>> components;
  std::vector<bool> terminal;
};

/// Out-degree diagonal minus directed adjacency; a bidirectional arc counts
/// toward both directions. Rows sum to zero.
IntegerMatrix laplacian(const DirectedMultigraph& g);

/// Cokernel of the transposed Laplacian (computed via L_G, which has the same
/// Smith normal form).
AbelianGroup picard_group(const DirectedMultigraph& g);

/// Torsion subgroup of the Picard group.
AbelianGroup jacobian(const DirectedMultigraph& g);

SccDecomposition scc(const DirectedMultigraph& g);

/// Number of terminal strong components; equals the free rank of Pic.
int predicted_rank(const DirectedMultigraph& g);

/// The unique vertex of out-degree 0 reachable from every other vertex, if any.
std::optional<int> find_global_sink(const DirectedMultigraph& g);

/// Underlying graph is connected, n >= 3, every vertex has exactly two
/// distinct neighbors.
bool is_cycle_shaped(const DirectedMultigraph& g);

/// Pattern <- (run of `length` bidirectional arcs) -> around the cycle;
/// vertices lists the window in chain order (length + 3 vertices).
struct DoubleChain {
  int length = 0;
  std::vector<int> vertices;
};

/// The unique maximal double-chain subgraph of a cycle-shaped graph with a
/// global sink; nullopt when there is no global sink.
std::optional<DoubleChain> double_chain(const DirectedMultigraph& g);

struct TwoOppositePaths {
  int p1_len = 0;  // clockwise path into the sink
  int p2_len = 0;
  int bidirectional = 0;
};

/// Decomposition into two one-directional paths meeting at a sink with all
/// remaining arcs bidirectional, if the cycle-shaped graph has that form.
std::optional<TwoOppositePaths> is_two_opposite_paths(const DirectedMultigraph& g);

/// Matrix-tree cofactor of a connected undirected graph.
Int spanning_tree_count(const DirectedMultigraph& g);

}  // namespace grajac
