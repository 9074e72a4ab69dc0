#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include "grajac/errors.hpp"

namespace grajac {

/// A bi-directional arrow is a single arrow; a backward arc is expressed by
/// swapping endpoints, so only these two tags exist.
enum class ArcKind { Forward, Bidirectional };

struct Arc {
  int from = 0;  // 1-based
  int to = 0;
  ArcKind kind = ArcKind::Forward;
  std::int64_t mult = 1;

  friend auto operator<=>(const Arc&, const Arc&) = default;
};

/// Finite loop-free directed multigraph. Canonical storage: a bidirectional
/// arc is stored once with from < to, duplicate (from,to,kind) entries are
/// merged by summing multiplicity, and arcs are sorted by (from,to,kind).
/// Immutable after construction.
class DirectedMultigraph {
 public:
  explicit DirectedMultigraph(int vertex_count, std::vector<Arc> arcs = {});

  int vertex_count() const { return n_; }
  const std::vector<Arc>& arcs() const { return arcs_; }

  friend bool operator==(const DirectedMultigraph&, const DirectedMultigraph&) = default;

 private:
  int n_ = 1;
  std::vector<Arc> arcs_;
};

DirectedMultigraph build_graph(int n, std::vector<Arc> arcs);

/// Every arrow (one-directional or bi-directional) contributes one
/// bidirectional arrow between the same endpoint pair.
DirectedMultigraph underlying_graph(const DirectedMultigraph& g);

/// Sum of multiplicities of Forward arcs leaving v plus Bidirectional arcs
/// incident to v.
std::int64_t out_degree(const DirectedMultigraph& g, int v);

/// Removes v and incident arcs; remaining vertices are reindexed preserving
/// order.
DirectedMultigraph delete_vertex(const DirectedMultigraph& g, int v);

}  // namespace grajac
