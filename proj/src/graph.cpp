#include "grajac/graph.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <tuple>

namespace grajac {

DirectedMultigraph::DirectedMultigraph(int vertex_count, std::vector<Arc> arcs)
    : n_(vertex_count) {
  if (n_ < 1) fail(Errc::VertexOutOfRange, "vertex count must be positive");
  std::map<std::tuple<int, int, ArcKind>, std::int64_t> merged;
  for (const Arc& a : arcs) {
    if (a.from == a.to) {
      fail(Errc::LoopArc, "loop arc at vertex " + std::to_string(a.from));
    }
    if (a.from < 1 || a.from > n_ || a.to < 1 || a.to > n_) {
      fail(Errc::VertexOutOfRange, "arc endpoint outside 1.." + std::to_string(n_));
    }
    if (a.mult < 1) fail(Errc::ZeroMultiplicity, "arc multiplicity must be >= 1");
    int u = a.from, v = a.to;
    if (a.kind == ArcKind::Bidirectional && u > v) std::swap(u, v);
    merged[{u, v, a.kind}] += a.mult;
  }
  arcs_.reserve(merged.size());
  for (const auto& [key, mult] : merged) {
    arcs_.push_back({std::get<0>(key), std::get<1>(key), std::get<2>(key), mult});
  }
}

DirectedMultigraph build_graph(int n, std::vector<Arc> arcs) {
  return DirectedMultigraph(n, std::move(arcs));
}

DirectedMultigraph underlying_graph(const DirectedMultigraph& g) {
  std::vector<Arc> arcs;
  arcs.reserve(g.arcs().size());
  for (const Arc& a : g.arcs()) {
    arcs.push_back({a.from, a.to, ArcKind::Bidirectional, a.mult});
  }
  return DirectedMultigraph(g.vertex_count(), std::move(arcs));
}

std::int64_t out_degree(const DirectedMultigraph& g, int v) {
  if (v < 1 || v > g.vertex_count()) {
    fail(Errc::VertexOutOfRange, "vertex " + std::to_string(v) + " out of range");
  }
  std::int64_t deg = 0;
  for (const Arc& a : g.arcs()) {
    if (a.kind == ArcKind::Forward) {
      if (a.from == v) deg += a.mult;
    } else if (a.from == v || a.to == v) {
      deg += a.mult;
    }
  }
  return deg;
}

DirectedMultigraph delete_vertex(const DirectedMultigraph& g, int v) {
  if (v < 1 || v > g.vertex_count()) {
    fail(Errc::VertexOutOfRange, "vertex " + std::to_string(v) + " out of range");
  }
  if (g.vertex_count() == 1) fail(Errc::LastVertex, "cannot delete the last vertex");
  auto reindex = [v](int w) { return w > v ? w - 1 : w; };
  std::vector<Arc> arcs;
  for (const Arc& a : g.arcs()) {
    if (a.from == v || a.to == v) continue;
    arcs.push_back({reindex(a.from), reindex(a.to), a.kind, a.mult});
  }
  return DirectedMultigraph(g.vertex_count() - 1, std::move(arcs));
}

}  // namespace grajac
