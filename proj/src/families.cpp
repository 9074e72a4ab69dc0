#include "grajac/families.hpp"

#include <algorithm>
#include <queue>

#include "grajac/analysis.hpp"

namespace grajac {

DirectedMultigraph gen_cycle(const std::string& word) {
  const int n = static_cast<int>(word.size());
  if (n < 3) fail(Errc::WordTooShort, "orientation word needs length >= 3");
  std::vector<Arc> arcs;
  for (int i = 0; i < n; ++i) {
    int u = i + 1, v = (i + 1) % n + 1;
    switch (word[i]) {
      case 'F': arcs.push_back({u, v, ArcKind::Forward, 1}); break;
      case 'B': arcs.push_back({v, u, ArcKind::Forward, 1}); break;
      case 'D': arcs.push_back({u, v, ArcKind::Bidirectional, 1}); break;
      default: fail(Errc::ParseError, std::string("bad orientation letter '") + word[i] + "'");
    }
  }
  return build_graph(n, std::move(arcs));
}

DirectedMultigraph degree_zero_extension(const DirectedMultigraph& g, int sink_vertex) {
  if (!is_cycle_shaped(g)) fail(Errc::CycleShapeRequired, "degree_zero_extension needs a cycle");
  if (out_degree(g, sink_vertex) != 0) {
    fail(Errc::NotASinkVertex, "vertex " + std::to_string(sink_vertex) + " is not a sink");
  }
  const int n = g.vertex_count();
  int redirect = 0;
  for (const Arc& a : g.arcs()) {
    if (a.to == sink_vertex && (redirect == 0 || a.from < redirect)) redirect = a.from;
  }
  std::vector<Arc> arcs;
  for (const Arc& a : g.arcs()) {
    if (a.from == redirect && a.to == sink_vertex) continue;
    arcs.push_back(a);
  }
  arcs.push_back({sink_vertex, n + 1, ArcKind::Forward, 1});
  arcs.push_back({redirect, n + 1, ArcKind::Forward, 1});
  return build_graph(n + 1, std::move(arcs));
}

DirectedMultigraph degree_one_extension(const DirectedMultigraph& g, int v) {
  if (!is_cycle_shaped(g)) fail(Errc::CycleShapeRequired, "degree_one_extension needs a cycle");
  if (out_degree(g, v) != 1) {
    fail(Errc::DegreeMismatch, "vertex " + std::to_string(v) + " must have out-degree 1");
  }
  const int n = g.vertex_count();
  std::vector<Arc> arcs;
  bool split = false;
  for (const Arc& a : g.arcs()) {
    if (!split && a.kind == ArcKind::Forward && a.from == v) {
      arcs.push_back({v, n + 1, ArcKind::Forward, 1});
      arcs.push_back({n + 1, a.to, ArcKind::Forward, 1});
      split = true;
    } else if (!split && a.kind == ArcKind::Bidirectional && (a.from == v || a.to == v)) {
      int w = a.from == v ? a.to : a.from;
      arcs.push_back({v, n + 1, ArcKind::Forward, 1});
      arcs.push_back({n + 1, w, ArcKind::Bidirectional, 1});
      split = true;
    } else {
      arcs.push_back(a);
    }
  }
  return build_graph(n + 1, std::move(arcs));
}

DirectedMultigraph gen_two_opposite_paths(int n, int k, int p1_len) {
  const int p2_len = n - k - p1_len;
  if (n < 3 || k < 0 || p1_len < 1 || p2_len < 1) {
    fail(Errc::InfeasibleParameters, "need n >= 3, k >= 0, p1 >= 1, p1 + p2 + k = n");
  }
  std::string word(p2_len, 'F');
  word += std::string(p1_len, 'B');
  word += std::string(k, 'D');
  return gen_cycle(word);
}

DirectedMultigraph gen_obj4_cycle(int n) {
  if (n < 3) fail(Errc::WordTooShort, "obj4 cycle needs n >= 3");
  return gen_cycle("BB" + std::string(n - 3, 'D') + "F");
}

DirectedMultigraph gen_final_lemma_cycle(int n) {
  if (n < 3) fail(Errc::WordTooShort, "final-lemma cycle needs n >= 3");
  return gen_cycle("B" + std::string(n - 2, 'D') + "F");
}

DirectedMultigraph gen_wheel(int n, WheelVariant variant) {
  if (n < 4) fail(Errc::WheelTooSmall, "wheel needs n >= 4");
  std::vector<Arc> arcs;
  for (int i = 2; i <= n; ++i) {
    int next = i == n ? 2 : i + 1;
    arcs.push_back({i, next, ArcKind::Bidirectional, 1});
    switch (variant) {
      case WheelVariant::Undirected: arcs.push_back({1, i, ArcKind::Bidirectional, 1}); break;
      case WheelVariant::SpokesIn: arcs.push_back({i, 1, ArcKind::Forward, 1}); break;
      case WheelVariant::SpokesOut: arcs.push_back({1, i, ArcKind::Forward, 1}); break;
    }
  }
  return build_graph(n, std::move(arcs));
}

DirectedMultigraph gen_multipartite(const std::vector<int>& layer_sizes) {
  if (layer_sizes.size() < 2) fail(Errc::InfeasibleParameters, "need at least 2 layers");
  for (int s : layer_sizes) {
    if (s < 1) fail(Errc::EmptyLayer, "every layer needs at least one vertex");
  }
  std::vector<int> offset(layer_sizes.size() + 1, 0);
  for (std::size_t i = 0; i < layer_sizes.size(); ++i) offset[i + 1] = offset[i] + layer_sizes[i];
  std::vector<Arc> arcs;
  for (std::size_t t = 0; t + 1 < layer_sizes.size(); ++t) {
    for (int u = offset[t] + 1; u <= offset[t + 1]; ++u) {
      for (int v = offset[t + 1] + 1; v <= offset[t + 2]; ++v) {
        arcs.push_back({u, v, ArcKind::Forward, 1});
      }
    }
  }
  return build_graph(offset.back(), std::move(arcs));
}

DirectedMultigraph gen_random_tree(int n, std::uint64_t seed, double bidirectional_prob,
                                   TreeDirectionRule rule) {
  if (n < 1) fail(Errc::VertexOutOfRange, "tree needs n >= 1");
  if (n == 1) return build_graph(1, {});
  SplitMix64 rng(seed);

  // Prufer decode: skeleton edges in deterministic order.
  std::vector<std::pair<int, int>> edges;
  if (n == 2) {
    edges.push_back({1, 2});
  } else {
    std::vector<int> prufer(n - 2);
    for (int& x : prufer) x = rng.uniform(n);
    std::vector<int> degree(n + 1, 1);
    for (int x : prufer) ++degree[x];
    std::priority_queue<int, std::vector<int>, std::greater<int>> leaves;
    for (int v = 1; v <= n; ++v) {
      if (degree[v] == 1) leaves.push(v);
    }
    for (int x : prufer) {
      int leaf = leaves.top();
      leaves.pop();
      edges.push_back({leaf, x});
      if (--degree[x] == 1) leaves.push(x);
    }
    int a = leaves.top();
    leaves.pop();
    edges.push_back({a, leaves.top()});
  }

  // Orientation relative to a root at vertex 1 when the rule needs it.
  std::vector<int> parent(n + 1, 0);
  if (rule != TreeDirectionRule::Random) {
    std::vector<std::vector<int>> nbr(n + 1);
    for (auto [u, v] : edges) {
      nbr[u].push_back(v);
      nbr[v].push_back(u);
    }
    std::queue<int> bfs;
    bfs.push(1);
    parent[1] = 1;
    while (!bfs.empty()) {
      int u = bfs.front();
      bfs.pop();
      for (int w : nbr[u]) {
        if (parent[w] == 0) {
          parent[w] = u;
          bfs.push(w);
        }
      }
    }
  }

  std::vector<Arc> arcs;
  for (auto [u, v] : edges) {
    if (rng.bernoulli(bidirectional_prob)) {
      arcs.push_back({u, v, ArcKind::Bidirectional, 1});
      continue;
    }
    switch (rule) {
      case TreeDirectionRule::Random:
        if (rng.next() & 1) {
          arcs.push_back({u, v, ArcKind::Forward, 1});
        } else {
          arcs.push_back({v, u, ArcKind::Forward, 1});
        }
        break;
      case TreeDirectionRule::TowardRoot:
        arcs.push_back(parent[u] == v ? Arc{u, v, ArcKind::Forward, 1}
                                      : Arc{v, u, ArcKind::Forward, 1});
        break;
      case TreeDirectionRule::AwayFromRoot:
        arcs.push_back(parent[u] == v ? Arc{v, u, ArcKind::Forward, 1}
                                      : Arc{u, v, ArcKind::Forward, 1});
        break;
    }
  }
  return build_graph(n, std::move(arcs));
}

IntegerMatrix matrix_M(int n) {
  if (n < 1) fail(Errc::VertexOutOfRange, "matrix_M needs n >= 1");
  IntegerMatrix m(n, n);
  for (int i = 0; i < n; ++i) {
    m.at(i, i) = 2;
    if (i + 1 < n) {
      m.at(i, i + 1) = -1;
      m.at(i + 1, i) = -1;
    }
  }
  return m;
}

}  // namespace grajac
