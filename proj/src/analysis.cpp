#include "grajac/analysis.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace grajac {

IntegerMatrix laplacian(const DirectedMultigraph& g) {
  const int n = g.vertex_count();
  IntegerMatrix l(n, n);
  for (const Arc& a : g.arcs()) {
    const int i = a.from - 1, j = a.to - 1;
    l.at(i, i) += a.mult;
    l.at(i, j) -= a.mult;
    if (a.kind == ArcKind::Bidirectional) {
      l.at(j, j) += a.mult;
      l.at(j, i) -= a.mult;
    }
  }
  return l;
}

AbelianGroup picard_group(const DirectedMultigraph& g) { return cokernel(laplacian(g)); }

AbelianGroup jacobian(const DirectedMultigraph& g) { return torsion(picard_group(g)); }

namespace {

std::vector<std::vector<int>> adjacency(const DirectedMultigraph& g) {
  std::vector<std::vector<int>> adj(g.vertex_count() + 1);
  for (const Arc& a : g.arcs()) {
    adj[a.from].push_back(a.to);
    if (a.kind == ArcKind::Bidirectional) adj[a.to].push_back(a.from);
  }
  return adj;
}

}  // namespace

SccDecomposition scc(const DirectedMultigraph& g) {
  const int n = g.vertex_count();
  auto adj = adjacency(g);
  std::vector<int> index(n + 1, -1), low(n + 1), comp(n + 1, -1), stack;
  std::vector<bool> on_stack(n + 1, false);
  int counter = 0, ncomp = 0;
  std::vector<std::vector<int>> components;

  std::function<void(int)> dfs = [&](int v) {
    index[v] = low[v] = counter++;
    stack.push_back(v);
    on_stack[v] = true;
    for (int w : adj[v]) {
      if (index[w] == -1) {
        dfs(w);
        low[v] = std::min(low[v], low[w]);
      } else if (on_stack[w]) {
        low[v] = std::min(low[v], index[w]);
      }
    }
    if (low[v] == index[v]) {
      std::vector<int> c;
      int w;
      do {
        w = stack.back();
        stack.pop_back();
        on_stack[w] = false;
        comp[w] = ncomp;
        c.push_back(w);
      } while (w != v);
      std::sort(c.begin(), c.end());
      components.push_back(std::move(c));
      ++ncomp;
    }
  };
  for (int v = 1; v <= n; ++v) {
    if (index[v] == -1) dfs(v);
  }

  std::vector<bool> terminal(ncomp, true);
  for (int v = 1; v <= n; ++v) {
    for (int w : adj[v]) {
      if (comp[v] != comp[w]) terminal[comp[v]] = false;
    }
  }

  // deterministic order by smallest contained vertex
  std::vector<std::size_t> perm(components.size());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
  std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
    return components[a].front() < components[b].front();
  });
  SccDecomposition out;
  for (std::size_t i : perm) {
    out.components.push_back(components[i]);
    out.terminal.push_back(terminal[i]);
  }
  return out;
}

int predicted_rank(const DirectedMultigraph& g) {
  SccDecomposition d = scc(g);
  return static_cast<int>(std::count(d.terminal.begin(), d.terminal.end(), true));
}

std::optional<int> find_global_sink(const DirectedMultigraph& g) {
  const int n = g.vertex_count();
  // reverse reachability from a sink must cover every vertex
  std::vector<std::vector<int>> radj(n + 1);
  for (const Arc& a : g.arcs()) {
    radj[a.to].push_back(a.from);
    if (a.kind == ArcKind::Bidirectional) radj[a.from].push_back(a.to);
  }
  for (int v = 1; v <= n; ++v) {
    if (out_degree(g, v) != 0) continue;
    std::vector<bool> seen(n + 1, false);
    std::vector<int> queue{v};
    seen[v] = true;
    int reached = 1;
    while (!queue.empty()) {
      int u = queue.back();
      queue.pop_back();
      for (int w : radj[u]) {
        if (!seen[w]) {
          seen[w] = true;
          ++reached;
          queue.push_back(w);
        }
      }
    }
    if (reached == n) return v;
  }
  return std::nullopt;
}

namespace {

struct CycleWalk {
  std::vector<int> verts;  // cyclic order, verts[0] = 1
  std::string word;        // word[i] orients edge {verts[i], verts[i+1]}:
                           // F forward along the walk, B backward, D
                           // bidirectional, X anything else
};

std::optional<CycleWalk> cycle_walk(const DirectedMultigraph& g) {
  const int n = g.vertex_count();
  if (n < 3) return std::nullopt;
  std::vector<std::set<int>> nbr(n + 1);
  for (const Arc& a : g.arcs()) {
    nbr[a.from].insert(a.to);
    nbr[a.to].insert(a.from);
  }
  for (int v = 1; v <= n; ++v) {
    if (nbr[v].size() != 2) return std::nullopt;
  }
  CycleWalk w;
  w.verts.push_back(1);
  int prev = 1, cur = *nbr[1].begin();
  while (cur != 1) {
    w.verts.push_back(cur);
    auto it = nbr[cur].begin();
    int next = (*it == prev) ? *std::next(it) : *it;
    prev = cur;
    cur = next;
  }
  if (static_cast<int>(w.verts.size()) != n) return std::nullopt;  // disconnected

  for (int i = 0; i < n; ++i) {
    int u = w.verts[i], v = w.verts[(i + 1) % n];
    std::vector<Arc> between;
    for (const Arc& a : g.arcs()) {
      if ((a.from == u && a.to == v) || (a.from == v && a.to == u)) between.push_back(a);
    }
    char c = 'X';
    if (between.size() == 1 && between[0].mult == 1) {
      const Arc& a = between[0];
      if (a.kind == ArcKind::Bidirectional) {
        c = 'D';
      } else {
        c = (a.from == u) ? 'F' : 'B';
      }
    }
    w.word.push_back(c);
  }
  return w;
}

}  // namespace

bool is_cycle_shaped(const DirectedMultigraph& g) { return cycle_walk(g).has_value(); }

std::optional<DoubleChain> double_chain(const DirectedMultigraph& g) {
  auto walk = cycle_walk(g);
  if (!walk) fail(Errc::CycleShapeRequired, "double_chain needs a cycle-shaped graph");
  if (!find_global_sink(g)) return std::nullopt;
  const int n = g.vertex_count();
  std::optional<DoubleChain> best;
  for (int i = 0; i < n; ++i) {
    if (walk->word[i] != 'B') continue;
    int j = i + 1, k = 0;
    while (k < n - 2 && walk->word[j % n] == 'D') {
      ++k;
      ++j;
    }
    if (walk->word[j % n] != 'F') continue;
    DoubleChain dc;
    dc.length = k;
    for (int t = i; t <= j + 1; ++t) dc.vertices.push_back(walk->verts[t % n]);
    if (!best || dc.length > best->length) best = dc;
  }
  return best;
}

std::optional<TwoOppositePaths> is_two_opposite_paths(const DirectedMultigraph& g) {
  auto walk = cycle_walk(g);
  if (!walk) fail(Errc::CycleShapeRequired, "two-opposite-paths needs a cycle-shaped graph");
  const int n = g.vertex_count();
  const std::string& w = walk->word;
  for (int s = 0; s < n; ++s) {
    // sink at verts[s]: preceding edge points forward, following edge backward
    if (w[(s + n - 1) % n] != 'F' || w[s] != 'B') continue;
    int pos = s, b = 0, k = 0, a = 0;
    while (b < n && w[pos % n] == 'B') ++b, ++pos;
    while (k < n && w[pos % n] == 'D') ++k, ++pos;
    while (a < n && w[pos % n] == 'F') ++a, ++pos;
    if (b >= 1 && a >= 1 && b + k + a == n) {
      return TwoOppositePaths{b, a, k};
    }
  }
  return std::nullopt;
}

Int spanning_tree_count(const DirectedMultigraph& g) {
  for (const Arc& a : g.arcs()) {
    if (a.kind != ArcKind::Bidirectional) {
      fail(Errc::NotUndirected, "spanning_tree_count needs an undirected graph");
    }
  }
  const int n = g.vertex_count();
  std::vector<std::vector<int>> adj = adjacency(g);
  std::vector<bool> seen(n + 1, false);
  std::vector<int> queue{1};
  seen[1] = true;
  int reached = 1;
  while (!queue.empty()) {
    int u = queue.back();
    queue.pop_back();
    for (int w : adj[u]) {
      if (!seen[w]) {
        seen[w] = true;
        ++reached;
        queue.push_back(w);
      }
    }
  }
  if (reached != n) fail(Errc::Disconnected, "spanning_tree_count needs a connected graph");
  IntegerMatrix l = laplacian(g);
  IntegerMatrix minor(n - 1, n - 1);
  for (int i = 1; i < n; ++i) {
    for (int j = 1; j < n; ++j) minor.at(i - 1, j - 1) = l.at(i, j);
  }
  return n == 1 ? Int(1) : determinant(minor);
}

}  // namespace grajac
