#pragma once

// Slow reference implementations used only by the tests. Each one works
// from definitions and shares no code with the library beyond Graph's
// adjacency lists.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <set>
#include <vector>

#include "qtree/graph.hpp"

namespace oracle {

using qtree::Graph;
using qtree::Vertex;

inline std::vector<std::vector<int>> floyd_warshall(const Graph& g) {
  const int n = g.order(), inf = 1 << 28;
  std::vector<std::vector<int>> d(n, std::vector<int>(n, inf));
  for (int i = 0; i < n; ++i) d[i][i] = 0;
  for (auto [u, v] : g.edges()) d[u][v] = d[v][u] = 1;
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  return d;
}

inline std::vector<int> bfs(const Graph& g, Vertex s, const std::vector<char>& blocked = {}) {
  std::vector<int> d(g.order(), -1);
  if (!blocked.empty() && blocked[s]) return d;
  std::vector<Vertex> q{s};
  d[s] = 0;
  for (std::size_t h = 0; h < q.size(); ++h)
    for (Vertex y : g.neighbors(q[h]))
      if (d[y] < 0 && (blocked.empty() || !blocked[y])) {
        d[y] = d[q[h]] + 1;
        q.push_back(y);
      }
  return d;
}

/// Simple cycles as sorted edge-index sets, by DFS from every start.
inline std::set<std::vector<int>> cycles_as_edge_sets(const Graph& g, int lmax) {
  std::set<std::vector<int>> out;
  std::vector<Vertex> path;
  std::vector<char> on(g.order());
  std::function<void(Vertex)> dfs = [&](Vertex x) {
    for (Vertex y : g.neighbors(x)) {
      if (y == path[0] && path.size() >= 3) {
        std::vector<int> es;
        for (std::size_t i = 0; i < path.size(); ++i)
          es.push_back(g.edge_index(path[i], path[(i + 1) % path.size()]));
        std::sort(es.begin(), es.end());
        out.insert(es);
      }
      if (on[y] || static_cast<int>(path.size()) >= lmax) continue;
      on[y] = 1;
      path.push_back(y);
      dfs(y);
      path.pop_back();
      on[y] = 0;
    }
  };
  for (Vertex s = 0; s < g.order(); ++s) {
    path = {s};
    on[s] = 1;
    dfs(s);
    on[s] = 0;
  }
  return out;
}

/// Number of shortest a-b paths by layered dynamic programming.
inline std::uint64_t geodesic_count(const Graph& g, Vertex a, Vertex b) {
  auto da = bfs(g, a);
  std::vector<Vertex> order(g.order());
  for (int i = 0; i < g.order(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](Vertex x, Vertex y) { return da[x] < da[y]; });
  std::vector<std::uint64_t> ways(g.order());
  ways[a] = 1;
  for (Vertex x : order)
    for (Vertex y : g.neighbors(x))
      if (da[y] == da[x] + 1) ways[y] += ways[x];
  return ways[b];
}

/// Every simple v-w path.
inline void simple_paths(const Graph& g, Vertex v, Vertex w, const std::function<void(const std::vector<Vertex>&)>& f) {
  std::vector<Vertex> path{v};
  std::vector<char> on(g.order());
  on[v] = 1;
  std::function<void(Vertex)> dfs = [&](Vertex x) {
    if (x == w) {
      f(path);
      return;
    }
    for (Vertex y : g.neighbors(x))
      if (!on[y]) {
        on[y] = 1;
        path.push_back(y);
        dfs(y);
        path.pop_back();
        on[y] = 0;
      }
  };
  dfs(v);
}

/// Bottleneck property on vertices by its literal definition: each simple
/// path, viewed as a curve, must come within delta_quarters/4 of every
/// midpoint of every geodesic. Distances in quarters.
inline bool bp_literal(const Graph& g, int delta_quarters) {
  auto d = floyd_warshall(g);
  const int n = g.order();
  // distance in quarters from a midpoint c (vertex x, or midpoint of edge xy) to a path curve
  auto curve_dist = [&](Vertex x, Vertex y, const std::vector<Vertex>& p) {
    int best = std::numeric_limits<int>::max();
    auto point_to_vertex = [&](Vertex u) {
      if (y < 0) return 4 * d[x][u];
      return 2 + 4 * std::min(d[x][u], d[y][u]);
    };
    for (Vertex u : p) best = std::min(best, point_to_vertex(u));
    // the curve passes through edge xy itself
    if (y >= 0)
      for (std::size_t i = 0; i + 1 < p.size(); ++i)
        if ((p[i] == x && p[i + 1] == y) || (p[i] == y && p[i + 1] == x)) best = 0;
    // along an edge not through c the distance is smallest at an end
    return best;
  };
  for (Vertex v = 0; v < n; ++v)
    for (Vertex w = v + 1; w < n; ++w) {
      std::vector<std::pair<Vertex, Vertex>> mids;
      const int dv = d[v][w];
      if (dv % 2 == 0) {
        for (Vertex c = 0; c < n; ++c)
          if (d[v][c] == dv / 2 && d[c][w] == dv / 2) mids.push_back({c, -1});
      } else {
        for (auto [x, y] : g.edges()) {
          if (d[v][x] == dv / 2 && d[y][w] == dv / 2) mids.push_back({x, y});
          if (d[v][y] == dv / 2 && d[x][w] == dv / 2) mids.push_back({y, x});
        }
      }
      bool ok = true;
      simple_paths(g, v, w, [&](const std::vector<Vertex>& p) {
        for (auto [x, y] : mids)
          if (curve_dist(x, y, p) > delta_quarters) ok = false;
      });
      if (!ok) return false;
    }
  return true;
}

/// All inclusion-minimal ab r-separators by all-subset search over
/// bitmasks. Literal minimality: no proper subset r-separates.
inline std::set<std::vector<Vertex>> minimal_separators(const Graph& g, Vertex a, Vertex b, int r) {
  const int n = g.order();
  auto d = floyd_warshall(g);
  const std::uint32_t full = (1u << n) - 1;
  std::vector<char> sep(full + 1);
  for (std::uint32_t S = 0; S <= full; ++S) {
    if (S >> a & 1 || S >> b & 1) continue;
    std::vector<char> blocked(n);
    for (int v = 0; v < n; ++v) blocked[v] = S >> v & 1;
    auto da = bfs(g, a, blocked), db = bfs(g, b, blocked);
    if (da[b] >= 0) continue;
    bool far = true;
    for (int v = 0; v < n && far; ++v)
      for (int w = 0; w < n && far; ++w)
        if (da[v] >= 0 && db[w] >= 0 && d[v][w] <= r) far = false;
    sep[S] = far;
  }
  std::set<std::vector<Vertex>> out;
  for (std::uint32_t S = 0; S <= full; ++S) {
    if (!sep[S]) continue;
    bool minimal = true;
    for (std::uint32_t T = (S - 1) & S;; T = (T - 1) & S) {
      if (T != S && sep[T]) {
        minimal = false;
        break;
      }
      if (T == 0) break;
    }
    if (!minimal) continue;
    std::vector<Vertex> v;
    for (int x = 0; x < n; ++x)
      if (S >> x & 1) v.push_back(x);
    out.insert(v);
  }
  return out;
}

/// Hyperbolicity of the cycle C_n over geodesic triangles with corners on
/// the quarter grid, in quarters, from the arc metric alone.
inline int cycle_delta_quarters(int n) {
  const int L = 4 * n;
  auto cd = [&](int x, int y) {
    int t = ((x - y) % L + L) % L;
    return std::min(t, L - t);
  };
  int best = 0;
  for (int i = 0; i < L; ++i)
    for (int j = i; j < L; ++j)
      for (int k = j; k < L; ++k) {
        int s1 = j - i, s2 = k - j, s3 = L - (k - i);
        if (2 * s1 > L || 2 * s2 > L || 2 * s3 > L) continue;
        const int corners[3] = {i, j, k}, lens[3] = {s1, s2, s3};
        for (int side = 0; side < 3; ++side) {
          const int from = corners[side], len = lens[side];
          const int o1 = corners[(side + 1) % 3], o2 = corners[side];
          // the other two sides form the complementary closed arc, from
          // the far corner round to this side's start
          for (int s = 0; s <= len; ++s) {
            int p = (from + s) % L;
            best = std::max(best, std::min(cd(p, o1), cd(p, o2)));
          }
        }
      }
  return best;
}

/// Hausdorff distance between two curves of g, each a vertex walk of g,
/// measured on subdivide(g, t) by brute force; returns units of 1/t.
inline int curve_hausdorff(const Graph& fine, const std::vector<Vertex>& p, const std::vector<Vertex>& q) {
  auto dist_to = [&](const std::vector<Vertex>& set) {
    std::vector<int> best(fine.order(), std::numeric_limits<int>::max());
    for (Vertex s : set) {
      auto d = bfs(fine, s);
      for (int i = 0; i < fine.order(); ++i) best[i] = std::min(best[i], d[i]);
    }
    return best;
  };
  auto dp = dist_to(p), dq = dist_to(q);
  int h = 0;
  for (Vertex x : p) h = std::max(h, dq[x]);
  for (Vertex x : q) h = std::max(h, dp[x]);
  return h;
}

}  // namespace oracle
