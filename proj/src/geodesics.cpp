#include "qtree/geodesics.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace qtree {

namespace {

std::uint64_t sat_add(std::uint64_t x, std::uint64_t y) {
  std::uint64_t s = x + y;
  return s < x ? std::numeric_limits<std::uint64_t>::max() : s;
}

// Multi-source BFS; distances in edges of g.
std::vector<int> bfs_from(const Graph& g, std::span<const Vertex> sources) {
  std::vector<int> d(static_cast<std::size_t>(g.order()), -1);
  std::vector<Vertex> queue;
  queue.reserve(d.size());
  for (Vertex s : sources)
    if (d[s] < 0) {
      d[s] = 0;
      queue.push_back(s);
    }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Vertex x = queue[head];
    for (Vertex y : g.neighbors(x))
      if (d[y] < 0) {
        d[y] = d[x] + 1;
        queue.push_back(y);
      }
  }
  return d;
}

}  // namespace

std::uint64_t count_geodesics(const Graph& g, Vertex a, Vertex b) {
  const int n = g.order();
  std::vector<Vertex> order(n);
  for (Vertex v = 0; v < n; ++v) order[v] = v;
  std::sort(order.begin(), order.end(), [&](Vertex x, Vertex y) { return g.dist(a, x) < g.dist(a, y); });
  std::vector<std::uint64_t> cnt(n, 0);
  cnt[a] = 1;
  for (Vertex x : order) {
    if (x == a) continue;
    for (Vertex y : g.neighbors(x))
      if (g.dist(a, y) + 1 == g.dist(a, x)) cnt[x] = sat_add(cnt[x], cnt[y]);
  }
  return cnt[b];
}

GeodesicList enumerate_geodesics(const Graph& g, Vertex a, Vertex b, std::size_t cap) {
  GeodesicList out;
  std::vector<Vertex> path{a};
  // Depth-first over the geodesic DAG with ascending neighbours gives
  // lexicographic order.
  auto dfs = [&](auto&& self, Vertex x) -> bool {
    if (x == b) {
      if (out.paths.size() == cap) {
        out.truncated = true;
        return false;
      }
      out.paths.push_back(GeodesicPath{path});
      return true;
    }
    for (Vertex y : g.neighbors(x)) {
      if (g.dist(y, b) + 1 != g.dist(x, b)) continue;
      path.push_back(y);
      bool go_on = self(self, y);
      path.pop_back();
      if (!go_on) return false;
    }
    return true;
  };
  dfs(dfs, a);
  return out;
}

GeodesicList enumerate_geodesics(const Subdivision& s, const PointRef& a, const PointRef& b, std::size_t cap) {
  return enumerate_geodesics(s.fine(), s.locate(a), s.locate(b), cap);
}

bool is_geodesic(const Graph& g, std::span<const Vertex> walk) {
  if (walk.empty()) return false;
  for (std::size_t i = 1; i < walk.size(); ++i)
    if (!g.adjacent(walk[i - 1], walk[i])) return false;
  return g.dist(walk.front(), walk.back()) == static_cast<int>(walk.size()) - 1;
}

int hausdorff_distance(const Graph& g, std::span<const Vertex> A, std::span<const Vertex> B) {
  if (A.empty() || B.empty()) throw std::invalid_argument("Hausdorff distance of an empty set");
  auto da = bfs_from(g, A);
  auto db = bfs_from(g, B);
  int h = 0;
  for (Vertex x : A) h = std::max(h, db[x]);
  for (Vertex y : B) h = std::max(h, da[y]);
  return h;
}

PathHausdorff::PathHausdorff(const Graph& g) : grid_(g, 2) {}

std::vector<int> PathHausdorff::field(std::span<const Vertex> p) const {
  auto traced = grid_.trace(p);
  return bfs_from(grid_.fine(), traced);
}

int PathHausdorff::sup_over(const std::vector<int>& f, std::span<const Vertex> q) const {
  int h = 0;
  for (Vertex x : grid_.trace(q)) h = std::max(h, f[x]);
  return h;
}

int PathHausdorff::half_distance(std::span<const Vertex> p, std::span<const Vertex> q) const {
  return std::max(sup_over(field(p), q), sup_over(field(q), p));
}

const char* to_string(StabilityMode m) { return m == StabilityMode::vertices ? "vertices" : "grid_points"; }

StabilityReport stability_constant(const Graph& g, StabilityMode mode, std::size_t cap) {
  StabilityReport rep;
  rep.mode = mode;
  const bool grid = mode == StabilityMode::grid_points;
  Subdivision halves(g, grid ? 2 : 1);
  const Graph& H = halves.fine();
  PathHausdorff hd(H);

  int best = 0;
  const GeodesicPath* wa = nullptr;
  const GeodesicPath* wb = nullptr;
  GeodesicList kept;
  std::vector<Vertex> kept_pair{0, 0};

  for (Vertex x = 0; x < H.order(); ++x) {
    for (Vertex y = x + 1; y < H.order(); ++y) {
      ++rep.pairs_examined;
      if (H.dist(x, y) < 2 || count_geodesics(H, x, y) < 2) continue;
      GeodesicList list = enumerate_geodesics(H, x, y, cap);
      rep.caps_hit = rep.caps_hit || list.truncated;
      std::vector<std::vector<int>> fields;
      fields.reserve(list.paths.size());
      for (const auto& p : list.paths) fields.push_back(hd.field(p.vertices));
      int pair_best = -1;
      std::size_t bi = 0, bj = 0;
      for (std::size_t i = 0; i < list.paths.size(); ++i)
        for (std::size_t j = i + 1; j < list.paths.size(); ++j) {
          int h = std::max(hd.sup_over(fields[i], list.paths[j].vertices),
                           hd.sup_over(fields[j], list.paths[i].vertices));
          if (h > pair_best) {
            pair_best = h;
            bi = i;
            bj = j;
          }
        }
      if (pair_best > best) {
        best = pair_best;
        kept = GeodesicList{{list.paths[bi], list.paths[bj]}, false};
        kept_pair = {x, y};
        wa = &kept.paths[0];
        wb = &kept.paths[1];
      }
    }
  }

  // half edges of H: quarters of g in grid mode, halves of g otherwise
  rep.R = grid ? Length::quarters(best) : Length::halves(best);
  auto describe = [&](const GeodesicPath& p) {
    std::vector<PointRef> pts;
    for (Vertex v : p.vertices) pts.push_back(halves.describe(v));
    return pts;
  };
  if (wa) {
    rep.from = halves.describe(kept_pair[0]);
    rep.to = halves.describe(kept_pair[1]);
    rep.first = describe(*wa);
    rep.second = describe(*wb);
  }
  return rep;
}

}  // namespace qtree
