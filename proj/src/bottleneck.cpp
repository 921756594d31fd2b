#include "qtree/bottleneck.hpp"

#include <algorithm>
#include <stdexcept>

namespace qtree {

namespace {

// BFS path from v to w through vertices not removed, skipping edge (x,y).
std::vector<Vertex> avoiding_path(const Graph& g, const std::vector<char>& removed, Vertex v, Vertex w, Vertex x,
                                  Vertex y) {
  std::vector<Vertex> parent(g.order(), -1);
  std::vector<Vertex> queue{v};
  parent[v] = v;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Vertex u = queue[head];
    for (Vertex z : g.neighbors(u)) {
      if (parent[z] >= 0 || removed[z]) continue;
      if ((u == x && z == y) || (u == y && z == x)) continue;
      parent[z] = u;
      queue.push_back(z);
    }
  }
  std::vector<Vertex> path;
  if (parent[w] < 0) return path;
  for (Vertex u = w; u != v; u = parent[u]) path.push_back(u);
  path.push_back(v);
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace

BPVerdict bp_check_vertices(const Graph& g, Length delta_prime) {
  if (delta_prime < Length::units(0)) throw std::invalid_argument("delta_prime must be >= 0");
  const std::int64_t q = delta_prime.is_infinite() ? std::int64_t{1} << 40 : delta_prime.in_quarters();
  const int n = g.order();
  BPVerdict verdict;
  std::vector<char> removed(n);

  auto test = [&](Vertex v, Vertex w, PointRef c, Vertex x, Vertex y) {
    for (Vertex u = 0; u < n; ++u) {
      std::int64_t quarters = c.is_vertex() ? 4LL * g.dist(u, x) : 2 + 4LL * std::min(g.dist(u, x), g.dist(u, y));
      removed[u] = quarters <= q;
    }
    if (removed[v] || removed[w]) return true;
    auto path = avoiding_path(g, removed, v, w, x, y);
    if (path.empty()) return true;
    verdict.holds = false;
    verdict.witness = BPWitness{v, w, c, std::move(path)};
    return false;
  };

  for (Vertex v = 0; v < n; ++v)
    for (Vertex w = v + 1; w < n; ++w) {
      const int d = g.dist(v, w);
      if (d % 2 == 0) {
        for (Vertex c = 0; c < n; ++c)
          if (g.dist(v, c) == d / 2 && g.dist(c, w) == d / 2)
            if (!test(v, w, PointRef::vertex(c), c, -1)) return verdict;
      } else {
        for (auto [x, y] : g.edges()) {
          for (auto [s, e] : {std::pair{x, y}, std::pair{y, x}}) {
            if (g.dist(v, s) == d / 2 && g.dist(e, w) == d / 2)
              if (!test(v, w, PointRef::on_edge(s, e, 1, 2), s, e)) return verdict;
          }
        }
      }
    }
  return verdict;
}

BPReport bp_delta(const Graph& g) {
  BPReport rep;
  std::optional<BPWitness> last_failure;
  for (std::int64_t h = 0;; ++h) {
    auto v = bp_check_vertices(g, Length::halves(h));
    if (v.holds) {
      rep.delta_prime = Length::halves(h);
      break;
    }
    last_failure = v.witness;
  }
  rep.delta = rep.delta_prime + Length::halves(3);
  rep.witness = last_failure;
  return rep;
}

CharacterizationVerdict neighbor_separator_characterization(const Graph& g, int delta2) {
  if (delta2 < 1) throw std::invalid_argument("delta2 must be >= 1");
  const int n = g.order();
  // component labels of G minus the closed delta2-ball around each c; -1 inside the ball
  std::vector<std::vector<int>> label(n, std::vector<int>(n, -1));
  for (Vertex c = 0; c < n; ++c) {
    auto& lab = label[c];
    int next = 0;
    for (Vertex s = 0; s < n; ++s) {
      if (g.dist(s, c) <= delta2 || lab[s] >= 0) continue;
      std::vector<Vertex> queue{s};
      lab[s] = next;
      for (std::size_t head = 0; head < queue.size(); ++head)
        for (Vertex y : g.neighbors(queue[head]))
          if (lab[y] < 0 && g.dist(y, c) > delta2) {
            lab[y] = next;
            queue.push_back(y);
          }
      ++next;
    }
  }
  auto separating = [&](Vertex a, Vertex b, Vertex c) {
    const auto& lab = label[c];
    return lab[a] >= 0 && lab[b] >= 0 && lab[a] != lab[b];
  };

  CharacterizationVerdict out;
  std::vector<char> open(n);
  std::vector<Vertex> order(n);
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b) {
      if (g.dist(a, b) < 2 * delta2 + 2) continue;
      ++out.pairs;
      // open[x]: some geodesic from x to b has no separating interior vertex
      for (Vertex x = 0; x < n; ++x) order[x] = x;
      std::sort(order.begin(), order.end(), [&](Vertex x, Vertex y) { return g.dist(x, b) < g.dist(y, b); });
      std::fill(open.begin(), open.end(), 0);
      for (Vertex x : order) {
        if (x != a && x != b && separating(a, b, x)) continue;
        if (x == b) {
          open[x] = 1;
          continue;
        }
        for (Vertex y : g.neighbors(x))
          if (open[y] && g.dist(y, b) + 1 == g.dist(x, b)) {
            open[x] = 1;
            break;
          }
      }
      if (!open[a]) continue;
      for (Vertex x = a;;) {
        out.witness.push_back(x);
        if (x == b) break;
        for (Vertex y : g.neighbors(x))
          if (open[y] && g.dist(y, b) + 1 == g.dist(x, b)) {
            x = y;
            break;
          }
      }
      out.status = Status::fail;
      return out;
    }
  out.status = out.pairs ? Status::pass : Status::vacuous;
  return out;
}

int minimal_neighbor_separator_radius(const Graph& g) {
  for (int d2 = 1;; ++d2)
    if (neighbor_separator_characterization(g, d2).status != Status::fail) return d2;
}

}  // namespace qtree
