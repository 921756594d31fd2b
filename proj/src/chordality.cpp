#include "qtree/chordality.hpp"

#include <algorithm>
#include <stdexcept>

namespace qtree {

int Cycle::arc(int i, int j) const {
  int d = std::abs(i - j) % length();
  return std::min(d, length() - d);
}

int Cycle::position_of(Vertex v) const {
  auto it = std::find(vertices.begin(), vertices.end(), v);
  return it == vertices.end() ? -1 : static_cast<int>(it - vertices.begin());
}

std::string to_string(const Cycle& c) {
  std::string s = "[";
  for (std::size_t i = 0; i < c.vertices.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(c.vertices[i]);
  }
  return s + "]";
}

CycleList enumerate_cycles(const Graph& g, int lmax, std::size_t cap) {
  const int n = g.order();
  if (lmax <= 0) lmax = n;
  CycleList out;
  std::vector<char> used(n, 0);
  std::vector<Vertex> path;
  bool stop = false;

  for (Vertex s = 0; s < n && !stop; ++s) {
    path.assign(1, s);
    used[s] = 1;
    auto dfs = [&](auto&& self, Vertex x) -> void {
      for (Vertex y : g.neighbors(x)) {
        if (stop) return;
        if (y == s) {
          if (path.size() >= 3 && path[1] < path.back()) {
            if (out.cycles.size() == cap) {
              out.truncated = stop = true;
              return;
            }
            out.cycles.push_back(Cycle{path});
          }
          continue;
        }
        if (y < s || used[y]) continue;
        // the way back to s is at least d(y,s) more edges
        if (static_cast<int>(path.size()) + g.dist(y, s) > lmax) continue;
        used[y] = 1;
        path.push_back(y);
        self(self, y);
        path.pop_back();
        used[y] = 0;
      }
    };
    dfs(dfs, s);
    used[s] = 0;
  }
  std::sort(out.cycles.begin(), out.cycles.end(),
            [](const Cycle& a, const Cycle& b) { return a.vertices < b.vertices; });
  return out;
}

namespace {

std::vector<char> membership(const Graph& g, const Cycle& c) {
  std::vector<char> on(g.order(), 0);
  for (Vertex v : c.vertices) on[v] = 1;
  return on;
}

// BFS from p through vertices off the cycle. Returns, per cycle position,
// the shortest strict path length from p (or -1), with parents for
// reconstruction.
struct StrictBfs {
  std::vector<int> dist;
  std::vector<Vertex> parent;
  std::vector<int> to_position;
  std::vector<Vertex> last_hop;
};

StrictBfs strict_bfs(const Graph& g, const Cycle& c, const std::vector<char>& on, Vertex p) {
  StrictBfs r;
  r.dist.assign(g.order(), -1);
  r.parent.assign(g.order(), -1);
  r.to_position.assign(c.length(), -1);
  r.last_hop.assign(c.length(), -1);
  std::vector<Vertex> queue{p};
  r.dist[p] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Vertex x = queue[head];
    for (Vertex y : g.neighbors(x)) {
      if (on[y]) {
        int pos = c.position_of(y);
        if (y != p && r.to_position[pos] < 0) {
          r.to_position[pos] = r.dist[x] + 1;
          r.last_hop[pos] = x;
        }
        continue;
      }
      if (r.dist[y] < 0) {
        r.dist[y] = r.dist[x] + 1;
        r.parent[y] = x;
        queue.push_back(y);
      }
    }
  }
  return r;
}

std::vector<int> strict_reach_of(const Graph& g, const Cycle& c) {
  auto on = membership(g, c);
  std::vector<int> reach(c.length(), -1);
  for (int i = 0; i < c.length(); ++i) {
    auto bfs = strict_bfs(g, c, on, c.vertices[i]);
    for (int j = 0; j < c.length(); ++j) {
      int len = bfs.to_position[j];
      if (len < 0 || len >= c.arc(i, j)) continue;
      if (reach[i] < 0 || len < reach[i]) reach[i] = len;
    }
  }
  return reach;
}

}  // namespace

std::optional<ShortcutCert> min_shortcut(const Graph& g, const Cycle& c, Vertex p, Vertex q, bool strict) {
  int i = c.position_of(p), j = c.position_of(q);
  if (i < 0 || j < 0 || p == q) throw std::invalid_argument("shortcut endpoints must be distinct cycle vertices");
  ShortcutCert cert{p, q, {}, 0, strict};
  if (!strict) {
    if (g.dist(p, q) >= c.arc(i, j)) return std::nullopt;
    cert.length = g.dist(p, q);
    Vertex x = p;
    cert.path.push_back(x);
    while (x != q) {
      for (Vertex y : g.neighbors(x))
        if (g.dist(y, q) + 1 == g.dist(x, q)) {
          x = y;
          break;
        }
      cert.path.push_back(x);
    }
    cert.strict = cert.path.size() == 2 || std::none_of(cert.path.begin() + 1, cert.path.end() - 1,
                                                        [&](Vertex v) { return c.position_of(v) >= 0; });
    return cert;
  }
  auto on = membership(g, c);
  auto bfs = strict_bfs(g, c, on, p);
  int len = bfs.to_position[j];
  if (len < 0 || len >= c.arc(i, j)) return std::nullopt;
  cert.length = len;
  std::vector<Vertex> rev{q};
  for (Vertex x = bfs.last_hop[j]; x != p; x = bfs.parent[x]) rev.push_back(x);
  rev.push_back(p);
  cert.path.assign(rev.rbegin(), rev.rend());
  return cert;
}

bool validate_shortcut(const Graph& g, const Cycle& c, const ShortcutCert& s) {
  if (s.path.size() < 2 || s.path.front() != s.p || s.path.back() != s.q) return false;
  for (std::size_t i = 1; i < s.path.size(); ++i)
    if (!g.adjacent(s.path[i - 1], s.path[i])) return false;
  int i = c.position_of(s.p), j = c.position_of(s.q);
  if (i < 0 || j < 0) return false;
  if (s.length != static_cast<int>(s.path.size()) - 1 || s.length >= c.arc(i, j)) return false;
  if (s.strict)
    for (std::size_t k = 1; k + 1 < s.path.size(); ++k)
      if (c.position_of(s.path[k]) >= 0) return false;
  return true;
}

VertexSet shortcut_vertices(const Graph& g, const Cycle& c, int m) {
  auto reach = strict_reach_of(g, c);
  VertexSet out;
  for (int i = 0; i < c.length(); ++i)
    if (reach[i] >= 0 && reach[i] <= m) out.push_back(c.vertices[i]);
  std::sort(out.begin(), out.end());
  return out;
}

Length density_radius(const Cycle& c, const VertexSet& X) {
  std::vector<int> pos;
  for (Vertex x : X) {
    int p = c.position_of(x);
    if (p < 0) throw std::invalid_argument("vertex " + std::to_string(x) + " is not on the cycle");
    pos.push_back(p);
  }
  if (pos.empty()) return Length::infinity();
  std::sort(pos.begin(), pos.end());
  pos.erase(std::unique(pos.begin(), pos.end()), pos.end());
  int gap = pos.front() + c.length() - pos.back();
  for (std::size_t i = 1; i < pos.size(); ++i) gap = std::max(gap, pos[i] - pos[i - 1]);
  return Length::halves(gap);
}

const char* to_string(Family f) {
  switch (f) {
    case Family::all: return "all";
    case Family::triangle: return "T";
    case Family::bigon: return "B";
    case Family::vertex_bigon: return "B0";
  }
  return "?";
}

bool FamilyTags::has(Family f) const {
  switch (f) {
    case Family::all: return true;
    case Family::triangle: return triangle;
    case Family::bigon: return bigon;
    case Family::vertex_bigon: return vertex_bigon;
  }
  return false;
}

std::vector<Vertex> cycle_grid(const Subdivision& s, const Cycle& c) {
  const int t = s.resolution(), L = c.length();
  std::vector<Vertex> grid;
  grid.reserve(static_cast<std::size_t>(L) * t);
  for (int i = 0; i < L; ++i)
    for (int j = 0; j < t; ++j) grid.push_back(s.grid_point(c.vertices[i], c.vertices[(i + 1) % L], j));
  return grid;
}

std::vector<int> geodesic_reach(const Graph& fine, const std::vector<Vertex>& grid) {
  const int M = static_cast<int>(grid.size());
  std::vector<int> reach(M, 0);
  for (int i = 0; i < M; ++i) {
    int r = 0;
    while (r + 1 <= M / 2 && fine.dist(grid[i], grid[(i + r + 1) % M]) == r + 1) ++r;
    reach[i] = r;
  }
  return reach;
}

FamilyTags classify_cycle(const Graph& g, const Cycle& c, int t) {
  if (t != 1 && t != 2) throw std::invalid_argument("classification resolution must be 1 or 2");
  return classify_cycle(Subdivision(g, t), c);
}

FamilyTags classify_cycle(const Subdivision& s, const Cycle& c) {
  const int t = s.resolution();
  auto grid = cycle_grid(s, c);
  auto reach = geodesic_reach(s.fine(), grid);
  const int M = static_cast<int>(grid.size());
  auto at = [&](int p) { return reach[p % M]; };
  FamilyTags tags;
  for (int i = 0; i < M; ++i) {
    int j = i + at(i);
    int k = j + at(j);
    if (k >= i + M) tags.bigon = tags.triangle = true;
    else if (k + at(k) >= i + M) tags.triangle = true;
    if (i % t == 0) {
      int jv = j - j % t;
      if (jv > i && jv + at(jv) >= i + M) tags.vertex_bigon = true;
    }
  }
  return tags;
}

Length CycleRecord::radius(int m) const {
  const int L = static_cast<int>(strict_reach.size());
  int first = -1, prev = -1, gap = 0;
  for (int i = 0; i < L; ++i) {
    if (strict_reach[i] < 0 || strict_reach[i] > m) continue;
    if (first < 0) first = i;
    else gap = std::max(gap, i - prev);
    prev = i;
  }
  if (first < 0) return Length::infinity();
  gap = std::max(gap, first + L - prev);
  return Length::halves(gap);
}

CycleCatalog::CycleCatalog(const Graph& g, int lmax, std::size_t cap) {
  auto list = enumerate_cycles(g, lmax, cap);
  truncated_ = list.truncated;
  Subdivision halves(g, 2);
  records_.reserve(list.cycles.size());
  for (auto& c : list.cycles) {
    CycleRecord r;
    r.cycle = std::move(c);
    const Cycle& cy = r.cycle;
    for (int i = 0; i < cy.length(); ++i)
      for (int j = i + 1; j < cy.length(); ++j) {
        int d = g.dist(cy.vertices[i], cy.vertices[j]);
        if (d < cy.arc(i, j) && (r.min_shortcut < 0 || d < r.min_shortcut)) r.min_shortcut = d;
      }
    r.strict_reach = strict_reach_of(g, cy);
    r.tags = classify_cycle(halves, cy);
    longest_ = std::max(longest_, cy.length());
    records_.push_back(std::move(r));
  }
}

std::string to_string(const ChordalityQuery& q) {
  std::string s = "k=" + std::to_string(q.k);
  if (q.m) s += " m=" + std::to_string(*q.m);
  if (q.rho) s += " rho=" + q.rho->str();
  return s + " family=" + to_string(q.family);
}

ChordalityVerdict chordality_check(const CycleCatalog& cat, const ChordalityQuery& q) {
  if (q.k < 4) throw std::invalid_argument("chordality needs k >= 4");
  if (q.m && (*q.m < 0 || q.k < 2 * *q.m)) throw std::invalid_argument("chordality needs k >= 2m");
  if (q.rho && !q.m) throw std::invalid_argument("density radius needs m");
  ChordalityVerdict v;
  for (const auto& r : cat.records()) {
    if (r.cycle.length() < q.k || !r.tags.has(q.family)) continue;
    ++v.qualifying;
    bool ok;
    if (q.rho) ok = r.radius(*q.m) <= *q.rho;
    else if (q.m) ok = r.min_shortcut >= 0 && r.min_shortcut <= *q.m;
    else ok = r.min_shortcut >= 0;
    if (!ok) {
      v.status = Status::fail;
      v.witness = r.cycle;
      return v;
    }
  }
  if (cat.truncated()) v.status = Status::inconclusive;
  else v.status = v.qualifying ? Status::pass : Status::vacuous;
  return v;
}

ChordalityVerdict chordality_check(const Graph& g, const ChordalityQuery& q, int lmax, std::size_t cap) {
  return chordality_check(CycleCatalog(g, lmax, cap), q);
}

std::optional<int> minimal_m(const CycleCatalog& cat, int k, Family f) {
  int m = 0;
  for (const auto& r : cat.records()) {
    if (r.cycle.length() < k || !r.tags.has(f)) continue;
    if (r.min_shortcut < 0) return std::nullopt;
    m = std::max(m, r.min_shortcut);
  }
  return m;
}

Length minimal_rho(const CycleCatalog& cat, int k, int m, Family f) {
  Length rho = Length::units(0);
  for (const auto& r : cat.records()) {
    if (r.cycle.length() < k || !r.tags.has(f)) continue;
    rho = max(rho, r.radius(m));
  }
  return rho;
}

}  // namespace qtree
