#include "qtree/separators.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <set>
#include <stdexcept>

namespace qtree {

namespace {

using Mask = std::uint64_t;

// Component of start in g minus the removed vertices.
VertexSet component(const Graph& g, const std::vector<char>& removed, Vertex start) {
  VertexSet comp;
  if (removed[start]) return comp;
  std::vector<char> seen(g.order(), 0);
  comp.push_back(start);
  seen[start] = 1;
  for (std::size_t head = 0; head < comp.size(); ++head)
    for (Vertex y : g.neighbors(comp[head]))
      if (!seen[y] && !removed[y]) {
        seen[y] = 1;
        comp.push_back(y);
      }
  std::sort(comp.begin(), comp.end());
  return comp;
}

std::vector<char> as_mask(const Graph& g, std::span<const Vertex> S) {
  std::vector<char> m(g.order(), 0);
  for (Vertex v : S) m[v] = 1;
  return m;
}

bool contains(const VertexSet& s, Vertex v) { return std::binary_search(s.begin(), s.end(), v); }

bool far_apart(const Graph& g, const VertexSet& A, const VertexSet& B, int r) {
  for (Vertex v : A)
    for (Vertex w : B)
      if (g.dist(v, w) <= r) return false;
  return true;
}

// Bitmask view of a graph with at most 64 vertices.
struct BitGraph {
  int n = 0;
  Mask all = 0;
  std::vector<Mask> adj;
  std::vector<Mask> ball;  // closed r-ball

  BitGraph(const Graph& g, int r) : n(g.order()), adj(n, 0), ball(n, 0) {
    all = n == 64 ? ~Mask{0} : (Mask{1} << n) - 1;
    for (auto [u, v] : g.edges()) {
      adj[u] |= Mask{1} << v;
      adj[v] |= Mask{1} << u;
    }
    for (Vertex v = 0; v < n; ++v)
      for (Vertex w = 0; w < n; ++w)
        if (g.dist(v, w) <= r) ball[v] |= Mask{1} << w;
  }

  Mask flood(Mask allowed, int start) const {
    Mask comp = Mask{1} << start, frontier = comp;
    while (frontier) {
      Mask next = 0;
      for (Mask f = frontier; f; f &= f - 1) next |= adj[std::countr_zero(f)];
      next &= allowed & ~comp;
      comp |= next;
      frontier = next;
    }
    return comp;
  }

  Mask around(Mask set) const {
    Mask out = 0;
    for (Mask s = set; s; s &= s - 1) out |= ball[std::countr_zero(s)];
    return out;
  }

  Mask neighbors(Mask set) const {
    Mask out = 0;
    for (Mask s = set; s; s &= s - 1) out |= adj[std::countr_zero(s)];
    return out & ~set;
  }

  // Whether removing S r-separates the components containing x and y.
  bool split(Mask S, int x, int y) const {
    Mask allowed = all & ~S;
    Mask cx = flood(allowed, x);
    if (cx >> y & 1) return false;
    Mask cy = flood(allowed, y);
    return (around(cx) & cy) == 0;
  }

  bool minimal_for(Mask S, int x, int y) const {
    for (Mask s = S; s; s &= s - 1) {
      Mask v = s & -s;
      if (split(S & ~v, x, y)) return false;
    }
    return true;
  }
};

VertexSet to_set(Mask m) {
  VertexSet out;
  for (; m; m &= m - 1) out.push_back(std::countr_zero(m));
  return out;
}

void sort_certs(std::vector<SeparatorCert>& certs) {
  std::sort(certs.begin(), certs.end(), [](const SeparatorCert& x, const SeparatorCert& y) { return x.S < y.S; });
}

}  // namespace

std::string to_string(const SeparatorCert& c) {
  std::string s = "{";
  for (std::size_t i = 0; i < c.S.size(); ++i) s += (i ? " " : "") + std::to_string(c.S[i]);
  return s + "} separates " + std::to_string(c.a) + "," + std::to_string(c.b) + " (r=" + std::to_string(c.r) +
         ", diam " + std::to_string(c.diameter) + (c.minimal ? ", minimal)" : ")");
}

int set_diameter(const Graph& g, std::span<const Vertex> S) {
  int d = 0;
  for (std::size_t i = 0; i < S.size(); ++i)
    for (std::size_t j = i + 1; j < S.size(); ++j) d = std::max(d, g.dist(S[i], S[j]));
  return d;
}

bool separates(const Graph& g, const VertexSet& S, Vertex a, Vertex b, int r) {
  if (contains(S, a) || contains(S, b)) return false;
  auto removed = as_mask(g, S);
  auto ca = component(g, removed, a);
  if (contains(ca, b)) return false;
  if (r <= 1) return true;
  return far_apart(g, ca, component(g, removed, b), r);
}

std::optional<SeparatorCert> check_separation(const Graph& g, const VertexSet& S, Vertex a, Vertex b, int r) {
  if (r < 1) throw std::invalid_argument("separation radius must be >= 1");
  if (contains(S, a) || contains(S, b)) throw std::invalid_argument("separator contains an endpoint");
  if (!separates(g, S, a, b, r)) return std::nullopt;
  auto removed = as_mask(g, S);
  SeparatorCert c{S, a, b, r, component(g, removed, a), component(g, removed, b), true, set_diameter(g, S)};
  for (Vertex v : S) {
    VertexSet T;
    std::copy_if(S.begin(), S.end(), std::back_inserter(T), [v](Vertex x) { return x != v; });
    if (separates(g, T, a, b, r)) {
      c.minimal = false;
      break;
    }
  }
  return c;
}

VertexSet minimalize(const Graph& g, const VertexSet& S, Vertex a, Vertex b, int r, const VertexSet& keep) {
  if (!separates(g, S, a, b, r)) throw std::invalid_argument("set does not separate the endpoints");
  VertexSet cur = S;
  for (Vertex v : S) {
    if (contains(keep, v)) continue;
    VertexSet T;
    std::copy_if(cur.begin(), cur.end(), std::back_inserter(T), [v](Vertex x) { return x != v; });
    if (separates(g, T, a, b, r)) cur = std::move(T);
  }
  return cur;
}

SeparatorCert sphere_separator(const Graph& g, std::span<const Vertex> geodesic, std::span<const Vertex> anchors,
                               int r) {
  if (geodesic.size() < 2) throw std::invalid_argument("geodesic too short");
  const Vertex a = geodesic.front(), b = geodesic.back();
  auto interior = [&](Vertex v) { return std::find(geodesic.begin() + 1, geodesic.end() - 1, v) != geodesic.end() - 1; };
  VertexSet S0, keep;
  if (r == 1) {
    if (anchors.size() != 1 || !interior(anchors[0])) throw std::invalid_argument("need one interior anchor");
    S0 = neighborhood(g, PointRef::vertex(a), Length::units(g.dist(a, anchors[0])), BallKind::sphere);
    keep = {anchors[0]};
  } else {
    if (anchors.size() != 2 || !interior(anchors[0]) || !interior(anchors[1]))
      throw std::invalid_argument("need two interior anchors");
    Vertex v1 = anchors[0], v2 = anchors[1];
    if (g.dist(a, v1) > g.dist(a, v2)) std::swap(v1, v2);
    if (g.dist(v1, v2) != r - 1) throw std::invalid_argument("anchor distance must be r-1");
    if (g.dist(a, b) <= r) throw std::invalid_argument("endpoints must be more than r apart");
    auto s1 = neighborhood(g, PointRef::vertex(a), Length::units(g.dist(a, v1)), BallKind::sphere);
    auto s2 = neighborhood(g, PointRef::vertex(b), Length::units(g.dist(v2, b)), BallKind::sphere);
    std::set_union(s1.begin(), s1.end(), s2.begin(), s2.end(), std::back_inserter(S0));
    keep = {std::min(v1, v2), std::max(v1, v2)};
  }
  auto S = minimalize(g, S0, a, b, r, keep);
  auto cert = check_separation(g, S, a, b, r);
  if (!cert) throw std::logic_error("sphere construction did not separate");
  return *cert;
}

SeparatorList enumerate_minimal_ab_separators(const Graph& g, Vertex a, Vertex b, int r, const SeparatorCaps& caps) {
  SeparatorList out;
  if (a == b) return out;
  if (r >= 2) {
    if (g.order() > caps.max_subset_order || g.order() > 64) {
      out.truncated = true;
      return out;
    }
    BitGraph bg(g, r);
    Mask free = bg.all & ~(Mask{1} << a) & ~(Mask{1} << b);
    // enumerate subsets of the free vertices
    for (Mask S = 0;; S = (S - free) & free) {
      if (bg.split(S, a, b) && bg.minimal_for(S, a, b)) {
        if (out.certs.size() == caps.max_separators) {
          out.truncated = true;
          break;
        }
        out.certs.push_back(*check_separation(g, to_set(S), a, b, r));
      }
      if (S == free) break;
    }
    sort_certs(out.certs);
    return out;
  }
  if (g.adjacent(a, b)) return out;

  const int n = g.order();
  // N(component of b in G - X)
  auto close_to_b = [&](const std::vector<char>& removed) {
    auto D = component(g, removed, b);
    std::vector<char> inD(n, 0);
    for (Vertex v : D) inD[v] = 1;
    VertexSet T;
    for (Vertex v = 0; v < n; ++v) {
      if (inD[v]) continue;
      for (Vertex y : g.neighbors(v))
        if (inD[y]) {
          T.push_back(v);
          break;
        }
    }
    return T;
  };

  std::vector<char> removed(n, 0);
  removed[a] = 1;
  for (Vertex y : g.neighbors(a)) removed[y] = 1;
  std::set<VertexSet> seen{close_to_b(removed)};
  std::vector<VertexSet> queue{*seen.begin()};
  for (std::size_t head = 0; head < queue.size() && !out.truncated; ++head) {
    const VertexSet S = queue[head];
    for (Vertex x : S) {
      if (g.adjacent(x, b)) continue;
      std::fill(removed.begin(), removed.end(), 0);
      for (Vertex s : S) removed[s] = 1;
      for (Vertex y : g.neighbors(x)) removed[y] = 1;
      auto T = close_to_b(removed);
      if (seen.insert(T).second) {
        if (seen.size() > caps.max_separators) {
          out.truncated = true;
          break;
        }
        queue.push_back(std::move(T));
      }
    }
  }
  for (const auto& S : seen) {
    if (out.certs.size() == caps.max_separators) break;
    auto c = check_separation(g, S, a, b, 1);
    if (!c || !c->minimal) throw std::logic_error("separator closure produced a non-minimal set");
    out.certs.push_back(std::move(*c));
  }
  return out;
}

SeparatorList brute_force_minimal_ab_separators(const Graph& g, Vertex a, Vertex b, int r) {
  if (g.order() > 24) throw std::invalid_argument("brute force limited to 24 vertices");
  SeparatorList out;
  if (a == b) return out;
  const int n = g.order();
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if ((mask >> a & 1) || (mask >> b & 1)) continue;
    VertexSet S;
    for (int v = 0; v < n; ++v)
      if (mask >> v & 1) S.push_back(v);
    if (!separates(g, S, a, b, r)) continue;
    bool minimal = true;
    // literal definition: no proper subset separates
    for (std::uint32_t sub = (mask - 1) & mask;; sub = (sub - 1) & mask) {
      if (sub == mask) break;
      VertexSet T;
      for (int v = 0; v < n; ++v)
        if (sub >> v & 1) T.push_back(v);
      if (separates(g, T, a, b, r)) {
        minimal = false;
        break;
      }
      if (sub == 0) break;
    }
    if (minimal) out.certs.push_back(*check_separation(g, S, a, b, r));
  }
  sort_certs(out.certs);
  return out;
}

SplitSeparator partition_Sa_Sb(const Graph& g, const SeparatorCert& cert) {
  if (cert.r < 2) throw std::invalid_argument("split needs r >= 2");
  if (!cert.minimal) throw std::invalid_argument("split needs a minimal separator");
  SplitSeparator sp;
  for (Vertex v : cert.S) {
    bool ta = false, tb = false;
    for (Vertex y : g.neighbors(v)) {
      ta = ta || contains(cert.component_a, y);
      tb = tb || contains(cert.component_b, y);
    }
    if (ta == tb) throw std::logic_error("separator vertex " + std::to_string(v) + " touches both or neither side");
    (ta ? sp.Sa : sp.Sb).push_back(v);
  }
  return sp;
}

SplitSeparator split_Sa_Sb(const Graph& g, const SeparatorCert& cert) {
  SplitSeparator sp = partition_Sa_Sb(g, cert);
  auto check = [&](const VertexSet& from, const VertexSet& to) {
    for (Vertex v : from) {
      int d = -1;
      for (Vertex w : to) d = d < 0 ? g.dist(v, w) : std::min(d, g.dist(v, w));
      if (d != cert.r - 1) throw std::logic_error("split distance condition fails at vertex " + std::to_string(v));
    }
  };
  check(sp.Sa, sp.Sb);
  check(sp.Sb, sp.Sa);
  return sp;
}

SeparatorProfile separator_diameter_profile(const Graph& g, int r, const SeparatorCaps& caps) {
  SeparatorProfile p;
  p.r = r;
  const int n = g.order();
  auto consider = [&](const SeparatorCert& c) {
    if (!p.witness || c.diameter > p.max_diameter) {
      p.max_diameter = c.diameter;
      p.witness = c;
    }
  };

  if (r == 1) {
    std::set<VertexSet> distinct;
    for (Vertex a = 0; a < n && !p.truncated; ++a)
      for (Vertex b = a + 1; b < n && !p.truncated; ++b) {
        auto list = enumerate_minimal_ab_separators(g, a, b, 1, caps);
        p.truncated = p.truncated || list.truncated;
        for (const auto& c : list.certs) {
          distinct.insert(c.S);
          consider(c);
          if (!p.adjacency_ok) continue;
          for (Vertex v : c.S) {
            bool ta = false, tb = false;
            for (Vertex y : g.neighbors(v)) {
              ta = ta || contains(c.component_a, y);
              tb = tb || contains(c.component_b, y);
            }
            if (!ta || !tb) {
              p.adjacency_ok = false;
              p.adjacency_violation = c;
              break;
            }
          }
        }
        if (distinct.size() > caps.max_separators) p.truncated = true;
      }
    p.count = distinct.size();
    return p;
  }

  if (n > caps.max_subset_order || n > 64) {
    p.truncated = true;
    return p;
  }
  BitGraph bg(g, r);
  std::vector<Mask> comps;
  for (Mask S = 0;; ++S) {
    if (S > bg.all) break;
    Mask allowed = bg.all & ~S;
    comps.clear();
    for (Mask rest = allowed; rest;) {
      Mask c = bg.flood(allowed, std::countr_zero(rest));
      comps.push_back(c);
      rest &= ~c;
    }
    for (std::size_t i = 0; i < comps.size(); ++i)
      for (std::size_t j = i + 1; j < comps.size(); ++j) {
        if (bg.around(comps[i]) & comps[j]) continue;
        int x = std::countr_zero(comps[i]), y = std::countr_zero(comps[j]);
        if (!bg.minimal_for(S, x, y)) continue;
        ++p.count;
        VertexSet Sv = to_set(S);
        int diam = set_diameter(g, Sv);
        SeparatorCert c{Sv, x, y, r, to_set(comps[i]), to_set(comps[j]), true, diam};
        consider(c);
        // a failed partition falls back to diam S, an upper bound for either side
        int sd = diam;
        try {
          auto sp = partition_Sa_Sb(g, c);
          sd = std::min(set_diameter(g, sp.Sa), set_diameter(g, sp.Sb));
        } catch (const std::logic_error&) {
        }
        if (!p.split_witness || sd > p.max_split_diameter) {
          p.max_split_diameter = sd;
          p.split_witness = c;
        }
        try {
          split_Sa_Sb(g, c);
        } catch (const std::logic_error&) {
          if (p.split_ok) {
            p.split_ok = false;
            p.split_violation = c;
          }
        }
      }
    if (S == bg.all) break;
  }
  return p;
}

VertexSet neighborhood_of_set(const Graph& g, std::span<const Vertex> S, int r) {
  VertexSet out;
  for (Vertex w = 0; w < g.order(); ++w)
    for (Vertex s : S)
      if (g.dist(s, w) <= r) {
        out.push_back(w);
        break;
      }
  return out;
}

NeighborVerdict check_neighbor_separation(const Graph& g, std::span<const Vertex> S, Vertex a, Vertex b, int r,
                                          NeighborMode mode) {
  auto N = neighborhood_of_set(g, S, r);
  auto blocked = as_mask(g, N);
  NeighborVerdict v;
  if (mode == NeighborMode::separator) {
    if (blocked[a] || blocked[b]) throw std::invalid_argument("endpoint lies in N_r(S)");
    std::vector<Vertex> parent(g.order(), -1);
    std::vector<Vertex> queue{a};
    parent[a] = a;
    for (std::size_t head = 0; head < queue.size(); ++head)
      for (Vertex y : g.neighbors(queue[head]))
        if (parent[y] < 0 && !blocked[y]) {
          parent[y] = queue[head];
          queue.push_back(y);
        }
    if (parent[b] < 0) {
      v.holds = true;
      return v;
    }
    for (Vertex x = b; x != a; x = parent[x]) v.witness.push_back(x);
    v.witness.push_back(a);
    std::reverse(v.witness.begin(), v.witness.end());
    return v;
  }
  // good[x]: some geodesic from x to b avoids N
  const int n = g.order();
  std::vector<Vertex> order(n);
  for (Vertex x = 0; x < n; ++x) order[x] = x;
  std::sort(order.begin(), order.end(), [&](Vertex x, Vertex y) { return g.dist(x, b) < g.dist(y, b); });
  std::vector<char> good(n, 0);
  for (Vertex x : order) {
    if (blocked[x]) continue;
    if (x == b) {
      good[x] = 1;
      continue;
    }
    for (Vertex y : g.neighbors(x))
      if (good[y] && g.dist(y, b) + 1 == g.dist(x, b)) {
        good[x] = 1;
        break;
      }
  }
  if (!good[a]) {
    v.holds = true;
    return v;
  }
  for (Vertex x = a;;) {
    v.witness.push_back(x);
    if (x == b) break;
    for (Vertex y : g.neighbors(x))
      if (good[y] && g.dist(y, b) + 1 == g.dist(x, b)) {
        x = y;
        break;
      }
  }
  return v;
}

}  // namespace qtree
