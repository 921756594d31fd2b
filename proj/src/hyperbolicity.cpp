#include "qtree/hyperbolicity.hpp"

#include <algorithm>
#include <stdexcept>

#include "qtree/geodesics.hpp"

namespace qtree {

Length triangle_thinness(const Subdivision& s, const std::array<std::vector<Vertex>, 3>& sides) {
  const Graph& f = s.fine();
  for (int i = 0; i < 3; ++i) {
    const auto& side = sides[i];
    if (!is_geodesic(f, side)) throw std::invalid_argument("triangle side is not a geodesic");
    if (side.back() != sides[(i + 1) % 3].front()) throw std::invalid_argument("triangle sides do not close up");
  }
  int best = 0;
  for (int i = 0; i < 3; ++i) {
    std::vector<Vertex> others(sides[(i + 1) % 3]);
    others.insert(others.end(), sides[(i + 2) % 3].begin(), sides[(i + 2) % 3].end());
    for (Vertex p : sides[i]) {
      int d = f.dist(p, others[0]);
      for (Vertex q : others) d = std::min(d, f.dist(p, q));
      best = std::max(best, d);
    }
  }
  return s.length_of(best);
}

HyperbolicityReport delta_hat(const Graph& g, int t, const CycleCatalog* catalog) {
  if (t != 1 && t != 2 && t != 4) throw std::invalid_argument("resolution must be 1, 2 or 4");
  std::optional<CycleCatalog> own;
  if (!catalog) {
    own.emplace(g);
    catalog = &*own;
  }
  HyperbolicityReport rep;
  rep.resolution = t;
  rep.complete = !catalog->truncated();
  Subdivision s(g, t);
  const Graph& f = s.fine();

  int best = 0;
  for (const auto& rec : catalog->records()) {
    auto grid = cycle_grid(s, rec.cycle);
    auto reach = geodesic_reach(f, grid);
    const int M = static_cast<int>(grid.size());
    auto at = [&](int p) { return grid[p % M]; };
    for (int i = 0; i < M; ++i) {
      int j = i + reach[i];
      // a point of the side is within half its length of a corner
      if ((j - i) / 2 <= best) continue;
      int k = j + reach[j % M];
      if (k < i + M && k + reach[k % M] < i + M) continue;
      int side_best = 0, arg = i;
      for (int p = i + 1; p < j; ++p) {
        int d = f.dist(at(p), at(j));
        for (int q = j + 1; q <= i + M && d > side_best; ++q) d = std::min(d, f.dist(at(p), at(q)));
        if (d > side_best) {
          side_best = d;
          arg = p;
        }
      }
      if (side_best > best) {
        best = side_best;
        rep.witness = rec.cycle;
        int third = k < i + M ? k : (j + i + M) / 2;
        rep.corners = {s.describe(at(i)), s.describe(at(j)), s.describe(at(third))};
        rep.point = s.describe(at(arg));
      }
    }
  }
  rep.delta_hat = s.length_of(best);
  return rep;
}

}  // namespace qtree
