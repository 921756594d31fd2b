#pragma once

#include <array>
#include <optional>
#include <span>
#include <vector>

#include "qtree/chordality.hpp"
#include "qtree/graph.hpp"

namespace qtree {

/// Thinness of a geodesic triangle whose sides are paths of s.fine():
/// the largest distance from a grid point of one side to the union of the
/// other two. Throws std::invalid_argument if a side is not a geodesic or
/// the sides do not close up.
Length triangle_thinness(const Subdivision& s, const std::array<std::vector<Vertex>, 3>& sides);

struct HyperbolicityReport {
  Length delta_hat;
  int resolution = 4;
  /// Cycle, its three corners and the point attaining delta_hat.
  std::optional<Cycle> witness;
  std::array<PointRef, 3> corners{};
  PointRef point;
  /// Every cycle was examined.
  bool complete = true;
};

/// Largest thinness over geodesic triangles that are cycles, corners and
/// points on the t-grid (t in {1,2,4}). A lower bound for delta(G); the
/// points between grid points are not sampled.
///
/// For each start position the longest geodesic arc is taken as a side:
/// thinness only grows when a side grows, and a shorter side never makes
/// the remaining arc easier to split into two geodesics.
HyperbolicityReport delta_hat(const Graph& g, int t = 4, const CycleCatalog* catalog = nullptr);

}  // namespace qtree
