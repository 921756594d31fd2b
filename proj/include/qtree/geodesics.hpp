#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "qtree/graph.hpp"

namespace qtree {

inline constexpr std::size_t kDefaultGeodesicCap = 10000;

/// A geodesic as a vertex sequence of the graph it was enumerated in.
/// For point endpoints this is a path of a Subdivision's fine graph.
struct GeodesicPath {
  std::vector<Vertex> vertices;
  int length() const { return static_cast<int>(vertices.size()) - 1; }
  bool operator==(const GeodesicPath&) const = default;
};

struct GeodesicList {
  std::vector<GeodesicPath> paths;
  bool truncated = false;
};

/// Number of a-b geodesics, saturating at UINT64_MAX.
std::uint64_t count_geodesics(const Graph& g, Vertex a, Vertex b);

/// All a-b geodesics in lexicographic order of their vertex sequences,
/// at most cap of them. a == b yields the single trivial path.
GeodesicList enumerate_geodesics(const Graph& g, Vertex a, Vertex b, std::size_t cap = kDefaultGeodesicCap);

/// Geodesics between grid points; paths are returned in s.fine() ids.
GeodesicList enumerate_geodesics(const Subdivision& s, const PointRef& a, const PointRef& b,
                                 std::size_t cap = kDefaultGeodesicCap);

/// True if walk is a path of g whose length equals d(front, back).
bool is_geodesic(const Graph& g, std::span<const Vertex> walk);

/// Hausdorff distance between two finite vertex sets of g, in edges of g.
/// Throws std::invalid_argument on an empty set.
int hausdorff_distance(const Graph& g, std::span<const Vertex> A, std::span<const Vertex> B);

/// Exact Hausdorff distance between paths of g viewed as curves in the
/// metric graph (edge interiors included).
///
/// Along an edge the distance to a union of edges is piecewise linear with
/// breakpoints at half-edges, so the supremum is attained on the 2-grid.
/// The evaluator therefore works on subdivide(g, 2); results are in half
/// edges of g.
class PathHausdorff {
 public:
  explicit PathHausdorff(const Graph& g);

  int half_distance(std::span<const Vertex> p, std::span<const Vertex> q) const;

  /// Distance field (in half edges) from the curve of p to every fine vertex.
  std::vector<int> field(std::span<const Vertex> p) const;
  /// max over the curve of q of the given field.
  int sup_over(const std::vector<int>& field, std::span<const Vertex> q) const;

  const Subdivision& grid() const { return grid_; }

 private:
  Subdivision grid_;
};

enum class StabilityMode { vertices, grid_points };

const char* to_string(StabilityMode m);

struct StabilityReport {
  StabilityMode mode = StabilityMode::vertices;
  Length R;
  /// Endpoints and the two geodesics attaining R, as points of g.
  PointRef from, to;
  std::vector<PointRef> first, second;
  bool caps_hit = false;
  std::size_t pairs_examined = 0;
};

/// Largest Hausdorff distance between two geodesics with common endpoints.
/// vertices mode: endpoints range over V(g). grid_points mode: endpoints
/// range over vertices and edge midpoints. R is exact on the curves.
StabilityReport stability_constant(const Graph& g, StabilityMode mode, std::size_t cap = kDefaultGeodesicCap);

}  // namespace qtree
