#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qtree/units.hpp"

namespace qtree {

using VertexSet = std::vector<Vertex>;  // always sorted, no duplicates
using Edge = std::pair<Vertex, Vertex>;  // first < second

enum class GraphErrc { empty_input, malformed_line, self_loop, duplicate_edge, disconnected, invalid_params };

const char* to_string(GraphErrc e);

class GraphError : public std::runtime_error {
 public:
  GraphError(GraphErrc code, std::string what, int line = 0)
      : std::runtime_error(std::move(what)), code_(code), line_(line) {}
  GraphErrc code() const { return code_; }
  /// 1-based input line for parse errors, 0 otherwise.
  int line() const { return line_; }

 private:
  GraphErrc code_;
  int line_;
};

/// Finite, simple, connected, undirected graph with unit edges.
///
/// Immutable after construction. The all-pairs distance matrix is computed
/// eagerly by breadth-first search and stored in half-edge units, so a
/// stored value of 2d means d edges.
class Graph {
 public:
  /// Validates and builds. Throws GraphError on self-loops, duplicate edges,
  /// out-of-range ids, an empty vertex set, or a disconnected result.
  static Graph from_edges(int vertex_count, std::vector<Edge> edges);

  int order() const { return n_; }
  int size() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  std::span<const Vertex> neighbors(Vertex v) const { return adj_[v]; }
  bool adjacent(Vertex u, Vertex v) const;
  /// Index of edge {u,v} in edges(), or -1.
  int edge_index(Vertex u, Vertex v) const;

  int dist(Vertex u, Vertex v) const { return dist_half_[index(u, v)] / 2; }
  int dist_half(Vertex u, Vertex v) const { return dist_half_[index(u, v)]; }

  int diameter() const { return diameter_; }
  /// The uniformity constant mu.
  int max_degree() const;

 private:
  Graph() = default;
  std::size_t index(Vertex u, Vertex v) const {
    return static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(v);
  }

  int n_ = 0;
  int diameter_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adj_;
  std::vector<std::int32_t> dist_half_;
};

/// Parses "u v" lines; '#' starts a comment; blank lines are ignored.
Graph load_graph(std::string_view text);

/// Canonical edge-list text: one "u v\n" per edge, u < v, sorted.
std::string to_edge_list(const Graph& g);

/// A point of the metric graph: a vertex, or the point at distance
/// numerator/resolution from `u` along the edge u-v.
struct PointRef {
  Vertex u = 0;
  Vertex v = -1;
  int numerator = 0;
  int resolution = 1;

  static PointRef vertex(Vertex x) { return PointRef{x, -1, 0, 1}; }
  /// Throws std::invalid_argument unless 0 < numerator < resolution.
  static PointRef on_edge(Vertex u, Vertex v, int numerator, int resolution);
  bool is_vertex() const { return v < 0; }
  bool operator==(const PointRef&) const = default;
};

std::string to_string(const PointRef& p);

/// Distance from a point to a vertex, in units of 1/p.resolution.
int point_distance_scaled(const Graph& g, const PointRef& p, Vertex w);

enum class BallKind { sphere, open_ball, closed_ball };

/// Vertices w with d(p,w) == eps, < eps, or <= eps.
VertexSet neighborhood(const Graph& g, const PointRef& p, Length eps, BallKind kind);

/// Each edge replaced by a path of t edges. Original vertices keep their
/// ids; the t-1 interior vertices of the i-th edge (u,v), u < v, in
/// edges() order get ids n + i*(t-1) + (j-1), j = 1..t-1, counted from u.
Graph subdivide(const Graph& g, int t);

/// The t-subdivision of a graph together with the bookkeeping that maps
/// between grid points of the base graph and vertices of the fine graph.
/// Distances in fine() are in units of 1/t.
class Subdivision {
 public:
  Subdivision(Graph base, int t);

  const Graph& base() const { return base_; }
  const Graph& fine() const { return fine_; }
  int resolution() const { return t_; }

  /// Fine vertex at position j/t along u->v, 0 <= j <= t. (u,v) must be an edge.
  Vertex grid_point(Vertex u, Vertex v, int j) const;
  /// Fine vertex for a point whose resolution divides t.
  Vertex locate(const PointRef& p) const;
  /// The point a fine vertex stands for, at resolution t (reduced).
  PointRef describe(Vertex fine_vertex) const;
  /// Fine vertices along a walk of consecutive base vertices.
  std::vector<Vertex> trace(std::span<const Vertex> base_walk) const;
  /// Fine distance converted to quarters. Requires t in {1,2,4}.
  Length length_of(int fine_distance) const;

 private:
  Graph base_;
  int t_;
  Graph fine_;
};

}  // namespace qtree
