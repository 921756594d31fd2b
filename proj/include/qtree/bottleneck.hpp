#pragma once

#include <optional>
#include <vector>

#include "qtree/graph.hpp"

namespace qtree {

/// A pair v,w, a midpoint c of some v-w geodesic, and a v-w path that
/// stays farther than the tested radius from c.
struct BPWitness {
  Vertex v = 0, w = 0;
  PointRef c;
  std::vector<Vertex> path;
};

struct BPVerdict {
  bool holds = true;
  std::optional<BPWitness> witness;
};

/// Bottleneck property on vertices with constant delta_prime (a multiple
/// of 1/2): for every pair v,w and every midpoint c of every v-w geodesic,
/// every v-w path meets the closed delta_prime ball around c. Decided by
/// connectivity after deleting the vertices of the ball, and the edge
/// through c when c is an edge midpoint.
BPVerdict bp_check_vertices(const Graph& g, Length delta_prime);

struct BPReport {
  /// Smallest passing constant on the half grid.
  Length delta_prime;
  /// delta_prime + 3/2, an upper bound for the point-level constant.
  Length delta;
  /// Failure at delta_prime - 1/2, if delta_prime > 0.
  std::optional<BPWitness> witness;
  bool holds = true;
};

BPReport bp_delta(const Graph& g);

struct CharacterizationVerdict {
  Status status = Status::vacuous;
  /// On failure: a geodesic of length >= 2*delta2+2 none of whose
  /// interior vertices is an ab-N_delta2-separator.
  std::vector<Vertex> witness;
  std::size_t pairs = 0;
};

/// For every pair a,b with d(a,b) >= 2*delta2 + 2, every a-b geodesic has
/// an interior vertex c such that removing the closed delta2-ball around c
/// separates a from b. delta2 >= 1.
CharacterizationVerdict neighbor_separator_characterization(const Graph& g, int delta2);

/// Smallest delta2 >= 1 for which the characterization does not fail.
int minimal_neighbor_separator_radius(const Graph& g);

}  // namespace qtree
