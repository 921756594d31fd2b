#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qtree/graph.hpp"

namespace qtree {

/// A set S that r-separates a from b: a and b lie in distinct components
/// G_a, G_b of G \ S and every v in G_a, w in G_b has d(v,w) > r. r = 1 is
/// plain separation.
struct SeparatorCert {
  VertexSet S;
  Vertex a = 0, b = 0;
  int r = 1;
  VertexSet component_a, component_b;
  bool minimal = false;
  /// Diameter of S in the metric of G.
  int diameter = 0;
};

std::string to_string(const SeparatorCert& c);

/// Diameter of a vertex set in the metric of g; 0 for sets of size <= 1.
int set_diameter(const Graph& g, std::span<const Vertex> S);

/// Whether S r-separates a and b.
bool separates(const Graph& g, const VertexSet& S, Vertex a, Vertex b, int r);

/// Certificate if S r-separates a and b. Throws std::invalid_argument if
/// a or b is in S or r < 1.
std::optional<SeparatorCert> check_separation(const Graph& g, const VertexSet& S, Vertex a, Vertex b, int r);

/// Greedy reduction in ascending id order that never drops keep members.
/// Throws std::invalid_argument if S does not r-separate a and b.
VertexSet minimalize(const Graph& g, const VertexSet& S, Vertex a, Vertex b, int r, const VertexSet& keep = {});

/// Sphere construction around a geodesic from a to b. r = 1 takes one
/// anchor v0 and starts from S(a, d(a,v0)). r >= 2 takes anchors v1, v2
/// with d(v1,v2) = r-1 and starts from S(a, d(a,v1)) U S(b, d(v2,b)).
/// The result is minimalized keeping the anchors. Throws
/// std::invalid_argument on bad anchors.
SeparatorCert sphere_separator(const Graph& g, std::span<const Vertex> geodesic, std::span<const Vertex> anchors,
                               int r);

struct SeparatorCaps {
  std::size_t max_separators = 100000;
  /// Largest order for the subset searches used when r >= 2.
  int max_subset_order = 22;
};

struct SeparatorList {
  std::vector<SeparatorCert> certs;
  bool truncated = false;
};

/// All inclusion-minimal ab r-separators, sorted. r = 1 uses the closure
/// under S -> N(comp_b(G - (S u N(x)))) from the separator nearest to a;
/// r >= 2 is an exhaustive subset search.
SeparatorList enumerate_minimal_ab_separators(const Graph& g, Vertex a, Vertex b, int r,
                                              const SeparatorCaps& caps = {});

/// Naive all-subsets reference, for testing. Requires order <= 24.
SeparatorList brute_force_minimal_ab_separators(const Graph& g, Vertex a, Vertex b, int r);

struct SplitSeparator {
  VertexSet Sa, Sb;
};

/// Partitions a minimal r-separator (r >= 2) by adjacency to G_a and G_b.
/// Throws std::invalid_argument for r < 2 or a non-minimal cert and
/// std::logic_error if some vertex touches both sides or neither.
SplitSeparator partition_Sa_Sb(const Graph& g, const SeparatorCert& cert);
/// partition_Sa_Sb, then d(v, S_b) = r-1 for v in S_a and vice versa;
/// std::logic_error when that fails. It can: on the path 0..5 with
/// a = 0, b = 4, r = 2, S = {1,3} is minimal and d(1, {3}) = 2.
SplitSeparator split_Sa_Sb(const Graph& g, const SeparatorCert& cert);

struct SeparatorProfile {
  int r = 1;
  /// Largest diameter over all minimal vertex r-separators (0 if none).
  int max_diameter = 0;
  std::optional<SeparatorCert> witness;
  /// r >= 2: largest min(diam S_a, diam S_b).
  int max_split_diameter = 0;
  std::optional<SeparatorCert> split_witness;
  std::size_t count = 0;
  bool truncated = false;
  /// r = 1: every vertex of every minimal separator touches both sides.
  bool adjacency_ok = true;
  std::optional<SeparatorCert> adjacency_violation;
  /// r >= 2: every split also met the distance condition of split_Sa_Sb.
  bool split_ok = true;
  std::optional<SeparatorCert> split_violation;
};

SeparatorProfile separator_diameter_profile(const Graph& g, int r, const SeparatorCaps& caps = {});

/// Closed r-neighbourhood of S.
VertexSet neighborhood_of_set(const Graph& g, std::span<const Vertex> S, int r);

enum class NeighborMode { separator, obstructing };

struct NeighborVerdict {
  bool holds = false;
  /// On failure: an a-b path avoiding N_r(S) (a geodesic in obstructing mode).
  std::vector<Vertex> witness;
};

/// Separator mode: a, b in different components of G \ N_r(S); throws
/// std::invalid_argument if N_r(S) contains a or b. Obstructing mode: every
/// a-b geodesic meets N_r(S).
NeighborVerdict check_neighbor_separation(const Graph& g, std::span<const Vertex> S, Vertex a, Vertex b, int r,
                                          NeighborMode mode);

}  // namespace qtree
