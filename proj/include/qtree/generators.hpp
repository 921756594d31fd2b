#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qtree/graph.hpp"

namespace qtree {

// Graph families. Every generator is deterministic; the random families
// take an explicit seed and use std::mt19937_64.
//
// Canonical numbering of the example families:
//
//   hub_cycles(N)        Hub path 3..N gets ids 0..N-3 (hub h has id h-3).
//                        Then, for h = 3..N in order, the cycle C_h gets h
//                        consecutive ids; cycle vertex j is adjacent to j+1
//                        (mod h) and to hub h.
//   ladder_blocks(A)     Spine vertex (a,0), 0 <= a <= A, has id a. Then the
//                        block vertices (a,b), 4n+1 <= a <= 4n+3, 1 <= b <= n,
//                        with a <= A, in order of n, then a, then b. Edges
//                        join grid neighbours.
//   odd_cycle_wedge(K)   Shared vertex v has id 0. For k = 1..K the cycle
//                        C_{2k+1} adds 2k consecutive ids c_1..c_2k and the
//                        closed walk v, c_1, ..., c_2k, v.

Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph grid_graph(int rows, int cols);
/// Uniform random recursive tree: vertex i attaches to a uniform earlier vertex.
Graph random_tree(int n, std::uint64_t seed);
/// G(n,p) conditioned on connectivity by resampling with the same stream.
Graph erdos_renyi_connected(int n, double p, std::uint64_t seed, int max_attempts = 10000);

Graph hub_cycles(int N);
Graph ladder_blocks(int A);
Graph odd_cycle_wedge(int K);

/// Id of hub h in hub_cycles(N).
Vertex hub_cycles_hub(int N, int h);
/// Id of vertex j of the cycle attached to hub h in hub_cycles(N).
Vertex hub_cycles_cycle_vertex(int N, int h, int j);
/// Id of (a,b) in ladder_blocks(A), or nullopt if that vertex is not present.
std::optional<Vertex> ladder_blocks_vertex(int A, int a, int b);
/// Id of vertex c_j (1 <= j <= 2k) of C_{2k+1} in odd_cycle_wedge(K).
Vertex odd_cycle_wedge_vertex(int K, int k, int j);

/// Builds a graph from "family:p1,p2,..." e.g. "cycle:8", "grid:3,4",
/// "er:12,0.3,7", "tree:20,5", "example_2_9:8", "example_3_14:12",
/// "example_6_9:4" (alias "odd_cycle_wedge:4"). Throws GraphError with
/// GraphErrc::invalid_params on an unknown family or bad parameters.
Graph generate(std::string_view spec);

/// Whether the family named in spec needs a seed parameter.
bool family_is_random(std::string_view spec);

}  // namespace qtree
