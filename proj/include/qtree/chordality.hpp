#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "qtree/graph.hpp"

namespace qtree {

inline constexpr std::size_t kDefaultCycleCap = 200000;

/// Simple cycle as a cyclic vertex sequence. Canonical form: starts at its
/// smallest vertex and vertices[1] < vertices.back().
struct Cycle {
  std::vector<Vertex> vertices;

  int length() const { return static_cast<int>(vertices.size()); }
  /// Arc distance between positions i and j, in edges.
  int arc(int i, int j) const;
  /// Position of v, or -1.
  int position_of(Vertex v) const;
  bool operator==(const Cycle&) const = default;
};

std::string to_string(const Cycle& c);

struct CycleList {
  std::vector<Cycle> cycles;
  bool truncated = false;
};

/// Every simple cycle with 3 <= length <= lmax, once each, sorted.
/// lmax <= 0 means |V|, which is complete.
CycleList enumerate_cycles(const Graph& g, int lmax = 0, std::size_t cap = kDefaultCycleCap);

struct ShortcutCert {
  Vertex p = 0, q = 0;
  std::vector<Vertex> path;
  int length = 0;
  bool strict = false;
};

/// Shortest p-q shortcut of c. Non-strict: any path, so d(p,q). Strict:
/// interior avoids the cycle. Empty when no path beats d_C(p,q).
std::optional<ShortcutCert> min_shortcut(const Graph& g, const Cycle& c, Vertex p, Vertex q, bool strict);

/// Re-checks a certificate against g and c from scratch.
bool validate_shortcut(const Graph& g, const Cycle& c, const ShortcutCert& s);

/// Cycle vertices that end some strict shortcut of length <= m.
VertexSet shortcut_vertices(const Graph& g, const Cycle& c, int m);

/// Half the largest gap between consecutive members of X along c: X is
/// eps-dense in (c, d_C) exactly when eps exceeds this. Infinity for empty
/// X. Throws std::invalid_argument if X leaves the cycle.
Length density_radius(const Cycle& c, const VertexSet& X);

enum class Family { all, triangle, bigon, vertex_bigon };

const char* to_string(Family f);

struct FamilyTags {
  bool triangle = false;
  bool bigon = false;
  bool vertex_bigon = false;
  bool has(Family f) const;
};

/// Fine vertices of s at positions 0..L*t-1 around c.
std::vector<Vertex> cycle_grid(const Subdivision& s, const Cycle& c);

/// reach[i]: largest r such that the forward arc from grid position i to
/// i+r is a geodesic of s.fine().
std::vector<int> geodesic_reach(const Graph& fine, const std::vector<Vertex>& grid);

/// Triangle and bigon tags with corners on the t-grid (t in {1,2}), and
/// the vertex-bigon tag. s must be the t-subdivision of g.
FamilyTags classify_cycle(const Graph& g, const Cycle& c, int t);
FamilyTags classify_cycle(const Subdivision& s, const Cycle& c);

struct CycleRecord {
  Cycle cycle;
  /// Smallest shortcut length, or -1 when the cycle has none.
  int min_shortcut = -1;
  /// Per position, the smallest strict shortcut ending there, or -1.
  std::vector<int> strict_reach;
  FamilyTags tags;

  /// density_radius of the strict shortcut vertices of length <= m.
  Length radius(int m) const;
};

/// All cycles of a graph with shortcut data and family tags, computed once.
class CycleCatalog {
 public:
  explicit CycleCatalog(const Graph& g, int lmax = 0, std::size_t cap = kDefaultCycleCap);

  const std::vector<CycleRecord>& records() const { return records_; }
  bool truncated() const { return truncated_; }
  int longest() const { return longest_; }

 private:
  std::vector<CycleRecord> records_;
  bool truncated_ = false;
  int longest_ = 0;
};

struct ChordalityQuery {
  int k = 4;
  std::optional<int> m;
  std::optional<Length> rho;
  Family family = Family::all;
};

std::string to_string(const ChordalityQuery& q);

struct ChordalityVerdict {
  Status status = Status::vacuous;
  std::optional<Cycle> witness;
  std::size_t qualifying = 0;
};

/// Scans cycles of the family with length >= k. Without m: some shortcut
/// (k-chordal). With m: a shortcut of length <= m. With rho: the strict
/// shortcut vertices of length <= m have density radius <= rho, i.e. are
/// eps-dense for every eps > rho. Throws std::invalid_argument unless
/// k >= 4, k >= 2m and rho comes with m.
ChordalityVerdict chordality_check(const CycleCatalog& cat, const ChordalityQuery& q);
ChordalityVerdict chordality_check(const Graph& g, const ChordalityQuery& q, int lmax = 0,
                                   std::size_t cap = kDefaultCycleCap);

/// Smallest m making (k,m) pass on the family, or nullopt if some
/// qualifying cycle has no shortcut. 0 when no cycle qualifies.
std::optional<int> minimal_m(const CycleCatalog& cat, int k, Family f);
/// Smallest rho making the dense (k,m) check pass; infinity if impossible.
Length minimal_rho(const CycleCatalog& cat, int k, int m, Family f);

}  // namespace qtree
