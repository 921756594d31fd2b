#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>

#include "qtree/bottleneck.hpp"
#include "qtree/chordality.hpp"
#include "qtree/geodesics.hpp"
#include "qtree/graph.hpp"
#include "qtree/hyperbolicity.hpp"
#include "qtree/separators.hpp"

namespace qtree {

/// Enumeration limits used by the theorem checks. Hitting any of them makes
/// the affected checks inconclusive.
struct HarnessCaps {
  std::size_t cycles = kDefaultCycleCap;
  std::size_t geodesics = 2000;
  std::size_t separators = 100000;
  int subset_order = 22;
  std::size_t chordal_paths = 20000;

  /// Applies QTREE_CAPS, e.g. "cycles=1000,geodesics=50".
  static HarnessCaps from_env();
  /// Parses "key=value,..."; throws std::invalid_argument on bad input.
  void apply(const std::string& spec);
};

/// A graph plus everything the checks derive from it, computed on first use.
class GraphContext {
 public:
  GraphContext(Graph g, std::string id, HarnessCaps caps = {});

  const Graph& graph() const { return g_; }
  const std::string& id() const { return id_; }
  const HarnessCaps& caps() const { return caps_; }

  const CycleCatalog& catalog();
  const SeparatorProfile& profile(int r);
  const HyperbolicityReport& hyperbolicity();
  const BPReport& bp();
  const StabilityReport& stability(StabilityMode mode);
  /// Smallest k in [4, longest cycle] with a non-vacuous (k,1)-chordal pass.
  std::optional<int> k_star();
  /// Smallest delta2 >= 1 where the neighbour-separator characterization holds.
  int neighbor_separator_radius();

 private:
  Graph g_;
  std::string id_;
  HarnessCaps caps_;
  std::unique_ptr<CycleCatalog> catalog_;
  std::map<int, SeparatorProfile> profiles_;
  std::optional<HyperbolicityReport> hyp_;
  std::optional<BPReport> bp_;
  std::map<StabilityMode, StabilityReport> stability_;
  std::optional<std::optional<int>> k_star_;
  std::optional<int> nsep_;
};

}  // namespace qtree
