#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "json.hpp"
#include "qtree/checks.hpp"
#include "qtree/context.hpp"

namespace qtree {

struct TheoremReport {
  std::string check_id;
  std::string graph_id;
  Status status = Status::vacuous;
  nlohmann::json params = nlohmann::json::object();
  nlohmann::json witness = nullptr;
  double runtime_ms = 0;
};

/// Runs one check. Throws std::invalid_argument on an unknown id.
TheoremReport run_check(GraphContext& ctx, std::string_view check_id);
TheoremReport run_check(const Graph& g, std::string_view check_id, const std::string& graph_id = "graph",
                        const HarnessCaps& caps = HarnessCaps::from_env());

/// One corpus entry. Random families list their seeds; each seed becomes
/// the last generator parameter.
struct GraphSource {
  std::string generator;
  std::vector<std::uint64_t> seeds;
};

struct CorpusConfig {
  std::vector<GraphSource> graphs;
  /// Empty means every registered check.
  std::vector<std::string> checks;
  HarnessCaps caps;
  std::string output;
  unsigned threads = 0;  // 0: hardware concurrency

  /// {"graphs": ["cycle:8", {"generator": "er:10,0.3", "seeds": [1, 2]}],
  ///  "checks": [...], "caps": "geodesics=500", "output": "report.json",
  ///  "threads": 4}. Throws std::invalid_argument when a random family
  /// has no seeds, a check id is unknown, or a field has the wrong type.
  static CorpusConfig from_json(const nlohmann::json& j);
  /// Graph ids in corpus order, e.g. "er:10,0.3,2".
  std::vector<std::string> graph_ids() const;
};

struct CheckCounts {
  std::size_t pass = 0, fail = 0, vacuous = 0, inconclusive = 0;
  void add(Status s);
};

struct CorpusResult {
  /// Ordered by graph (corpus order), then check (registry order).
  std::vector<TheoremReport> reports;
  std::map<std::string, CheckCounts> per_check;
  CheckCounts total;
  double runtime_ms = 0;
};

/// Generator failures are rethrown as std::runtime_error naming the graph id.
CorpusResult run_corpus(const CorpusConfig& cfg);

nlohmann::json to_json(const TheoremReport& r);
nlohmann::json to_json(const CorpusResult& r);
nlohmann::json to_json(const BPReport& r);
nlohmann::json to_json(const StabilityReport& r);
nlohmann::json to_json(const HyperbolicityReport& r);
nlohmann::json to_json(const SeparatorProfile& p);
/// Everything the analyze subcommand prints.
nlohmann::json analyze(GraphContext& ctx);

std::string to_text(const TheoremReport& r);
std::string to_text(const CorpusResult& r);
std::string analyze_text(const nlohmann::json& profile);

}  // namespace qtree
