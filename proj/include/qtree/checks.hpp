#pragma once

#include <span>
#include <string_view>

#include "json.hpp"
#include "qtree/context.hpp"

namespace qtree {

struct CheckOutcome {
  Status status = Status::vacuous;
  /// Derived hypothesis parameters, plus a "reason" tag when vacuous or
  /// inconclusive.
  nlohmann::json params = nlohmann::json::object();
  /// Replayable witness on fail, null otherwise.
  nlohmann::json witness = nullptr;
};

struct CheckInfo {
  std::string_view id;
  std::string_view statement;
  CheckOutcome (*run)(GraphContext&);
};

/// Every theorem check, in a fixed order.
std::span<const CheckInfo> check_registry();
const CheckInfo* find_check(std::string_view id);

/// Re-runs the module operation behind a fail witness from scratch and
/// reports whether the violation reproduces. Throws std::invalid_argument
/// on an unknown witness kind.
bool replay_witness(const Graph& g, const nlohmann::json& witness);

/// JSON encodings shared by the report writer and the witnesses.
nlohmann::json to_json(Length x);
nlohmann::json to_json(const PointRef& p);
nlohmann::json to_json(const SeparatorCert& c);
Length length_from_json(const nlohmann::json& j);

}  // namespace qtree
