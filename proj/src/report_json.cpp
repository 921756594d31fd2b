#include <sstream>

#include "qtree/harness.hpp"

namespace qtree {

using nlohmann::json;

namespace {

json points(const std::vector<PointRef>& ps) {
  json a = json::array();
  for (const auto& p : ps) a.push_back(to_json(p));
  return a;
}

json opt_cert(const std::optional<SeparatorCert>& c) { return c ? to_json(*c) : json(nullptr); }

}  // namespace

json to_json(const TheoremReport& r) {
  return json{{"check_id", r.check_id}, {"graph_id", r.graph_id}, {"status", to_string(r.status)},
              {"params", r.params},     {"witness", r.witness},   {"runtime_ms", r.runtime_ms}};
}

json to_json(const CorpusResult& r) {
  auto counts = [](const CheckCounts& c) {
    return json{{"pass", c.pass}, {"fail", c.fail}, {"vacuous", c.vacuous}, {"inconclusive", c.inconclusive}};
  };
  json per = json::object();
  for (const auto& [id, c] : r.per_check) per[id] = counts(c);
  json reports = json::array();
  for (const auto& t : r.reports) reports.push_back(to_json(t));
  return json{{"total", counts(r.total)}, {"per_check", per}, {"runtime_ms", r.runtime_ms}, {"reports", reports}};
}

json to_json(const BPReport& r) {
  json j{{"delta_prime", to_json(r.delta_prime)}, {"delta", to_json(r.delta)}, {"delta_is_upper_bound", true}};
  if (r.witness)
    j["witness"] = json{{"v", r.witness->v}, {"w", r.witness->w}, {"c", to_json(r.witness->c)},
                        {"path", r.witness->path}};
  return j;
}

json to_json(const StabilityReport& r) {
  json j{{"mode", to_string(r.mode)}, {"R", to_json(r.R)}, {"caps_hit", r.caps_hit},
         {"pairs_examined", r.pairs_examined}};
  if (!r.first.empty())
    j["witness"] = json{{"from", to_json(r.from)}, {"to", to_json(r.to)}, {"first", points(r.first)},
                        {"second", points(r.second)}};
  return j;
}

json to_json(const HyperbolicityReport& r) {
  json j{{"delta_hat", to_json(r.delta_hat)}, {"resolution", r.resolution}, {"complete", r.complete}};
  if (r.witness)
    j["witness"] = json{{"cycle", r.witness->vertices},
                        {"corners", {to_json(r.corners[0]), to_json(r.corners[1]), to_json(r.corners[2])}},
                        {"point", to_json(r.point)}};
  return j;
}

json to_json(const SeparatorProfile& p) {
  json j{{"r", p.r}, {"max_diameter", p.max_diameter}, {"witness", opt_cert(p.witness)},
         {"count", p.count}, {"truncated", p.truncated}};
  if (p.r == 1) {
    j["adjacency_ok"] = p.adjacency_ok;
  } else {
    j["max_split_diameter"] = p.max_split_diameter;
    j["split_witness"] = opt_cert(p.split_witness);
    j["split_ok"] = p.split_ok;
  }
  return j;
}

json analyze(GraphContext& ctx) {
  const Graph& g = ctx.graph();
  const auto& cat = ctx.catalog();
  json chord = json::object();
  for (Family f : {Family::all, Family::triangle, Family::bigon, Family::vertex_bigon}) {
    json rows = json::array();
    for (int k = 4; k <= cat.longest(); ++k) {
      auto m = minimal_m(cat, k, f);
      json row{{"k", k}, {"minimal_m", m ? json(*m) : json(nullptr)}};
      if (m && 2 * *m <= k) row["minimal_rho"] = to_json(minimal_rho(cat, k, *m, f));
      rows.push_back(row);
    }
    chord[to_string(f)] = rows;
  }
  auto k = ctx.k_star();
  return json{
      {"graph_id", ctx.id()},
      {"vertices", g.order()},
      {"edges", g.size()},
      {"mu", g.max_degree()},
      {"diameter", g.diameter()},
      {"cycles", {{"count", cat.records().size()}, {"longest", cat.longest()}, {"truncated", cat.truncated()}}},
      {"chordality", chord},
      {"k_star", k ? json(*k) : json(nullptr)},
      {"separators", {to_json(ctx.profile(1)), to_json(ctx.profile(2)), to_json(ctx.profile(3))}},
      {"hyperbolicity", to_json(ctx.hyperbolicity())},
      {"bp", to_json(ctx.bp())},
      {"stability",
       {to_json(ctx.stability(StabilityMode::vertices)), to_json(ctx.stability(StabilityMode::grid_points))}},
  };
}

std::string to_text(const TheoremReport& r) {
  std::ostringstream os;
  os << r.check_id << " on " << r.graph_id << ": " << to_string(r.status);
  if (r.params.contains("reason")) os << " (" << r.params["reason"].get<std::string>() << ")";
  os << "\n  params: " << r.params.dump() << "\n";
  if (!r.witness.is_null()) os << "  witness: " << r.witness.dump() << "\n";
  return os.str();
}

std::string to_text(const CorpusResult& r) {
  std::ostringstream os;
  os << "check                 pass  fail  vacuous  inconclusive\n";
  auto line = [&](const std::string& id, const CheckCounts& c) {
    os << id << std::string(id.size() < 20 ? 20 - id.size() : 1, ' ') << "  " << c.pass << "  " << c.fail << "  "
       << c.vacuous << "  " << c.inconclusive << "\n";
  };
  for (const auto& [id, c] : r.per_check) line(id, c);
  line("total", r.total);
  for (const auto& t : r.reports)
    if (t.status == Status::fail) os << "FAIL " << to_text(t);
  os << "runtime " << static_cast<long long>(r.runtime_ms) << " ms\n";
  return os.str();
}

std::string analyze_text(const json& p) {
  std::ostringstream os;
  os << "graph " << p["graph_id"].get<std::string>() << ": " << p["vertices"] << " vertices, " << p["edges"]
     << " edges, mu " << p["mu"] << ", diameter " << p["diameter"] << "\n";
  os << "cycles: " << p["cycles"]["count"] << " (longest " << p["cycles"]["longest"] << ")"
     << (p["cycles"]["truncated"].get<bool>() ? " truncated" : "") << "\n";
  os << "k*: " << p["k_star"].dump() << "\n";
  for (auto it = p["chordality"].begin(); it != p["chordality"].end(); ++it) {
    os << "chordality " << it.key() << ":";
    for (const auto& row : *it) {
      os << " k=" << row["k"] << " m=" << row["minimal_m"].dump();
      if (row.contains("minimal_rho")) os << " rho=" << row["minimal_rho"].dump();
      os << ";";
    }
    os << "\n";
  }
  for (const auto& s : p["separators"])
    os << "separators r=" << s["r"] << ": max diameter " << s["max_diameter"] << ", " << s["count"] << " found"
       << (s["truncated"].get<bool>() ? " (truncated)" : "") << "\n";
  os << "delta_hat: " << p["hyperbolicity"]["delta_hat"].dump() << "\n";
  os << "BP: delta' " << p["bp"]["delta_prime"].dump() << ", delta <= " << p["bp"]["delta"].dump() << "\n";
  for (const auto& s : p["stability"])
    os << "stability " << s["mode"].get<std::string>() << ": R " << s["R"].dump()
       << (s["caps_hit"].get<bool>() ? " (capped)" : "") << "\n";
  return os.str();
}

}  // namespace qtree
