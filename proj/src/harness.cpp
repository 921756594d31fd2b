#include "qtree/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "qtree/generators.hpp"

namespace qtree {

using nlohmann::json;

TheoremReport run_check(GraphContext& ctx, std::string_view check_id) {
  const CheckInfo* info = find_check(check_id);
  if (!info) throw std::invalid_argument("unknown check '" + std::string(check_id) + "'");
  auto start = std::chrono::steady_clock::now();
  CheckOutcome out = info->run(ctx);
  auto stop = std::chrono::steady_clock::now();
  TheoremReport r;
  r.check_id = std::string(check_id);
  r.graph_id = ctx.id();
  r.status = out.status;
  r.params = std::move(out.params);
  r.witness = std::move(out.witness);
  r.runtime_ms = std::chrono::duration<double, std::milli>(stop - start).count();
  if (r.status == Status::fail && r.witness.is_null())
    throw std::logic_error("check " + r.check_id + " failed without a witness");
  return r;
}

TheoremReport run_check(const Graph& g, std::string_view check_id, const std::string& graph_id,
                        const HarnessCaps& caps) {
  GraphContext ctx(g, graph_id, caps);
  return run_check(ctx, check_id);
}

void CheckCounts::add(Status s) {
  switch (s) {
    case Status::pass: ++pass; break;
    case Status::fail: ++fail; break;
    case Status::vacuous: ++vacuous; break;
    case Status::inconclusive: ++inconclusive; break;
  }
}

namespace {

std::string with_seed(const GraphSource& src, std::uint64_t seed) {
  return src.generator + (src.generator.find(':') == std::string::npos ? ":" : ",") + std::to_string(seed);
}

}  // namespace

CorpusConfig CorpusConfig::from_json(const json& j) {
  if (!j.is_object()) throw std::invalid_argument("corpus config must be a JSON object");
  for (auto it = j.begin(); it != j.end(); ++it)
    if (it.key() != "graphs" && it.key() != "checks" && it.key() != "caps" && it.key() != "output" &&
        it.key() != "threads")
      throw std::invalid_argument("unknown corpus field '" + it.key() + "'");
  CorpusConfig cfg;
  cfg.caps = HarnessCaps::from_env();
  if (!j.contains("graphs") || !j["graphs"].is_array()) throw std::invalid_argument("'graphs' must be an array");
  for (const auto& e : j["graphs"]) {
    GraphSource src;
    if (e.is_string()) {
      src.generator = e.get<std::string>();
    } else if (e.is_object() && e.contains("generator")) {
      src.generator = e["generator"].get<std::string>();
      if (e.contains("seeds")) src.seeds = e["seeds"].get<std::vector<std::uint64_t>>();
    } else {
      throw std::invalid_argument("graph entry must be a string or {generator, seeds}");
    }
    const bool random = family_is_random(src.generator);
    if (random && src.seeds.empty())
      throw std::invalid_argument("random family '" + src.generator + "' needs explicit seeds");
    if (!random && !src.seeds.empty())
      throw std::invalid_argument("family '" + src.generator + "' takes no seed");
    cfg.graphs.push_back(std::move(src));
  }
  if (j.contains("checks")) {
    cfg.checks = j["checks"].get<std::vector<std::string>>();
    for (const auto& c : cfg.checks)
      if (!find_check(c)) throw std::invalid_argument("unknown check '" + c + "'");
  }
  if (j.contains("caps")) cfg.caps.apply(j["caps"].get<std::string>());
  if (j.contains("output")) cfg.output = j["output"].get<std::string>();
  if (j.contains("threads")) cfg.threads = j["threads"].get<unsigned>();
  return cfg;
}

std::vector<std::string> CorpusConfig::graph_ids() const {
  std::vector<std::string> ids;
  for (const auto& src : graphs) {
    if (src.seeds.empty()) ids.push_back(src.generator);
    for (auto s : src.seeds) ids.push_back(with_seed(src, s));
  }
  return ids;
}

CorpusResult run_corpus(const CorpusConfig& cfg) {
  auto start = std::chrono::steady_clock::now();
  const auto ids = cfg.graph_ids();
  std::vector<std::string> checks = cfg.checks;
  if (checks.empty())
    for (const auto& c : check_registry()) checks.emplace_back(c.id);

  // graphs first, on this thread, so generator errors surface in order
  std::vector<Graph> graphs;
  graphs.reserve(ids.size());
  for (const auto& id : ids) {
    try {
      graphs.push_back(generate(id));
    } catch (const std::exception& e) {
      throw std::runtime_error("graph '" + id + "': " + e.what());
    }
  }

  std::vector<std::vector<TheoremReport>> per_graph(ids.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    for (std::size_t i; (i = next++) < ids.size();) {
      try {
        GraphContext ctx(graphs[i], ids[i], cfg.caps);
        for (const auto& c : checks) per_graph[i].push_back(run_check(ctx, c));
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    }
  };
  unsigned threads = cfg.threads ? cfg.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, std::max<std::size_t>(1, ids.size()));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);

  CorpusResult res;
  for (auto& reports : per_graph)
    for (auto& r : reports) {
      res.per_check[r.check_id].add(r.status);
      res.total.add(r.status);
      res.reports.push_back(std::move(r));
    }
  res.runtime_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return res;
}

}  // namespace qtree
