// One line per acceptance criterion; exit status 1 if any criterion fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

#include "oracles.hpp"
#include "properties.hpp"
#include "qtree/generators.hpp"
#include "qtree/harness.hpp"

using namespace qtree;

namespace {

struct Outcome {
  bool ok = true;
  std::ostringstream notes;
  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      notes << " [" << what << "]";
    }
  }
};

double elapsed_s(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// Criterion 7 results are reused by criterion 10.
CorpusResult g_corpus;
bool g_corpus_ran = false;

void c1(Outcome& o) {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    Graph t = random_tree(20 + static_cast<int>(3 * seed), seed);
    const std::string id = "tree seed " + std::to_string(seed);
    o.require(delta_hat(t).delta_hat == Length::units(0), id + ": delta_hat");
    o.require(bp_delta(t).delta_prime == Length::units(0), id + ": bp");
    CycleCatalog cat(t);
    for (int k = 4; k <= 8; ++k)
      for (Family f : {Family::all, Family::triangle, Family::bigon, Family::vertex_bigon})
        for (int m = 1; m <= k / 2; ++m)
          for (auto rho : {std::optional<Length>{}, std::optional<Length>{Length::halves(k)}})
            o.require(chordality_check(cat, ChordalityQuery{k, m, rho, f}).status == Status::vacuous,
                      id + ": chordality not vacuous");
    GraphContext ctx(t, id);
    // registry checks whose conclusion is a chordality query
    for (const auto& c : check_registry()) {
      auto r = run_check(ctx, c.id);
      if (r.params.contains("query"))
        o.require(r.status == Status::vacuous, id + ": " + std::string(c.id) + " not vacuous");
    }
    o.require(stability_constant(t, StabilityMode::vertices).R == Length::units(0), id + ": stability vertices");
    o.require(stability_constant(t, StabilityMode::grid_points).R == Length::units(0), id + ": stability grid");
  }
}

void c2(Outcome& o) {
  for (int n = 5; n <= 12; ++n) {
    Length got = delta_hat(cycle_graph(n), 4).delta_hat;
    const int oracle = oracle::cycle_delta_quarters(n);
    o.require(oracle == n, "oracle C" + std::to_string(n));
    o.require(got == Length::quarters(n), "C" + std::to_string(n) + " gave " + got.str());
  }
}

void c3(Outcome& o) {
  Graph c8 = cycle_graph(8);
  o.require(bp_delta(c8).delta_prime == Length::units(2), "minimal delta'");
  o.require(bp_check_vertices(c8, Length::units(2)).holds, "pass at 2");
  o.require(!bp_check_vertices(c8, Length::halves(3)).holds, "fail at 1.5");
  for (int h = 0; h <= 6; ++h)
    o.require(bp_check_vertices(c8, Length::halves(h)).holds == oracle::bp_literal(c8, 2 * h),
              "oracle at " + Length::halves(h).str());
}

void c4(Outcome& o) {
  const int N = 8;
  Graph g = hub_cycles(N);
  CycleCatalog cat(g);
  for (int k = 4; k <= g.order(); ++k) {
    auto s = chordality_check(cat, ChordalityQuery{k, 1, std::nullopt, Family::all}).status;
    o.require(s == Status::fail, "k=" + std::to_string(k) + " " + to_string(s));
  }
  auto p = separator_diameter_profile(g, 1);
  o.require(p.max_diameter == 2, "separator diameter " + std::to_string(p.max_diameter));
  o.require(p.witness.has_value(), "certificate");
  if (p.witness) {
    const auto& S = p.witness->S;
    int hubs = 0;
    for (Vertex v : S)
      for (int h = 3; h <= N; ++h) hubs += v == hub_cycles_hub(N, h);
    o.require(S.size() == 3 && hubs == 1, "certificate shape " + to_string(*p.witness));
  }
}

void c5(Outcome& o) {
  const int A = 12;
  Graph g = ladder_blocks(A);
  for (int n = 1; n <= 3; ++n) {
    const std::string tag = "n=" + std::to_string(n);
    auto a = ladder_blocks_vertex(A, 4 * n, 0), b = ladder_blocks_vertex(A, 4 * n + 4, 0);
    VertexSet S;
    bool present = a && b;
    for (int j = 0; j <= n && present; ++j) {
      auto v = ladder_blocks_vertex(A, 4 * n + 2, j);
      present = v.has_value();
      if (v) S.push_back(*v);
    }
    if (!present) {
      o.require(false, tag + ": block not present for A=" + std::to_string(A));
      continue;
    }
    std::sort(S.begin(), S.end());
    auto c = check_separation(g, S, *a, *b, 1);
    o.require(c && c->minimal, tag + ": not a minimal separator");
    o.require(c && c->diameter == n, tag + ": diameter");
  }
  auto bp = bp_delta(g);
  o.require(bp.delta_prime < Length::infinity(), "bp delta' finite");
}

void c6(Outcome& o) {
  const int K = 4;
  Graph g = odd_cycle_wedge(K);
  o.require(stability_constant(g, StabilityMode::vertices).R == Length::units(0), "stability constant");
  Subdivision s(g, 2);
  PathHausdorff h(s.fine());
  for (int k = 1; k <= K; ++k) {
    std::vector<Vertex> up{0}, down{0};
    for (int j = 1; j <= k; ++j) up.push_back(odd_cycle_wedge_vertex(K, k, j));
    for (int j = 2 * k; j > k; --j) down.push_back(odd_cycle_wedge_vertex(K, k, j));
    Vertex m = s.locate(PointRef::on_edge(up.back(), down.back(), 1, 2));
    auto p = s.trace(up), q = s.trace(down);
    p.push_back(m);
    q.push_back(m);
    // halves of the 2-subdivision are quarters of g
    o.require(Length::quarters(h.half_distance(p, q)) == Length::quarters(2 * k + 1), "bigon k=" + std::to_string(k));
  }
}

void c7(Outcome& o) {
  nlohmann::json graphs = {"example_2_9:8", "example_3_14:12", "example_6_9:4"};
  for (int n : {6, 8, 10, 12, 14})
    for (const char* p : {"0.2", "0.3"}) {
      nlohmann::json seeds = nlohmann::json::array();
      for (int s = 1; s <= 20; ++s) seeds.push_back(s);
      graphs.push_back({{"generator", "er:" + std::to_string(n) + "," + p}, {"seeds", seeds}});
    }
  for (const char* gr : {"grid:2,2", "grid:2,3", "grid:2,4", "grid:3,2"}) graphs.push_back(gr);
  for (int n = 3; n <= 8; ++n) graphs.push_back("complete:" + std::to_string(n));
  auto cfg = CorpusConfig::from_json({{"graphs", graphs}});
  g_corpus = run_corpus(cfg);
  g_corpus_ran = true;
  std::size_t er = 0;
  for (const auto& id : cfg.graph_ids()) er += id.starts_with("er:");
  o.require(er >= 200, "ER graph count");
  for (const auto& r : g_corpus.reports) {
    if (r.status != Status::fail) continue;
    Graph g = generate(r.graph_id);
    bool replays = !r.witness.is_null() && replay_witness(g, r.witness);
    o.require(false, r.check_id + " on " + r.graph_id + (replays ? " (witness replays)" : " (witness does not replay)"));
  }
  o.notes << " " << g_corpus.reports.size() << " reports: " << g_corpus.total.pass << " pass, " << g_corpus.total.vacuous
          << " vacuous, " << g_corpus.total.inconclusive << " inconclusive, " << g_corpus.total.fail << " fail";
}

void c8(Outcome& o) {
  int graphs = 0;
  for (std::uint64_t seed = 1; graphs < 50; ++seed, ++graphs) {
    Graph g = erdos_renyi_connected(5 + static_cast<int>(seed % 4), 0.35, 9000 + seed);
    for (int r = 1; r <= 2; ++r)
      for (Vertex a = 0; a < g.order(); ++a)
        for (Vertex b = a + 1; b < g.order(); ++b) {
          if (r == 1 && g.adjacent(a, b)) continue;
          std::set<VertexSet> got;
          for (const auto& c : enumerate_minimal_ab_separators(g, a, b, r).certs) got.insert(c.S);
          o.require(got == oracle::minimal_separators(g, a, b, r), "separators seed " + std::to_string(seed));
        }
  }
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    Graph g = erdos_renyi_connected(6 + static_cast<int>(seed % 5), 0.3, 9500 + seed);
    for (int h = 0; h <= 5; ++h)
      o.require(bp_check_vertices(g, Length::halves(h)).holds == oracle::bp_literal(g, 2 * h),
                "bp seed " + std::to_string(seed));
  }
}

void c9(Outcome& o) {
  for (auto& bad : {props::chordality_monotone(1000, 11), props::bp_monotone(1000, 11), props::density_antitone(1000, 11)})
    if (!bad.empty()) o.require(false, bad.front());
}

void c10(Outcome& o) {
  Graph g = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {0, 2}});
  for (const auto& c : enumerate_minimal_ab_separators(g, 0, 3, 1).certs)
    o.require(!std::binary_search(c.S.begin(), c.S.end(), 1), "x1 in a minimal separator");
  o.require(g_corpus_ran, "corpus did not run");
  std::size_t checked = 0;
  for (const auto& r : g_corpus.reports)
    if (r.check_id == "rem_2_10") {
      ++checked;
      // graphs without minimal separators report vacuous
      o.require(r.status == Status::pass || r.status == Status::vacuous,
                "adjacency on " + r.graph_id + ": " + to_string(r.status));
    }
  o.notes << " adjacency checked on " << checked << " graphs";
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double budget_s;
    std::function<void(Outcome&)> run;
  };
  const std::vector<Criterion> criteria{
      {1, "tree suite", 5, c1},
      {2, "cycle hyperbolicity n/4", 60, c2},
      {3, "bottleneck constant of C8", 1, c3},
      {4, "hub cycles (N=8)", 30, c4},
      {5, "ladder blocks (A=12)", 30, c5},
      {6, "odd cycle wedge (K=4)", 10, c6},
      {7, "theorem harness corpus", 1800, c7},
      {8, "oracle equivalence", 600, c8},
      {9, "monotonicity properties", 600, c9},
      {10, "regression fixtures", 60, c10},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    Outcome o;
    auto t0 = std::chrono::steady_clock::now();
    try {
      c.run(o);
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    const double s = elapsed_s(t0);
    if (s > c.budget_s) o.require(false, "over the " + std::to_string(static_cast<int>(c.budget_s)) + " s budget");
    failed += !o.ok;
    std::printf("criterion %2d: %s  %s (%.2f s)%s\n", c.id, o.ok ? "PASS" : "FAIL", c.name, s, o.notes.str().c_str());
    std::fflush(stdout);
  }
  return failed ? 1 : 0;
}
