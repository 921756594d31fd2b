#include "doctest.h"
#include "oracles.hpp"
#include "qtree/chordality.hpp"
#include "qtree/generators.hpp"

using namespace qtree;

namespace {

Cycle ring(std::vector<Vertex> v) { return Cycle{std::move(v)}; }

}  // namespace

TEST_CASE("enumerate_cycles examples") {
  CHECK(enumerate_cycles(random_tree(12, 3)).cycles.empty());
  auto c5 = enumerate_cycles(cycle_graph(5));
  REQUIRE(c5.cycles.size() == 1);
  CHECK(c5.cycles[0].vertices == std::vector<Vertex>{0, 1, 2, 3, 4});
  auto k4 = enumerate_cycles(complete_graph(4), 4);
  CHECK(k4.cycles.size() == 7);
  CHECK(oracle::cycles_as_edge_sets(complete_graph(4), 4).size() == 7);
  CHECK(enumerate_cycles(complete_graph(4), 3).cycles.size() == 4);
  auto capped = enumerate_cycles(complete_graph(6), 0, 10);
  CHECK(capped.truncated);
  CHECK(capped.cycles.size() == 10);
}

TEST_CASE("cycle enumeration agrees with the DFS oracle") {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    Graph g = erdos_renyi_connected(8, 0.4, seed);
    auto list = enumerate_cycles(g);
    auto expected = oracle::cycles_as_edge_sets(g, g.order());
    std::set<std::vector<int>> got;
    for (const auto& c : list.cycles) {
      REQUIRE(c.vertices.front() == *std::min_element(c.vertices.begin(), c.vertices.end()));
      REQUIRE(c.vertices[1] < c.vertices.back());
      std::vector<int> es;
      for (int i = 0; i < c.length(); ++i) es.push_back(g.edge_index(c.vertices[i], c.vertices[(i + 1) % c.length()]));
      std::sort(es.begin(), es.end());
      got.insert(es);
    }
    CHECK(got.size() == list.cycles.size());
    CHECK(got == expected);
  }
}

TEST_CASE("arc metric") {
  Cycle c = ring({0, 1, 2, 3, 4, 5, 6});
  CHECK(c.arc(0, 3) == 3);
  CHECK(c.arc(0, 5) == 2);
  CHECK(c.position_of(4) == 4);
  CHECK(c.position_of(9) == -1);
}

TEST_CASE("min_shortcut examples") {
  Graph k4 = complete_graph(4);
  Cycle sq = ring({0, 1, 2, 3});
  auto s = min_shortcut(k4, sq, 0, 2, true);
  REQUIRE(s);
  CHECK(s->length == 1);
  CHECK(s->path == std::vector<Vertex>{0, 2});
  CHECK(validate_shortcut(k4, sq, *s));

  Graph c5 = cycle_graph(5);
  Cycle five = ring({0, 1, 2, 3, 4});
  for (Vertex p = 0; p < 5; ++p)
    for (Vertex q = p + 1; q < 5; ++q) {
      CHECK(!min_shortcut(c5, five, p, q, true));
      CHECK(!min_shortcut(c5, five, p, q, false));
    }

  // the 7-cycle around hub 7 of hub_cycles(8)
  const int N = 8;
  Graph h = hub_cycles(N);
  std::vector<Vertex> cv;
  for (int j = 0; j < 7; ++j) cv.push_back(hub_cycles_cycle_vertex(N, 7, j));
  Cycle c7{cv};
  auto sc = min_shortcut(h, c7, cv[0], cv[3], true);
  REQUIRE(sc);
  CHECK(sc->length == 2);
  CHECK(sc->path[1] == hub_cycles_hub(N, 7));
  CHECK(validate_shortcut(h, c7, *sc));
  for (int i = 0; i < 7; ++i)
    for (int j = i + 1; j < 7; ++j) {
      auto x = min_shortcut(h, c7, cv[i], cv[j], false);
      if (x) CHECK(x->length >= 2);
    }
  CHECK(shortcut_vertices(h, c7, 2).size() == 7);
  CHECK(shortcut_vertices(h, c7, 1).empty());
}

TEST_CASE("shortcut_vertices examples") {
  Graph c8 = cycle_graph(8);
  Cycle eight = ring({0, 1, 2, 3, 4, 5, 6, 7});
  for (int m = 1; m <= 4; ++m) CHECK(shortcut_vertices(c8, eight, m).empty());
  CHECK(shortcut_vertices(complete_graph(4), ring({0, 1, 2, 3}), 1) == VertexSet{0, 1, 2, 3});
}

TEST_CASE("density_radius examples") {
  std::vector<Vertex> v(10);
  for (int i = 0; i < 10; ++i) v[i] = i;
  Cycle c{v};
  CHECK(density_radius(c, VertexSet{0, 2, 5}) == Length::halves(5));
  CHECK(density_radius(c, VertexSet(v.begin(), v.end())) == Length::halves(1));
  CHECK(density_radius(c, VertexSet{}) == Length::infinity());
  CHECK(density_radius(c, VertexSet{3}) == Length::units(5));
  CHECK_THROWS_AS(density_radius(c, VertexSet{11}), std::invalid_argument);
}

TEST_CASE("classify_cycle examples") {
  auto tri = classify_cycle(complete_graph(4), ring({0, 1, 2}), 2);
  CHECK(tri.triangle);
  auto c6 = classify_cycle(cycle_graph(6), ring({0, 1, 2, 3, 4, 5}), 2);
  CHECK(c6.triangle);
  CHECK(c6.bigon);
  CHECK(c6.vertex_bigon);
  auto c5 = classify_cycle(cycle_graph(5), ring({0, 1, 2, 3, 4}), 2);
  CHECK(c5.bigon);
  CHECK(!c5.vertex_bigon);
  auto c5t1 = classify_cycle(cycle_graph(5), ring({0, 1, 2, 3, 4}), 1);
  CHECK(!c5t1.bigon);
  // a 4-cycle of K4: vertex arcs of length 2 have a chord, but the two
  // midpoint-to-midpoint halves are geodesics of length 2
  auto sq = classify_cycle(complete_graph(4), ring({0, 1, 2, 3}), 2);
  CHECK(!sq.vertex_bigon);
  CHECK(sq.bigon);
}

TEST_CASE("classification matches an exhaustive corner search") {
  // brute force over corner pairs and triples on the 2-grid of the cycle
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    Graph g = erdos_renyi_connected(7, 0.45, seed);
    Graph fine = subdivide(g, 2);
    auto fd = oracle::floyd_warshall(fine);
    for (const auto& c : enumerate_cycles(g).cycles) {
      const int L = c.length(), M = 2 * L;
      // grid position -> fine vertex
      std::vector<Vertex> pos(M);
      for (int i = 0; i < L; ++i) {
        Vertex u = c.vertices[i], w = c.vertices[(i + 1) % L];
        auto [x, y] = std::minmax(u, w);
        int e = g.edge_index(x, y);
        pos[2 * i] = u;
        pos[2 * i + 1] = g.order() + e;
      }
      auto arc_ok = [&](int i, int j) {  // forward arc i..j, j >= i
        return (j - i) <= fd[pos[i % M]][pos[j % M]];
      };
      bool bigon = false, vbigon = false, triangle = false;
      for (int i = 0; i < M; ++i)
        for (int j = i + 1; j < i + M; ++j) {
          if (arc_ok(i, j) && arc_ok(j, i + M)) {
            bigon = true;
            if (i % 2 == 0 && j % 2 == 0) vbigon = true;
          }
          for (int k = j + 1; k < i + M && !triangle; ++k)
            if (arc_ok(i, j) && arc_ok(j, k) && arc_ok(k, i + M)) triangle = true;
        }
      auto tags = classify_cycle(g, c, 2);
      CHECK(tags.bigon == bigon);
      CHECK(tags.vertex_bigon == vbigon);
      CHECK(tags.triangle == triangle);
    }
  }
}

TEST_CASE("chordality_check examples") {
  Graph t = random_tree(10, 1);
  CHECK(chordality_check(t, ChordalityQuery{4, 1, Length::halves(1), Family::all}).status == Status::vacuous);
  auto c8 = chordality_check(cycle_graph(8), ChordalityQuery{8, std::nullopt, std::nullopt, Family::all});
  CHECK(c8.status == Status::fail);
  REQUIRE(c8.witness);
  CHECK(c8.witness->length() == 8);

  // hub_cycles(8): the 8-cycle has no 1-shortcut, the 9-cycles
  // through hub 8 do, and nothing is longer
  Graph h = hub_cycles(8);
  CycleCatalog hc(h);
  for (int k = 4; k <= 8; ++k)
    CHECK(chordality_check(hc, ChordalityQuery{k, 1, std::nullopt, Family::all}).status == Status::fail);
  CHECK(chordality_check(hc, ChordalityQuery{9, 1, std::nullopt, Family::all}).status == Status::pass);
  for (int k = 10; k <= h.order(); ++k)
    CHECK(chordality_check(hc, ChordalityQuery{k, 1, std::nullopt, Family::all}).status == Status::vacuous);

  Graph k5 = complete_graph(5);
  CHECK(chordality_check(k5, ChordalityQuery{4, 1, Length::halves(1), Family::all}).status == Status::pass);

  CHECK_THROWS_AS(chordality_check(k5, ChordalityQuery{3, 1, std::nullopt, Family::all}), std::invalid_argument);
  CHECK_THROWS_AS(chordality_check(k5, ChordalityQuery{4, 3, std::nullopt, Family::all}), std::invalid_argument);
  CHECK_THROWS_AS(chordality_check(k5, ChordalityQuery{4, std::nullopt, Length::units(1), Family::all}),
                  std::invalid_argument);

  auto capped = chordality_check(complete_graph(7), ChordalityQuery{4, 1, std::nullopt, Family::all}, 0, 50);
  CHECK(capped.status == Status::inconclusive);
}

TEST_CASE("catalog helpers") {
  CycleCatalog cat(hub_cycles(6));
  CHECK(cat.longest() == 6 + 1);
  CHECK(!minimal_m(cat, 4, Family::all).has_value());
  CycleCatalog k4(complete_graph(4));
  CHECK(minimal_m(k4, 4, Family::all) == 1);
  CHECK(minimal_rho(k4, 4, 1, Family::all) == Length::halves(1));
  CHECK(minimal_rho(CycleCatalog(cycle_graph(6)), 4, 2, Family::all) == Length::infinity());
}

TEST_CASE("a shortcut implies a nearby strict shortcut") {
  for (std::uint64_t seed = 1; seed <= 15; ++seed) {
    Graph g = erdos_renyi_connected(8, 0.35, seed);
    for (const auto& c : enumerate_cycles(g).cycles) {
      const int L = c.length();
      for (int i = 0; i < L; ++i)
        for (int j = i + 1; j < L; ++j) {
          auto s = min_shortcut(g, c, c.vertices[i], c.vertices[j], false);
          if (!s) continue;
          bool found = false;
          for (int a = 0; a < L && !found; ++a)
            for (int b = 0; b < L && !found; ++b) {
              if (a == b || c.arc(i, a) >= s->length || c.arc(j, b) >= s->length) continue;
              auto st = min_shortcut(g, c, c.vertices[a], c.vertices[b], true);
              found = st.has_value() && validate_shortcut(g, c, *st);
            }
          CHECK(found);
        }
    }
  }
}
