#include "doctest.h"
#include "oracles.hpp"
#include "qtree/bottleneck.hpp"
#include "qtree/generators.hpp"

using namespace qtree;

TEST_CASE("bp on trees") {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    auto r = bp_delta(random_tree(20, seed));
    CHECK(r.delta_prime == Length::units(0));
    CHECK(r.delta == Length::halves(3));
    CHECK(!r.witness);
  }
}

TEST_CASE("bp on C8") {
  Graph c8 = cycle_graph(8);
  auto r = bp_delta(c8);
  CHECK(r.delta_prime == Length::units(2));
  REQUIRE(r.witness);
  CHECK(bp_check_vertices(c8, Length::units(2)).holds);
  auto f = bp_check_vertices(c8, Length::halves(3));
  CHECK(!f.holds);
  REQUIRE(f.witness);
  CHECK(f.witness->path.front() == f.witness->v);
  CHECK(f.witness->path.back() == f.witness->w);
  CHECK(!bp_check_vertices(c8, Length::units(1)).holds);
  CHECK(oracle::bp_literal(c8, 8));
  CHECK(!oracle::bp_literal(c8, 6));
}

TEST_CASE("bp_check_vertices agrees with the path-enumeration definition") {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    Graph g = erdos_renyi_connected(6 + static_cast<int>(seed % 4), 0.35, seed);
    for (int h = 0; h <= 5; ++h) CHECK(bp_check_vertices(g, Length::halves(h)).holds == oracle::bp_literal(g, 2 * h));
  }
}

TEST_CASE("bp is monotone in delta_prime") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    Graph g = erdos_renyi_connected(10, 0.25, seed);
    auto r = bp_delta(g);
    for (int h = 0; h <= 8; ++h)
      CHECK(bp_check_vertices(g, Length::halves(h)).holds == (r.delta_prime <= Length::halves(h)));
  }
}

TEST_CASE("neighbour-separator characterization examples") {
  Graph c8 = cycle_graph(8);
  auto f = neighbor_separator_characterization(c8, 1);
  CHECK(f.status == Status::fail);
  CHECK(f.witness.size() >= 5);
  CHECK(neighbor_separator_characterization(c8, 3).status == Status::vacuous);
  CHECK(neighbor_separator_characterization(path_graph(10), 1).status == Status::pass);
  CHECK(minimal_neighbor_separator_radius(path_graph(10)) == 1);
  CHECK_THROWS_AS(neighbor_separator_characterization(c8, 0), std::invalid_argument);
}
