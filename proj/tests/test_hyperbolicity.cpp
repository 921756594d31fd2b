#include "doctest.h"
#include "oracles.hpp"
#include "qtree/generators.hpp"
#include "qtree/hyperbolicity.hpp"

using namespace qtree;

TEST_CASE("delta_hat of trees is zero") {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    auto r = delta_hat(random_tree(20, seed));
    CHECK(r.delta_hat == Length::units(0));
    CHECK(!r.witness);
  }
}

TEST_CASE("delta_hat of cycles matches the arc-metric oracle") {
  for (int n = 3; n <= 9; ++n) {
    auto r = delta_hat(cycle_graph(n), 4);
    CHECK(r.delta_hat == Length::quarters(oracle::cycle_delta_quarters(n)));
    CHECK(r.delta_hat == Length::quarters(n));
    CHECK(r.complete);
  }
}

TEST_CASE("triangle_thinness on C6") {
  Subdivision s(cycle_graph(6), 2);
  std::array<std::vector<Vertex>, 3> sides{s.trace(std::vector<Vertex>{0, 1, 2}), s.trace(std::vector<Vertex>{2, 3, 4}),
                                           s.trace(std::vector<Vertex>{4, 5, 0})};
  CHECK(triangle_thinness(s, sides) == Length::units(1));
  sides[1] = s.trace(std::vector<Vertex>{2, 3});
  CHECK_THROWS_AS(triangle_thinness(s, sides), std::invalid_argument);
}

TEST_CASE("delta_hat grows with the resolution") {
  for (std::uint64_t seed = 1; seed <= 15; ++seed) {
    Graph g = erdos_renyi_connected(8, 0.3, seed);
    CycleCatalog cat(g);
    Length d1 = delta_hat(g, 1, &cat).delta_hat, d2 = delta_hat(g, 2, &cat).delta_hat,
           d4 = delta_hat(g, 4, &cat).delta_hat;
    CHECK(d1 <= d2);
    CHECK(d2 <= d4);
  }
}

TEST_CASE("delta_hat scales under subdivision") {
  for (std::uint64_t seed = 1; seed <= 8; ++seed) {
    Graph g = erdos_renyi_connected(7, 0.35, seed);
    Graph g2 = subdivide(g, 2);
    for (int t : {1, 2})
      CHECK(delta_hat(g2, t).delta_hat.to_double() == doctest::Approx(2 * delta_hat(g, 2 * t).delta_hat.to_double()));
  }
}

TEST_CASE("delta_hat witness is consistent") {
  auto r = delta_hat(cycle_graph(8), 4);
  REQUIRE(r.witness);
  CHECK(r.witness->length() == 8);
  CHECK(r.resolution == 4);
}
