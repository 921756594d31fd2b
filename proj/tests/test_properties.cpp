#include "doctest.h"
#include "properties.hpp"

TEST_CASE("chordality_check is monotone") {
  auto bad = props::chordality_monotone(1000, 7);
  CHECK_MESSAGE(bad.empty(), (bad.empty() ? "" : bad.front()));
}

TEST_CASE("bp_check_vertices is monotone in delta_prime") {
  auto bad = props::bp_monotone(1000, 7);
  CHECK_MESSAGE(bad.empty(), (bad.empty() ? "" : bad.front()));
}

TEST_CASE("density_radius is antitone under insertion") {
  auto bad = props::density_antitone(1000, 7);
  CHECK_MESSAGE(bad.empty(), (bad.empty() ? "" : bad.front()));
}
