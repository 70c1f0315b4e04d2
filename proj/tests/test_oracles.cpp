#include <doctest.h>

#include "zigzag/kekule.hpp"
#include "zigzag/matrixcore.hpp"
#include "zigzag/oracles.hpp"

using namespace zigzag;
using namespace zigzag::oracles;

TEST_CASE("count_weighted_path small values") {
  CHECK(count_weighted_path(0, 5) == 1);
  CHECK(count_weighted_path(3, 0) == 1);
  CHECK(count_weighted_path(1, 4) == 5);
  CHECK(count_weighted_path(2, 2) == 6);
  CHECK(count_weighted_path(3, 3) == 30);
  CHECK(count_weighted_path(5, 4) == 671);
}

TEST_CASE("count_weighted_path matches the recursion") {
  for (int n = 0; n <= 8; ++n)
    for (int m = 0; m <= 6; ++m)
      CHECK(count_weighted_path(n, m) == kekule::t_value(n, m));
}

TEST_CASE("count_lattice_points agrees with count_weighted_path") {
  for (int n = 0; n <= 7; ++n)
    for (int m = 0; m <= 6; ++m)
      CHECK(count_lattice_points(n, m) == count_weighted_path(n, m));
}

TEST_CASE("count_magic_labellings") {
  CHECK(count_magic_labellings(1, 3) == 4);
  for (int n = 1; n <= 7; ++n)
    for (int s = 0; s <= 6; ++s)
      CHECK(count_magic_labellings(n, s) == kekule::t_value(n, s));
}

TEST_CASE("count_weighted_cycle") {
  // 3-cycles over {0,1}: all zero or a single 1.
  CHECK(count_weighted_cycle(3, 1) == 4);
  for (int k = 3; k <= 8; ++k)
    for (int m = 1; m <= 4; ++m) {
      matrixcore::IntMatrix a = matrixcore::unit_primitive(m + 1);
      CHECK(count_weighted_cycle(k, m) ==
            matrixcore::mat_pow(a, unsigned(k)).trace());
    }
}

TEST_CASE("budget enforcement") {
  CHECK_THROWS_AS(count_weighted_path(40, 10), budget_error);
  CHECK_THROWS_AS(count_lattice_points(12, 9), budget_error);
  CHECK_THROWS_AS(count_magic_labellings(30, 20), budget_error);
  CHECK_THROWS_AS(count_weighted_cycle(30, 20), budget_error);
  // Right at the edge of validity for arguments.
  CHECK_THROWS_AS(count_weighted_cycle(2, 1), std::invalid_argument);
  CHECK_THROWS_AS(count_magic_labellings(0, 1), std::invalid_argument);
  CHECK_THROWS_AS(count_weighted_path(-1, 1), std::invalid_argument);
}
