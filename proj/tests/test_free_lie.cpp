#include <doctest.h>

#include "nilq/free_lie.hpp"

using namespace nilq;

TEST_CASE("witt dimensions, small values") {
  CHECK(witt_dim(2, 1) == 2);
  CHECK(witt_dim(2, 2) == 1);
  CHECK(witt_dim(2, 3) == 2);
  CHECK(witt_dim(2, 4) == 3);
  CHECK(witt_dim(2, 5) == 6);
}

TEST_CASE("lyndon basis at low degree") {
  Alphabet ab({{"x"}, {"y"}});
  auto deg1 = lyndon_basis(ab, 1);
  REQUIRE(deg1.size() == 2);
  CHECK(tree_to_string(deg1[0], ab) == "x");
  CHECK(tree_to_string(deg1[1], ab) == "y");
  auto deg2 = lyndon_basis(ab, 2);
  REQUIRE(deg2.size() == 1);
  CHECK(tree_to_string(deg2[0], ab) == "[x,y]");
}
