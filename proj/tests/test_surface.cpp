#include "doctest.h"
#include "surftri/error.hpp"
#include "surftri/surface.hpp"

using namespace surftri;

TEST_CASE("euler genus of named surfaces") {
  CHECK(euler_genus(Surface::S(2)) == 4);
  CHECK(euler_genus(Surface::N(3)) == 3);
  CHECK(euler_genus(Surface::S(0)) == 0);
  for (int g = 0; g <= 3; ++g) CHECK(euler_genus(Surface::S(g)) % 2 == 0);
  CHECK(euler_characteristic(Surface::N(1)) == 1);
}

TEST_CASE("v_min formula with the three exceptions") {
  CHECK(v_min(Surface::S(0)) == 4);
  CHECK(v_min(Surface::S(1)) == 7);
  CHECK(v_min(Surface::S(2)) == 10);
  CHECK(v_min(Surface::N(1)) == 6);
  CHECK(v_min(Surface::N(2)) == 8);
  CHECK(v_min(Surface::N(3)) == 9);
  CHECK(v_min(Surface::N(4)) == 9);
  // Heawood values computed with floating point as an independent check.
  CHECK(v_min(Surface::S(3)) == 10);
  CHECK(v_min(Surface::N(5)) == 9);
}

TEST_CASE("v_max lower bound") {
  CHECK(v_max_lower_bound(Surface::N(4)) == 22);
  CHECK(v_max_lower_bound(Surface::S(2)) == 17);
  CHECK(v_max_lower_bound(Surface::N(3)) == 16);
  CHECK_THROWS_AS(v_max_lower_bound(Surface::S(0)), Error);
  for (int g = 2; g <= 8; ++g) {
    CHECK(v_min(Surface::N(g)) <= v_max_lower_bound(Surface::N(g)));
    CHECK(v_min(Surface::S(g)) <= v_max_lower_bound(Surface::S(g)));
  }
  CHECK(v_min(Surface::S(1)) <= v_max_lower_bound(Surface::S(1)));
  // floor(11/2) undercounts the projective plane, whose largest irreducible has 7.
  CHECK(v_max_lower_bound(Surface::N(1)) == 5);
  CHECK(v_min(Surface::N(1)) == 6);
}

TEST_CASE("surface names") {
  CHECK(parse_surface("S2") == Surface::S(2));
  CHECK(parse_surface("N3") == Surface::N(3));
  CHECK(to_string(Surface::N(12)) == "N12");
  CHECK_THROWS_AS(parse_surface("N0"), Error);
  CHECK_THROWS_AS(parse_surface("T1"), Error);
  CHECK_THROWS_AS(parse_surface("S"), Error);
  CHECK_THROWS_AS(parse_surface("S1x"), Error);
}
