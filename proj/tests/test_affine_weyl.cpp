#include <set>
#include <stdexcept>

#include "abg/affine_weyl.hpp"
#include "doctest.h"

using namespace abg;

TEST_CASE("simple reflections") {
  AffineWeight rho;
  CHECK(reflect(0, rho).c == std::array<int, 3>{-1, 0, 0});
  CHECK(reflect(1, rho).c == std::array<int, 3>{0, -1, 0});
  for (const auto& p : enumerate_orbit(5))
    for (int i = 0; i < 3; ++i) CHECK(reflect(i, reflect(i, p.weight)) == p.weight);
  CHECK_THROWS_AS(reflect(3, rho), std::invalid_argument);
}

TEST_CASE("braid relations and regularity on the orbit") {
  for (const auto& p : enumerate_orbit(6)) {
    for (int v : p.weight.pairing()) CHECK(v != 0);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        if (i == j) continue;
        AffineWeight w = p.weight;
        for (int k = 0; k < 3; ++k) w = reflect(i, reflect(j, w));
        CHECK(w == p.weight);
        AffineWeight once = reflect(i, reflect(j, p.weight));
        CHECK(once != p.weight);
      }
  }
}

TEST_CASE("orbit grows without bound") {
  auto orbit = enumerate_orbit(12);
  std::vector<std::size_t> per(13, 0);
  for (const auto& p : orbit) per[p.length]++;
  CHECK(per[0] == 1);
  CHECK(per[1] == 3);
  CHECK(per[2] == 6);
  for (unsigned l = 1; l <= 12; ++l) CHECK(per[l] > 0);
  // Affine A2: the number of elements of length l is 3l for l ≥ 1.
  for (unsigned l = 1; l <= 12; ++l) CHECK(per[l] == 3 * l);
}

TEST_CASE("reduced words reproduce the orbit point") {
  for (const auto& p : enumerate_orbit(7)) {
    CHECK(p.word.size() == p.length);
    AffineWeight w;
    for (auto it = p.word.rbegin(); it != p.word.rend(); ++it) w = reflect(*it, w);
    CHECK(w == p.weight);
  }
}

TEST_CASE("minimal coset representatives of low length") {
  auto w1s = enumerate_w1s(3);
  std::set<std::string> by_len[4];
  for (const auto& p : w1s) by_len[p.length].insert(word_to_string(p.word));
  CHECK(by_len[0] == std::set<std::string>{"1"});
  CHECK(by_len[1] == std::set<std::string>{"r0"});
  CHECK(by_len[2] == std::set<std::string>{"r0r1", "r0r2"});
  CHECK(by_len[3] == std::set<std::string>{"r0r1r2", "r0r2r1"});
}

TEST_CASE("homology rows up to length 3") {
  auto rows = garland_lepowsky(3);
  REQUIRE(rows.size() == 6);
  auto is = [](const GLRow& r, unsigned j, int m1, int m2, int d) {
    return r.length == j && r.m1 == m1 && r.m2 == m2 && r.delta_degree == d;
  };
  CHECK(is(rows[0], 0, 0, 0, 0));
  CHECK(is(rows[1], 1, 1, 1, 1));
  CHECK(is(rows[2], 2, 1, 2, 2));
  CHECK(is(rows[3], 2, 2, 1, 2));
  CHECK(is(rows[4], 3, 2, 3, 4));
  CHECK(is(rows[5], 3, 3, 2, 4));
  for (const auto& r : garland_lepowsky(8)) {
    CHECK(2 * r.m1 - r.m2 >= 0);
    CHECK(2 * r.m2 - r.m1 >= 0);
  }
}

TEST_CASE("distinct modulo delta") {
  CHECK(check_distinct_mod_delta(0).passed);
  CHECK(check_distinct_mod_delta(0).elements == 1);
  CHECK(check_distinct_mod_delta(3).passed);
  auto r = check_distinct_mod_delta(8);
  CHECK(r.passed);
  CHECK(r.elements == 1 + 3 * 36);
}
