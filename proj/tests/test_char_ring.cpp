#include <random>

#include "abg/char_ring.hpp"
#include "doctest.h"

using namespace abg;

namespace {

// Orbit sets written out by hand, in root coordinates.
using Set = std::vector<Weight>;
const Set kD0{{1, 0}, {0, 1}, {1, 1}, {-1, 0}, {0, -1}, {-1, -1}};
const Set kD1{{2, 1}, {-1, 1}, {-1, -2}};
const Set kD2{{1, 2}, {1, -1}, {-2, -1}};
const Set kD3{{3, 2}, {3, 1}, {-1, 2}, {-1, -3}, {-2, 1}, {-2, -3}};
const Set kD4{{2, 3}, {2, -1}, {1, -2}, {1, 3}, {-3, -1}, {-3, -2}};

SymLaurent sum(const Set& s, int k = 1) {
  SymLaurent f;
  for (auto [p, q] : s) f.add_term(k * p, k * q, 1);
  return f;
}
SymLaurent sum(const Set& a, const Set& b) { return sum(a) + sum(b); }
SymLaurent c(long v) { return SymLaurent::constant(v); }
SymLaurent operator*(long k, const SymLaurent& f) { return f * Int(k); }

Int choose(long n, unsigned k) { return binomial(Int(n), k); }

}  // namespace

TEST_CASE("orbit fixtures are S3 orbits") {
  CHECK(sum(kD0) == SymLaurent::orbit_sum(1, 1));
  CHECK(sum(kD1) == SymLaurent::orbit_sum(2, 1));
  CHECK(sum(kD2) == SymLaurent::orbit_sum(1, 2));
  CHECK(sum(kD3) == SymLaurent::orbit_sum(3, 2));
  CHECK(sum(kD4) == SymLaurent::orbit_sum(2, 3));
  for (const auto* s : {&kD0, &kD1, &kD2, &kD3, &kD4}) CHECK(sum(*s).is_symmetric());
}

TEST_CASE("irreducible characters match the tabulated expansions") {
  CHECK(ch_irr(0, 0) == c(1));
  CHECK(ch_irr(1, 1) == sum(kD0) + c(2));
  CHECK(ch_irr(2, 1) == sum(kD1) + sum(kD0) + c(1));
  CHECK(ch_irr(1, 2) == sum(kD2) + sum(kD0) + c(1));
  CHECK(ch_irr(2, 2) == sum(kD0, 2) + sum(kD1, kD2) + 2 * sum(kD0) + c(3));
  CHECK(ch_irr(3, 2) == sum(kD3) + sum(kD0, 2) + sum(kD2) + 2 * sum(kD1) + 2 * sum(kD0) + c(2));
  CHECK(ch_irr(2, 3) == sum(kD4) + sum(kD0, 2) + sum(kD1) + 2 * sum(kD2) + 2 * sum(kD0) + c(2));
  CHECK(ch_irr(3, 3) ==
        sum(kD0, 3) + sum(kD3, kD4) + 2 * sum(kD0, 2) + 2 * sum(kD1, kD2) + 3 * sum(kD0) + c(4));
  std::vector<std::pair<Weight, long>> dims{{{1, 1}, 8}, {{2, 1}, 10}, {{1, 2}, 10}, {{2, 2}, 27},
                                            {{3, 2}, 35}, {{2, 3}, 35}, {{3, 3}, 64}};
  for (auto [w, d] : dims) CHECK(ch_irr(w.first, w.second).eval_one() == d);
}

TEST_CASE("Weyl dimension formula agrees for many weights") {
  for (int m1 = 0; m1 <= 6; ++m1)
    for (int m2 = 0; m2 <= 6; ++m2) {
      if (!is_dominant(m1, m2)) {
        CHECK_THROWS_AS(ch_irr(m1, m2), std::domain_error);
        continue;
      }
      auto ch = ch_irr(m1, m2);
      CHECK(ch.is_symmetric());
      CHECK(ch.eval_one() == weyl_dimension(m1, m2));
      CHECK(ch.coeff(m1, m2) == 1);
    }
}

TEST_CASE("fundamental weight conversion") {
  CHECK(SymLaurent::from_fundamental(1, 1) == Weight{1, 1});
  CHECK(SymLaurent::from_fundamental(3, 0) == Weight{2, 1});
  CHECK_THROWS_AS(SymLaurent::from_fundamental(1, 0), std::domain_error);
}

TEST_CASE("decompose") {
  CHECK(decompose(ch_irr(1, 1)) == std::vector<Isotypic>{{1, 1, 1}});
  auto sq = decompose(ch_irr(1, 1) * ch_irr(1, 1));
  CHECK(sq == std::vector<Isotypic>{{2, 2, 1}, {2, 1, 1}, {1, 2, 1}, {1, 1, 2}, {0, 0, 1}});
  CHECK(decompose(sum(kD0)) == std::vector<Isotypic>{{1, 1, 1}, {0, 0, -2}});
  CHECK(decompose(SymLaurent{}).empty());
  CHECK_THROWS_AS(decompose(SymLaurent::monomial(1, 0)), std::invalid_argument);
  CHECK(multiplicity(ch_irr(1, 1) * ch_irr(1, 1), 1, 1) == 2);
}

TEST_CASE("decompose round trip on random virtual characters") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> coeff(-4, 4), pick(0, 6);
  for (int t = 0; t < 60; ++t) {
    SymLaurent f;
    for (int k = 0; k < 4; ++k) {
      int p = pick(rng), q = pick(rng);
      f += SymLaurent::orbit_sum(p - 3, q - 3) * Int(coeff(rng));
    }
    auto parts = decompose(f);
    CHECK(reconstruct(parts) == f);
    for (const auto& part : parts) CHECK(part.mult != 0);
  }
}

TEST_CASE("exact division rejects remainders") {
  auto d = SymLaurent::monomial(0, 0) - SymLaurent::monomial(1, 0);
  auto f = d * (SymLaurent::monomial(2, 1, 3) + c(1));
  CHECK(f.exact_div(d) == SymLaurent::monomial(2, 1, 3) + c(1));
  CHECK_THROWS_AS((f + c(1)).exact_div(d), std::domain_error);
}

TEST_CASE("lambda operation") {
  CharSeries x(4);
  x[1] = c(1);
  auto l = lambda_op(x);
  CHECK(l[0] == c(1));
  CHECK(l[1] == c(-1));
  CHECK(l[2].is_zero());
  x[1] = c(-1);
  l = lambda_op(x);
  for (unsigned n = 0; n <= 4; ++n) CHECK(l[n] == c(1));

  CharSeries y(3);
  y[1] = ch_irr(1, 1) * Int(3) + c(2);
  CHECK(lambda_op(y)[1] == -(ch_irr(1, 1) * Int(3) + c(2)));

  CharSeries bad = CharSeries::one(2);
  CHECK_THROWS_AS(lambda_op(bad), std::invalid_argument);
}

TEST_CASE("lambda is a homomorphism") {
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<int> coeff(-3, 3), pick(-2, 2);
  for (int t = 0; t < 20; ++t) {
    CharSeries x(4), y(4);
    for (unsigned n = 1; n <= 4; ++n) {
      x[n].add_term(pick(rng), pick(rng), coeff(rng));
      x[n].add_term(pick(rng), pick(rng), coeff(rng));
      y[n].add_term(pick(rng), pick(rng), coeff(rng));
    }
    CHECK(lambda_op(x + y) == lambda_op(x) * lambda_op(y));
  }
}

TEST_CASE("phi equals lambda of the dimension series") {
  DimSeriesPair ab{{2, 4, 8, 16}, {0, 1, 4, 11}};
  CharSeries x(4);
  for (unsigned n = 1; n <= 4; ++n) x[n] = ch_irr(1, 1) * ab.a[n - 1] + SymLaurent::constant(ab.b[n - 1]);
  CHECK(phi(ab, 4) == lambda_op(x));
}

TEST_CASE("two-generator product expansion") {
  DimSeriesPair ab{{2, 4, 8}, {0, 1, 4}};
  auto f = phi(ab, 3);
  CHECK(f[0] == c(1));
  CHECK(f[1] == -2 * (sum(kD0) + c(2)));
  CHECK(f[2] == sum(kD0, 2) + 4 * sum(kD1, kD2) + 8 * sum(kD0) + c(9));
  CHECK(f[3] == -(2 * sum(kD3, kD4) + 4 * sum(kD0, 2) + 4 * sum(kD1, kD2) + 4 * sum(kD0) + c(4)));
  CHECK(f[2] == ch_irr(2, 2) + (ch_irr(2, 1) + ch_irr(1, 2)) * Int(3));
  CHECK(f[3] == (ch_irr(2, 1) + ch_irr(1, 2)) * Int(2) - (ch_irr(2, 3) + ch_irr(3, 2)) * Int(2));
  auto chk = check_conjecture(f, 2);
  CHECK(chk.invariant_ok);
  CHECK(chk.adjoint_ok);
}

TEST_CASE("general D expansion through z^3") {
  for (long D = 3; D <= 6; ++D) {
    CAPTURE(D);
    Int a1 = D, a2 = D * D, a3 = Int(D * D * D) + choose(D, 3);
    Int b1 = 0, b2 = choose(D, 2), b3 = Int(D * D * D - D * D) - 2 * choose(D, 3);
    auto f = phi({{a1, a2, a3}, {b1, b2, b3}}, 3);
    CHECK(f[1] == ch_irr(1, 1) * Int(-D));
    CHECK(f[2] == ch_irr(2, 2) * choose(D, 2) + (ch_irr(2, 1) + ch_irr(1, 2)) * choose(D + 1, 2));
    Int third = Int(D * D * D - D) / 3;
    CHECK(f[3] == -(ch_irr(3, 3) * choose(D, 3) +
                    (ch_irr(3, 2) + ch_irr(2, 3) - ch_irr(2, 1) - ch_irr(1, 2)) * third));
    auto chk = check_conjecture(f, static_cast<unsigned>(D));
    CHECK(chk.invariant_ok);
    CHECK(chk.adjoint_ok);
  }
  // Three generators, written out.
  auto f = phi({{3, 9, 28}, {0, 3, 16}}, 3);
  CHECK(f[2] == (ch_irr(2, 2) + (ch_irr(2, 1) + ch_irr(1, 2)) * Int(2)) * Int(3));
  CHECK(f[3] == -(ch_irr(3, 3) + (ch_irr(3, 2) + ch_irr(2, 3) - ch_irr(2, 1) - ch_irr(1, 2)) * Int(8)));
}

TEST_CASE("solver") {
  auto one = solve_conjecture(1, 8);
  for (unsigned n = 0; n < 8; ++n) {
    CHECK(one.a[n] == 1);
    CHECK(one.b[n] == 0);
  }
  auto two = solve_conjecture(2, 3);
  CHECK(two.a == std::vector<Int>{2, 4, 8});
  CHECK(two.b == std::vector<Int>{0, 1, 4});
  for (long D = 1; D <= 5; ++D) {
    auto s = solve_conjecture(static_cast<unsigned>(D), 3);
    CHECK(s.a[0] == D);
    CHECK(s.a[1] == D * D);
    CHECK(s.a[2] == Int(D * D * D) + choose(D, 3));
    CHECK(s.b[0] == 0);
    CHECK(s.b[1] == choose(D, 2));
    CHECK(s.b[2] == Int(D * D * D - D * D) - 2 * choose(D, 3));
  }
  for (unsigned D = 0; D <= 5; ++D)
    for (unsigned N = 1; N <= 6; ++N) {
      auto s = solve_conjecture(D, N);
      auto chk = check_conjecture(phi(s, N), D);
      CHECK(chk.invariant_ok);
      CHECK(chk.adjoint_ok);
    }
}
