#include <map>

#include "abg/derivations.hpp"
#include "doctest.h"
#include "oracle.hpp"

using namespace abg;

namespace {

Int choose(unsigned n, unsigned k) { return binomial(Int(n), k); }

// dim B_n computed in the full tensor square: (A ⊗ A)_n modulo the symmetric
// tensors and the cyclic generators written as ordered tensors.
std::size_t tensor_oracle_dim_b(const FreeAlternativeAlgebra& A, unsigned n) {
  std::map<std::pair<unsigned, unsigned>, std::size_t> offset;
  std::size_t width = 0;
  for (unsigned p = 1; p < n; ++p) {
    offset[{p, n - p}] = width;
    width += A.dim(p) * A.dim(n - p);
  }
  auto idx = [&](unsigned p, std::uint32_t i, std::uint32_t j) { return offset[{p, n - p}] + i * A.dim(n - p) + j; };
  auto add_wedge = [&](oracle::Row& row, const AlgElement& u, const AlgElement& v) {
    for (const auto& [i, x] : u.coords)
      for (const auto& [j, y] : v.coords) row[idx(u.degree, i, j)] += x * y;
  };
  std::vector<oracle::Row> rows;
  for (unsigned p = 1; p < n; ++p)
    for (std::uint32_t i = 0; i < A.dim(p); ++i)
      for (std::uint32_t j = 0; j < A.dim(n - p); ++j) {
        oracle::Row r(width);
        r[idx(p, i, j)] += 1;
        r[idx(n - p, j, i)] += 1;
        rows.push_back(std::move(r));
      }
  for (unsigned p = 1; p + 2 <= n; ++p)
    for (unsigned q = 1; p + q < n; ++q) {
      unsigned s = n - p - q;
      for (std::uint32_t i = 0; i < A.dim(p); ++i)
        for (std::uint32_t j = 0; j < A.dim(q); ++j)
          for (std::uint32_t k = 0; k < A.dim(s); ++k) {
            auto a = A.basis_element(p, i), b = A.basis_element(q, j), c = A.basis_element(s, k);
            oracle::Row r(width);
            add_wedge(r, A.multiply(a, b), c);
            add_wedge(r, A.multiply(b, c), a);
            add_wedge(r, A.multiply(c, a), b);
            rows.push_back(std::move(r));
          }
    }
  return width - oracle::dense_rank(rows);
}

}  // namespace

TEST_CASE("B dimensions in low degree") {
  for (unsigned D = 1; D <= 5; ++D) {
    CAPTURE(D);
    FreeAlternativeAlgebra A(D);
    Derivations der(A);
    CHECK(der.dim_b(1) == 0);
    CHECK(Int(der.dim_b(2)) == choose(D, 2));
    CHECK(Int(der.dim_b(3)) == Int(D * D * D - D * D) - 2 * choose(D, 3));
  }
  FreeAlternativeAlgebra A2(2);
  Derivations d2(A2);
  CHECK(d2.dim_b(2) == 1);
  CHECK(d2.dim_b(3) == 4);
}

TEST_CASE("one generator: B and Inner vanish") {
  FreeAlternativeAlgebra A(1);
  Derivations der(A);
  for (unsigned n = 1; n <= 8; ++n) CHECK(der.dim_b(n) == 0);
  for (unsigned n = 1; n <= 6; ++n) CHECK(der.dim_inner(n) == 0);
  auto x = A.generator(0);
  auto xx = A.multiply(x, x);
  CHECK(der.apply(x, xx, x).is_zero());
  CHECK(der.apply(xx, x, xx).is_zero());
}

TEST_CASE("tensor-square oracle agrees on B") {
  for (auto [D, n] : std::vector<std::pair<unsigned, unsigned>>{{2, 3}, {2, 4}, {2, 5}, {3, 3}, {3, 4}}) {
    CAPTURE(D);
    CAPTURE(n);
    FreeAlternativeAlgebra A(D);
    Derivations der(A);
    CHECK(der.dim_b(n) == tensor_oracle_dim_b(A, n));
  }
}

TEST_CASE("Inner dimensions are bounded by B") {
  FreeAlternativeAlgebra A2(2);
  Derivations d2(A2);
  CHECK(d2.dim_inner(2) == 1);
  for (unsigned D = 2; D <= 3; ++D) {
    FreeAlternativeAlgebra A(D);
    Derivations der(A);
    for (unsigned n = 1; n <= 4; ++n) {
      CAPTURE(D);
      CAPTURE(n);
      CHECK(der.dim_inner(n) <= der.dim_b(n));
    }
  }
}

TEST_CASE("wedge columns and reduction") {
  FreeAlternativeAlgebra A(2);
  Derivations der(A);
  const auto& B = der.b_space(2);
  CHECK(B.dim_lambda2() == 1);
  auto x1 = A.generator(0), x2 = A.generator(1);
  auto w = B.wedge(x1, x2);
  CHECK(B.wedge(x2, x1) == -w);
  CHECK(B.wedge(x1, x1).empty());
  CHECK(B.bracket_class(x1, x2) == -B.bracket_class(x2, x1));

  const auto& B4 = der.b_space(4);
  for (std::uint32_t k = 0; k < B4.dim(); ++k) {
    const auto& r = B4.representative(k);
    auto cls = B4.bracket_class(A.basis_element(r.p, r.i), A.basis_element(r.q, r.j));
    CHECK(cls == RatVec::unit(k));
  }
  // ab∧c + bc∧a + ca∧b has zero class.
  FreeAlternativeAlgebra A3(3);
  Derivations d3(A3);
  const auto& B3 = d3.b_space(4);
  auto a = A3.generator(0), b = A3.multiply(A3.generator(1), A3.generator(2)), c = A3.generator(2);
  RatVec g = B3.wedge(A3.multiply(a, b), c);
  g += B3.wedge(A3.multiply(b, c), a);
  g += B3.wedge(A3.multiply(c, a), b);
  CHECK(B3.reduce(g).empty());
}

TEST_CASE("D_{a,b} on small inputs") {
  FreeAlternativeAlgebra A(3);
  Derivations der(A);
  auto x1 = A.generator(0), x2 = A.generator(1), x3 = A.generator(2);
  CHECK(der.apply(x1, x1, x2).is_zero());
  CHECK(der.apply(x1, x2, x3) == der.apply_operator_form(x1, x2, x3));
  CHECK(!der.apply(x1, x2, x1).is_zero());
  // cyclic identity on generator triples
  DerivationTuple sum = der.tuple(A.multiply(x1, x2), x3);
  sum += der.tuple(A.multiply(x2, x3), x1);
  sum += der.tuple(A.multiply(x3, x1), x2);
  CHECK(sum.is_zero());
}

TEST_CASE("B to Inner kills every cyclic generator up to degree 5") {
  FreeAlternativeAlgebra A(2);
  Derivations der(A);
  for (unsigned n = 3; n <= 5; ++n)
    for (unsigned p = 1; p + 2 <= n; ++p)
      for (unsigned q = 1; p + q < n; ++q) {
        unsigned s = n - p - q;
        for (std::uint32_t i = 0; i < A.dim(p); ++i)
          for (std::uint32_t j = 0; j < A.dim(q); ++j)
            for (std::uint32_t k = 0; k < A.dim(s); ++k) {
              auto a = A.basis_element(p, i), b = A.basis_element(q, j), c = A.basis_element(s, k);
              DerivationTuple sum = der.tuple(A.multiply(a, b), c);
              sum += der.tuple(A.multiply(b, c), a);
              sum += der.tuple(A.multiply(c, a), b);
              REQUIRE(sum.is_zero());
            }
      }
}

TEST_CASE("identity suites pass") {
  for (unsigned D = 1; D <= 3; ++D) {
    FreeAlternativeAlgebra A(D);
    Derivations der(A);
    Rng rng(100 + D);
    for (const auto& r : check_inner_derivation_identities(der, 5, 100, rng)) {
      CAPTURE(D);
      CAPTURE(r.name);
      CAPTURE(r.witness);
      CHECK(r.trials == 100);
      CHECK(r.passed());
    }
  }
  FreeAlternativeAlgebra A(2);
  Derivations der(A);
  Rng rng(1);
  auto small = check_inner_derivation_identities(der, 4, 10, rng);
  CHECK(small[4].trials == 0);
  CHECK(!small[4].note.empty());
}
