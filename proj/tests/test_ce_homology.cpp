#include "abg/ce_homology.hpp"
#include "doctest.h"

#include <algorithm>

#include "abg/affine_weyl.hpp"

using namespace abg;

namespace {

struct Fixture {
  FreeAlternativeAlgebra A;
  Derivations der;
  AbgAlgebra g;
  explicit Fixture(unsigned D) : A(D), der(A), g(der) {}
};

// Brute force: every increasing r-subset of the generators of degree ≤ N.
std::map<Weight, Int> brute_dims(const ChainComplex& cc, unsigned r, unsigned N) {
  std::map<Weight, Int> out;
  std::vector<std::uint32_t> pool;
  for (std::uint32_t i = 0; i < cc.generators(); ++i)
    if (cc.degree_of(i) <= N) pool.push_back(i);
  std::vector<bool> pick(pool.size(), false);
  std::fill(pick.begin(), pick.begin() + std::min<std::size_t>(r, pool.size()), true);
  if (r > pool.size()) return out;
  do {
    unsigned deg = 0;
    Weight w{0, 0};
    for (std::size_t t = 0; t < pool.size(); ++t)
      if (pick[t]) {
        deg += cc.degree_of(pool[t]);
        w.first += cc.weight_of(pool[t]).first;
        w.second += cc.weight_of(pool[t]).second;
      }
    if (deg == N) out[w] += 1;
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return out;
}

std::vector<Isotypic> sorted(std::vector<Isotypic> v) {
  std::sort(v.begin(), v.end(), [](const Isotypic& a, const Isotypic& b) {
    return std::pair(a.m1, a.m2) < std::pair(b.m1, b.m2);
  });
  return v;
}

}  // namespace

TEST_CASE("chain dimensions") {
  Fixture f(1);
  ChainComplex cc(f.g, 4);
  for (unsigned N = 1; N <= 4; ++N)
    for (unsigned r = 1; r <= 3; ++r) {
      CAPTURE(N);
      CAPTURE(r);
      auto dims = cc.chain_dims(r, N);
      CHECK(dims == brute_dims(cc, r, N));
      std::map<Weight, Int> enumerated;
      for (const auto& b : cc.chain_space(r, N)) enumerated[b.weight] = static_cast<unsigned long>(b.words.size());
      CHECK(enumerated == dims);
    }
  Fixture f2(2);
  ChainComplex cc2(f2.g, 2);
  Int total = 0;
  for (const auto& [w, d] : cc2.chain_dims(2, 2)) total += d;
  CHECK(total == 120);  // Λ² of the 16-dimensional degree-1 piece
  CHECK(cc2.chain_dims(3, 2).empty());
  CHECK(cc2.chain_space(3, 2).empty());
  CHECK_THROWS_AS(cc2.chain_dims(1, 3), std::out_of_range);
}

TEST_CASE("differential in low arity") {
  Fixture f(2);
  ChainComplex cc(f.g, 3);
  // d on 1-chains is zero
  for (std::uint32_t i = 0; i < cc.generators(); ++i) CHECK(cc.apply_d_words({i}).empty());
  // d(x ∧ y) = [x, y]
  for (std::uint32_t i = 0; i < 16; ++i)
    for (std::uint32_t j = i + 1; j < 16; ++j) {
      auto d = cc.apply_d_words({i, j});
      const RatVec& br = f.g.bracket_basis(1, cc.local_of(i), 1, cc.local_of(j));
      std::map<Wedge, Rat> expect;
      for (const auto& [k, c] : br) expect[{cc.global_index(2, k)}] = c;
      CHECK(d == expect);
    }
}

TEST_CASE("d squared vanishes and blocks are weight-homogeneous") {
  Fixture f(2);
  ChainComplex cc(f.g, 4);
  for (unsigned N = 3; N <= 4; ++N)
    for (unsigned r = 3; r <= N; ++r)
      for (const auto& b : cc.chain_space(r, N))
        for (const auto& word : b.words) {
          std::map<Wedge, Rat> twice;
          for (const auto& [mid, c] : cc.apply_d_words(word)) {
            Weight w{0, 0};
            for (auto x : mid) w = {w.first + cc.weight_of(x).first, w.second + cc.weight_of(x).second};
            CHECK(w == b.weight);
            for (const auto& [low, e] : cc.apply_d_words(mid)) twice[low] += c * e;
          }
          for (const auto& [low, v] : twice) CHECK(v == 0);
        }
}

TEST_CASE("D = 1 reproduces the affine Weyl group rows") {
  Fixture f(1);
  HomologyOptions opt;
  opt.r_max = 3;
  opt.n_max = 4;
  auto rep = homology(f.g, opt);
  CHECK(rep.skipped.empty());
  CHECK(rep.dd_ok);
  CHECK(rep.dd_blocks > 0);
  CHECK(rep.euler_ok);
  CHECK(rep.euler_blocks > 0);
  CHECK(rep.symmetric_ok);
  auto cmp = compare_with_rows(rep, 4);
  for (const auto& m : cmp.mismatches) MESSAGE(m);
  CHECK(cmp.passed);

  const auto* h0 = rep.find(0, 0);
  REQUIRE(h0);
  CHECK(h0->dim == 1);
  const auto* h1 = rep.find(1, 1);
  REQUIRE(h1);
  CHECK(sorted(h1->isotypic) == std::vector<Isotypic>{{1, 1, Int(1)}});
  const auto* h2 = rep.find(2, 2);
  REQUIRE(h2);
  CHECK(sorted(h2->isotypic) == std::vector<Isotypic>{{1, 2, Int(1)}, {2, 1, Int(1)}});
  CHECK(h2->dim == 20);
  const auto* h3 = rep.find(3, 4);
  REQUIRE(h3);
  CHECK(sorted(h3->isotypic) == std::vector<Isotypic>{{2, 3, Int(1)}, {3, 2, Int(1)}});
  for (const auto& d : rep.degrees)
    if (!(d.r == 0 && d.N == 0) && !(d.r == 1 && d.N == 1) && !(d.r == 2 && d.N == 2) && !(d.r == 3 && d.N == 4)) {
      CAPTURE(d.r);
      CAPTURE(d.N);
      CHECK(d.dim == 0);
    }
}

TEST_CASE("H_1 in degree 1 is D copies of the adjoint") {
  for (unsigned D = 1; D <= 3; ++D) {
    Fixture f(D);
    HomologyOptions opt;
    opt.r_max = 1;
    opt.n_max = 1;
    auto rep = homology(f.g, opt);
    const auto* h1 = rep.find(1, 1);
    REQUIRE(h1);
    CHECK(h1->adjoint == D);
    CHECK(h1->isotypic.size() == 1);
  }
}

TEST_CASE("no invariants or adjoints in higher homology at D = 2") {
  Fixture f(2);
  HomologyOptions opt;
  opt.r_max = 3;
  opt.n_max = 4;
  auto rep = homology(f.g, opt);
  CHECK(rep.skipped.empty());
  CHECK(rep.dd_ok);
  CHECK(rep.euler_ok);
  CHECK(rep.symmetric_ok);
  for (const auto& d : rep.degrees) {
    CHECK(d.complete);
    if (d.r < 2) continue;
    CAPTURE(d.r);
    CAPTURE(d.N);
    CHECK(d.invariant == 0);
    CHECK(d.adjoint == 0);
  }
  CHECK(rep.verified_range().find("incomplete") == std::string::npos);
}

TEST_CASE("cap reports skipped blocks") {
  Fixture f(1);
  HomologyOptions opt;
  opt.r_max = 2;
  opt.n_max = 2;
  opt.cap = 3;
  auto rep = homology(f.g, opt);
  CHECK(!rep.skipped.empty());
  CHECK(rep.verified_range().find("incomplete") != std::string::npos);
  CHECK(!compare_with_rows(rep, 2).passed);
}
