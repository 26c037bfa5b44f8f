#include "abg/check.hpp"

#include <stdexcept>

namespace abg {

std::vector<unsigned> random_degrees(unsigned k, unsigned max_total, Rng& rng) {
  if (max_total < k) throw std::invalid_argument("degree budget too small");
  std::uniform_int_distribution<unsigned> total_dist(k, max_total);
  unsigned total = total_dist(rng);
  std::vector<unsigned> degrees(k, 1);
  std::uniform_int_distribution<unsigned> slot(0, k - 1);
  for (unsigned extra = total - k; extra > 0; --extra) degrees[slot(rng)]++;
  return degrees;
}

AlgElement random_element(const FreeAlternativeAlgebra& algebra, unsigned degree, Rng& rng) {
  std::size_t dim = algebra.dim(degree);
  AlgElement a = algebra.zero(degree);
  if (dim == 0) return a;
  std::uniform_int_distribution<std::size_t> pick(0, dim - 1);
  std::uniform_int_distribution<int> terms(1, 3);
  std::uniform_int_distribution<int> coeff(-3, 3);
  int count = terms(rng);
  while (a.is_zero()) {
    for (int t = 0; t < count; ++t) {
      int c = 0;
      while (c == 0) c = coeff(rng);
      a.coords.add_scaled(RatVec::unit(static_cast<std::uint32_t>(pick(rng))), Rat(c));
    }
  }
  return a;
}

std::string describe(const FreeAlternativeAlgebra& algebra, const AlgElement& a) {
  if (a.is_zero()) return "0";
  const auto& comp = algebra.component(static_cast<unsigned>(a.degree));
  std::string out;
  for (const auto& [pos, x] : a.coords) {
    if (!out.empty()) out += " + ";
    out += "(" + x.get_str() + ")" + comp.basis_monomial(pos).to_string();
  }
  return out;
}

std::vector<CheckResult> associator_checks(const FreeAlternativeAlgebra& algebra, unsigned degree_bound,
                                           std::size_t trials, Rng& rng) {
  if (degree_bound < 3) throw std::invalid_argument("associator checks need degree bound >= 3");
  CheckResult left, right, flex, skew;
  left.name = "left alternative (a,a,b) = 0";
  right.name = "right alternative (a,b,b) = 0";
  flex.name = "flexible (a,b,a) = 0";
  skew.name = "associator skew (a,b,c) = -(b,a,c)";
  // degrees (p, q) with 2p + q <= degree_bound
  auto pair = [&] {
    std::uniform_int_distribution<unsigned> pd(1, (degree_bound - 1) / 2);
    unsigned p = pd(rng);
    std::uniform_int_distribution<unsigned> qd(1, degree_bound - 2 * p);
    return std::pair{p, qd(rng)};
  };
  for (std::size_t t = 0; t < trials; ++t) {
    auto [p, q] = pair();
    auto a = random_element(algebra, p, rng), b = random_element(algebra, q, rng);
    auto tag = [&] { return "a=" + describe(algebra, a) + ", b=" + describe(algebra, b); };
    left.record(algebra.associator(a, a, b).is_zero(), tag());
    right.record(algebra.associator(b, a, a).is_zero(), tag());
    flex.record(algebra.associator(a, b, a).is_zero(), tag());
    auto d = random_degrees(3, degree_bound, rng);
    auto x = random_element(algebra, d[0], rng), y = random_element(algebra, d[1], rng),
         z = random_element(algebra, d[2], rng);
    skew.record((algebra.associator(x, y, z) + algebra.associator(y, x, z)).is_zero(),
                describe(algebra, x) + " | " + describe(algebra, y) + " | " + describe(algebra, z));
  }
  return {left, right, flex, skew};
}

CheckResult associativity_check(const FreeAlternativeAlgebra& algebra, unsigned max_total) {
  CheckResult r;
  r.name = "associativity on basis triples";
  for (unsigned p = 1; p + 2 <= max_total; ++p)
    for (unsigned q = 1; p + q + 1 <= max_total; ++q)
      for (unsigned s = 1; p + q + s <= max_total; ++s)
        for (std::uint32_t i = 0; i < algebra.dim(p); ++i)
          for (std::uint32_t j = 0; j < algebra.dim(q); ++j)
            for (std::uint32_t k = 0; k < algebra.dim(s); ++k) {
              auto a = algebra.basis_element(p, i), b = algebra.basis_element(q, j), c = algebra.basis_element(s, k);
              r.record(algebra.associator(a, b, c).is_zero(),
                       describe(algebra, a) + " | " + describe(algebra, b) + " | " + describe(algebra, c));
            }
  return r;
}

}  // namespace abg
