#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "abg/alt_algebra.hpp"

namespace abg {

/// Outcome of one randomized or exhaustive identity suite.
struct CheckResult {
  std::string name;
  std::size_t trials = 0;
  std::size_t failures = 0;
  std::string witness;  // first failing input, if any
  std::string note;

  bool passed() const { return failures == 0; }
  void record(bool ok, const std::string& description) {
    ++trials;
    if (!ok && failures++ == 0) witness = description;
  }
};

using Rng = std::mt19937_64;

/// k positive degrees with sum at most max_total (requires max_total >= k).
std::vector<unsigned> random_degrees(unsigned k, unsigned max_total, Rng& rng);

/// Random homogeneous element: a few basis elements with small nonzero integer
/// coefficients. Never zero when the component is nonzero.
AlgElement random_element(const FreeAlternativeAlgebra& algebra, unsigned degree, Rng& rng);

std::string describe(const FreeAlternativeAlgebra& algebra, const AlgElement& a);

/// Left and right alternativity, flexibility and skew-symmetry of the associator on
/// random homogeneous inputs; products never exceed degree_bound.
std::vector<CheckResult> associator_checks(const FreeAlternativeAlgebra& algebra, unsigned degree_bound,
                                           std::size_t trials, Rng& rng);
/// (a, b, c) = 0 on all basis triples of total degree ≤ max_total.
CheckResult associativity_check(const FreeAlternativeAlgebra& algebra, unsigned max_total);

}  // namespace abg
