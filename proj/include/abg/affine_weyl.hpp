#pragma once

#include <array>
#include <string>
#include <vector>

namespace abg {

/// The weight ρ + c0·α0 + c1·α1 + c2·α2 of affine A2.
struct AffineWeight {
  std::array<int, 3> c{0, 0, 0};

  /// Pairing values v_i = ⟨·, α_i^∨⟩ = 1 + Σ_j A_ij c_j.
  std::array<int, 3> pairing() const;
  friend bool operator==(const AffineWeight&, const AffineWeight&) = default;
  friend auto operator<=>(const AffineWeight&, const AffineWeight&) = default;
};

/// Generalized Cartan matrix of affine A2.
inline constexpr std::array<std::array<int, 3>, 3> kAffineCartan{{{2, -1, -1}, {-1, 2, -1}, {-1, -1, 2}}};

/// r_i(μ) = μ − ⟨μ, α_i^∨⟩ α_i.
AffineWeight reflect(int i, const AffineWeight& w);

/// An element w of the affine Weyl group, recorded through w(ρ).
struct OrbitPoint {
  AffineWeight weight;
  unsigned length = 0;
  /// Reduced word i_1 … i_l with w = r_{i_1} ⋯ r_{i_l}.
  std::vector<int> word;
};

/// All w with l(w) ≤ max_length, by breadth-first search on the ρ-orbit.
std::vector<OrbitPoint> enumerate_orbit(unsigned max_length);
/// Members of W¹_S (⟨w(ρ), α_1^∨⟩ > 0 and ⟨w(ρ), α_2^∨⟩ > 0) with l(w) ≤ max_length.
std::vector<OrbitPoint> enumerate_w1s(unsigned max_length);

/// Summand L(λ) of homology degree j, internal degree delta_degree.
struct GLRow {
  unsigned length = 0;
  int m1 = 0;
  int m2 = 0;
  int delta_degree = 0;
  std::vector<int> word;
};

/// Finite part and δ-degree of w(ρ) − ρ for each w ∈ W¹_S with l(w) ≤ max_length,
/// ordered by length, then m1.
std::vector<GLRow> garland_lepowsky(unsigned max_length);

struct DistinctReport {
  bool passed = true;
  std::size_t elements = 0;
  std::string witness;
};
/// Checks that w(ρ) − ρ are pairwise distinct modulo Zδ over all w with l(w) ≤ max_length.
DistinctReport check_distinct_mod_delta(unsigned max_length);

std::string word_to_string(const std::vector<int>& word);

}  // namespace abg
