#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <vector>

#include "abg/alt_algebra.hpp"
#include "abg/check.hpp"

namespace abg {

/// Basis element of the degree-n part of Λ²A: a_i ∧ b_j with a_i in the basis
/// of A_p, b_j in the basis of A_q, and either p > q or (p == q and i < j).
struct WedgePair {
  unsigned p = 0;
  std::uint32_t i = 0;
  unsigned q = 0;
  std::uint32_t j = 0;
};

/// B(A(D))_n = (Λ²A)_n / I(A)_n, echelonized.
class BElementSpace {
 public:
  unsigned generators() const { return generators_; }
  unsigned degree() const { return degree_; }

  std::size_t dim_lambda2() const { return columns_.size(); }
  std::size_t relation_rank() const { return columns_.size() - basis_.size(); }
  std::size_t dim() const { return basis_.size(); }

  const std::vector<WedgePair>& lambda2_basis() const { return columns_; }
  /// Representative wedge pair of the k-th basis element of B_n.
  const WedgePair& representative(std::uint32_t k) const { return columns_[basis_[k]]; }

  /// Column of a_i ∧ b_j in Λ²; sign is -1 when the stored orientation is b ∧ a,
  /// 0 when the wedge vanishes (a_i ∧ a_i).
  std::pair<std::uint32_t, int> column(unsigned p, std::uint32_t i, unsigned q, std::uint32_t j) const;

  /// u ∧ v in Λ² coordinates (u, v homogeneous with degree sum n).
  RatVec wedge(const AlgElement& u, const AlgElement& v) const;
  /// Class of a Λ² vector in B_n coordinates.
  RatVec reduce(const RatVec& lambda2) const;
  /// <u, v> in B_n coordinates.
  RatVec bracket_class(const AlgElement& u, const AlgElement& v) const { return reduce(wedge(u, v)); }

 private:
  friend class Derivations;

  unsigned generators_ = 0;
  unsigned degree_ = 0;
  std::vector<WedgePair> columns_;
  std::vector<std::uint32_t> block_offset_;  // by p
  std::vector<std::uint32_t> dims_;          // a_k for k < n
  std::vector<std::uint32_t> basis_;
  std::vector<RatVec> column_nf_;
};

/// A derivation of A(D) of degree shift n, stored as its values on x_1..x_D.
struct DerivationTuple {
  std::vector<AlgElement> images;
  bool is_zero() const;
  DerivationTuple& operator+=(const DerivationTuple& o);
  friend bool operator==(const DerivationTuple&, const DerivationTuple&) = default;
};

/// Inner derivations D_{a,b} of A(D) and the space B(A(D)).
class Derivations {
 public:
  explicit Derivations(const FreeAlternativeAlgebra& algebra) : algebra_(algebra) {}

  const FreeAlternativeAlgebra& algebra() const { return algebra_; }

  /// D_{a,b}(c) = [[a,b],c] + 3(a,c,b)
  AlgElement apply(const AlgElement& a, const AlgElement& b, const AlgElement& c) const;
  /// ([L_a,L_b] + [R_a,R_b] + [L_a,R_b])(c), the defining operator form.
  AlgElement apply_operator_form(const AlgElement& a, const AlgElement& b, const AlgElement& c) const;
  /// D_{a,b} applied through a B-element (sum of representative pairs).
  AlgElement apply_class(unsigned b_degree, const RatVec& b_coords, const AlgElement& c) const;

  DerivationTuple tuple(const AlgElement& a, const AlgElement& b) const;

  const BElementSpace& b_space(unsigned degree) const;
  std::size_t dim_b(unsigned degree) const { return b_space(degree).dim(); }
  /// dim Inner(A(D))_n: rank of the generator-value tuples of all D_{a,b} with deg a + deg b = n.
  std::size_t dim_inner(unsigned degree) const;

 private:
  std::unique_ptr<BElementSpace> build_b_space(unsigned degree) const;

  const FreeAlternativeAlgebra& algebra_;
  mutable std::recursive_mutex mutex_;
  mutable std::vector<std::unique_ptr<BElementSpace>> spaces_;
};

/// Randomized checks of the inner-derivation identities: operator form,
/// derivation property, skew-symmetry, the cyclic identity and the
/// commutator identity. The largest A-degree touched never exceeds degree_bound.
std::vector<CheckResult> check_inner_derivation_identities(const Derivations& der, unsigned degree_bound, std::size_t trials, Rng& rng);

}  // namespace abg
