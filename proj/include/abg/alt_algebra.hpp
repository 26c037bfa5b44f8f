#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <unordered_map>
#include <vector>

#include "abg/monomial.hpp"
#include "abg/types.hpp"

namespace abg {

/// Homogeneous element of A(D): coordinates in the chosen basis of A(D)_degree.
struct AlgElement {
  int degree = 1;
  RatVec coords;

  bool is_zero() const { return coords.empty(); }

  AlgElement& operator+=(const AlgElement& o);
  AlgElement& operator-=(const AlgElement& o);
  friend AlgElement operator+(AlgElement a, const AlgElement& b) { return a += b; }
  friend AlgElement operator-(AlgElement a, const AlgElement& b) { return a -= b; }
  friend AlgElement operator*(const Rat& s, AlgElement a) {
    a.coords *= s;
    return a;
  }
  AlgElement operator-() const { return {degree, -coords}; }
  friend bool operator==(const AlgElement& a, const AlgElement& b) {
    return a.degree == b.degree && a.coords == b.coords;
  }
};

/// A(D)_n presented as magma monomials modulo the degree-n part of the
/// T-ideal of the linearized alternative laws.
class GradedComponent {
 public:
  unsigned generators() const { return generators_; }
  unsigned degree() const { return degree_; }

  /// Magma monomials of degree n in canonical order.
  const std::vector<Monomial>& magma() const { return magma_; }
  std::uint32_t magma_index(const Monomial& m) const;

  /// Magma indices of the basis monomials, ascending.
  const std::vector<std::uint32_t>& basis() const { return basis_; }
  const Monomial& basis_monomial(std::uint32_t pos) const { return magma_[basis_[pos]]; }
  std::size_t dim() const { return basis_.size(); }
  std::size_t relation_rank() const { return magma_.size() - basis_.size(); }

  /// Normal form of a magma monomial, in basis coordinates.
  const RatVec& normal_form(std::uint32_t magma_idx) const { return normal_forms_[magma_idx]; }
  bool is_basis(std::uint32_t magma_idx) const { return basis_pos_[magma_idx] >= 0; }

  /// Dimensions refined by letter counts.
  std::map<std::vector<unsigned>, std::size_t> multigraded_dims() const;

 private:
  friend class FreeAlternativeAlgebra;
  friend std::optional<GradedComponent> load_component(const std::filesystem::path&, unsigned, unsigned);
  friend void save_component(const GradedComponent&, const std::filesystem::path&);

  void index_magma();

  unsigned generators_ = 0;
  unsigned degree_ = 0;
  std::vector<Monomial> magma_;
  std::unordered_map<Monomial, std::uint32_t, MonomialHash> magma_lookup_;
  std::vector<std::uint32_t> basis_;
  std::vector<std::int64_t> basis_pos_;
  std::vector<RatVec> normal_forms_;
};

/// Cache file format tag; files with any other tag are refused.
inline constexpr const char* kComponentCacheTag = "abg-alt-component-v1";

/// Path of the cache file for (D, n) inside dir.
std::filesystem::path component_cache_path(const std::filesystem::path& dir, unsigned generators, unsigned degree);
/// Loads a cached component. Returns nullopt when the file is absent; throws
/// std::runtime_error on a version tag mismatch or malformed content.
std::optional<GradedComponent> load_component(const std::filesystem::path& file, unsigned generators, unsigned degree);
void save_component(const GradedComponent& c, const std::filesystem::path& file);

struct AlgebraOptions {
  std::uint64_t magma_cap = 200000;
  std::optional<std::filesystem::path> cache_dir;
};

/// The free alternative algebra A(D), built degree by degree on demand.
class FreeAlternativeAlgebra {
 public:
  explicit FreeAlternativeAlgebra(unsigned generators, AlgebraOptions options = {});

  unsigned generators() const { return generators_; }
  const AlgebraOptions& options() const { return options_; }

  /// Builds (or loads) A(D)_n and every lower degree. Throws ResourceLimit
  /// when the magma dimension exceeds the cap.
  const GradedComponent& component(unsigned degree) const;
  std::size_t dim(unsigned degree) const { return component(degree).dim(); }

  AlgElement generator(unsigned index) const;
  AlgElement basis_element(unsigned degree, std::uint32_t pos) const;
  AlgElement zero(unsigned degree) const { return {static_cast<int>(degree), {}}; }

  /// Normal form of a combination of degree-n magma monomials (indices into magma()).
  AlgElement reduce(unsigned degree, const RatVec& raw) const;
  /// Normal form of a combination of arbitrary monomials; all must have the given degree.
  AlgElement reduce_monomials(unsigned degree, const std::vector<std::pair<Monomial, Rat>>& raw) const;

  AlgElement multiply(const AlgElement& u, const AlgElement& v) const;
  /// (ab)c - a(bc)
  AlgElement associator(const AlgElement& a, const AlgElement& b, const AlgElement& c) const;
  /// ab - ba
  AlgElement commutator(const AlgElement& a, const AlgElement& b) const;

  /// Product of two basis elements (cached).
  const RatVec& basis_product(unsigned p, std::uint32_t i, unsigned q, std::uint32_t j) const;

 private:
  std::unique_ptr<GradedComponent> build(unsigned degree) const;

  unsigned generators_;
  AlgebraOptions options_;
  mutable std::recursive_mutex mutex_;
  mutable std::vector<std::unique_ptr<GradedComponent>> components_;
  mutable std::unordered_map<std::uint64_t, RatVec> product_cache_;
};

}  // namespace abg
