#pragma once

#include <array>
#include <map>
#include <mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "abg/char_ring.hpp"
#include "abg/check.hpp"
#include "abg/derivations.hpp"

namespace abg {

/// 3×3 rational matrix, row-major.
struct Mat3 {
  std::array<Rat, 9> m{};

  static Mat3 unit(int i, int j);  // 1-based e_ij
  static Mat3 identity();
  Rat& operator()(int i, int j) { return m[3 * (i - 1) + (j - 1)]; }
  const Rat& operator()(int i, int j) const { return m[3 * (i - 1) + (j - 1)]; }
  Rat trace() const { return m[0] + m[4] + m[8]; }

  friend Mat3 operator+(const Mat3& a, const Mat3& b);
  friend Mat3 operator-(const Mat3& a, const Mat3& b);
  friend Mat3 operator*(const Mat3& a, const Mat3& b);
  friend Mat3 operator*(const Rat& s, const Mat3& a);
  friend bool operator==(const Mat3&, const Mat3&) = default;
};

inline Mat3 commutator(const Mat3& a, const Mat3& b) { return a * b - b * a; }

/// The fixed sl3 basis e12, e13, e21, e23, e31, e32, h1 = e11 − e22, h2 = e22 − e33.
inline constexpr int kSl3Dim = 8;
enum Sl3Index : int { E12 = 0, E13, E21, E23, E31, E32, H1, H2 };
const Mat3& sl3_basis(int s);
const char* sl3_name(int s);
/// Coordinates of a traceless matrix; throws std::invalid_argument otherwise.
std::array<Rat, kSl3Dim> sl3_coords(const Mat3& x);
/// Root-lattice weight of a basis element under ad(h).
Weight sl3_weight(int s);

/// Homogeneous pieces of ABG(A(D)). The degree-n piece has coordinates laid out as
/// [B_n basis | e12⊗A_n | e13⊗A_n | … | h2⊗A_n]; a tensor coordinate b_n + s·a_n + i
/// stands for sl3_basis(s) ⊗ (i-th basis element of A_n).
using AbgElement = std::map<unsigned, RatVec>;

struct AbgBasisElement {
  bool is_b = false;
  std::uint32_t b_index = 0;  // when is_b
  int sl3 = 0;                // otherwise
  std::uint32_t a_index = 0;
};

class AbgAlgebra {
 public:
  explicit AbgAlgebra(const Derivations& der) : der_(der) {}

  const Derivations& derivations() const { return der_; }
  const FreeAlternativeAlgebra& algebra() const { return der_.algebra(); }

  std::size_t dim_b(unsigned n) const { return n < 2 ? 0 : der_.dim_b(n); }
  std::size_t dim(unsigned n) const { return dim_b(n) + kSl3Dim * algebra().dim(n); }
  AbgBasisElement decode(unsigned n, std::uint32_t k) const;
  std::uint32_t tensor_index(unsigned n, int s, std::uint32_t i) const;
  Weight weight(unsigned n, std::uint32_t k) const;
  std::string describe(unsigned n, std::uint32_t k) const;

  /// x ⊗ a for a homogeneous a.
  AbgElement tensor(const Mat3& x, const AlgElement& a) const;
  /// ⟨a, b⟩ for homogeneous a, b.
  AbgElement pairing(const AlgElement& a, const AlgElement& b) const;
  /// Tensor component at sl3 basis index s in degree n.
  AlgElement tensor_part(const AbgElement& X, unsigned n, int s) const;

  /// Bracket of two basis elements, in degree n1 + n2 coordinates (cached).
  const RatVec& bracket_basis(unsigned n1, std::uint32_t k1, unsigned n2, std::uint32_t k2) const;
  AbgElement bracket(const AbgElement& X, const AbgElement& Y) const;

  /// x.X: [x, y] ⊗ a on tensors, zero on B.
  AbgElement sl3_action(const Mat3& x, const AbgElement& X) const;

  /// Weight multiplicities of the degree-n piece, read off the action of h1, h2.
  std::map<Weight, std::size_t> weight_spaces(unsigned n) const;

  /// Product recovered as the e13-coefficient of [e12 ⊗ a, e23 ⊗ b].
  AlgElement bm_product(const AlgElement& a, const AlgElement& b) const;

 private:
  RatVec compute_bracket(unsigned n1, std::uint32_t k1, unsigned n2, std::uint32_t k2) const;
  void add_tensor(RatVec& out, unsigned n, const Mat3& x, const AlgElement& a, const Rat& scale) const;

  const Derivations& der_;
  mutable std::mutex mutex_;
  mutable std::unordered_map<std::uint64_t, RatVec> cache_;
};

bool is_zero(const AbgElement& X);
AbgElement add(const AbgElement& X, const AbgElement& Y, const Rat& scale = 1);

/// Random homogeneous ABG element of degree n with a few basis terms.
AbgElement random_abg(const AbgAlgebra& g, unsigned n, Rng& rng);

/// Jacobi identity on all unordered basis triples of total degree ≤ exhaustive_degree,
/// plus `trials` random triples with total degree ≤ degree_bound.
CheckResult jacobi_check(const AbgAlgebra& g, unsigned degree_bound, unsigned exhaustive_degree, std::size_t trials,
                         Rng& rng);
CheckResult antisymmetry_check(const AbgAlgebra& g, unsigned degree_bound, std::size_t trials, Rng& rng);
/// x.[X,Y] = [x.X, Y] + [X, x.Y] and [x,y].X = x.(y.X) − y.(x.X).
std::vector<CheckResult> sl3_action_checks(const AbgAlgebra& g, unsigned degree_bound, std::size_t trials, Rng& rng);
/// bm_product ≡ multiply on all basis pairs of total degree ≤ exhaustive_degree and on random pairs.
CheckResult bm_roundtrip_check(const AbgAlgebra& g, unsigned degree_bound, unsigned exhaustive_degree,
                               std::size_t trials, Rng& rng);

}  // namespace abg
