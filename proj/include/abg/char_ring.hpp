#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "abg/types.hpp"

namespace abg {

/// Root-lattice point p·α1 + q·α2 of sl3.
using Weight = std::pair<int, int>;

/// Integer Laurent polynomial in t1 = e^{α1}, t2 = e^{α2}.
class SymLaurent {
 public:
  SymLaurent() = default;
  static SymLaurent constant(const Int& c);
  static SymLaurent monomial(int p, int q, const Int& c = 1);
  /// Weight a·ω1 + b·ω2 in root coordinates; throws std::domain_error when it
  /// is not in the root lattice (a ≢ b mod 3).
  static Weight from_fundamental(int a, int b);
  /// Sum of e^μ over the distinct points of the S3-orbit of (p,q).
  static SymLaurent orbit_sum(int p, int q);

  const std::map<Weight, Int>& terms() const { return terms_; }
  Int coeff(int p, int q) const;
  bool is_zero() const { return terms_.empty(); }
  void add_term(int p, int q, const Int& c);

  SymLaurent& operator+=(const SymLaurent& o);
  SymLaurent& operator-=(const SymLaurent& o);
  SymLaurent& operator*=(const Int& c);
  friend SymLaurent operator+(SymLaurent a, const SymLaurent& b) { return a += b; }
  friend SymLaurent operator-(SymLaurent a, const SymLaurent& b) { return a -= b; }
  friend SymLaurent operator*(SymLaurent a, const Int& c) { return a *= c; }
  friend SymLaurent operator*(const Int& c, SymLaurent a) { return a *= c; }
  friend SymLaurent operator*(const SymLaurent& a, const SymLaurent& b);
  SymLaurent operator-() const { return *this * Int(-1); }
  friend bool operator==(const SymLaurent&, const SymLaurent&) = default;

  /// Substitutes e^μ ↦ e^{kμ}.
  SymLaurent dilate(int k) const;
  /// Image under s1 (i = 1) or s2 (i = 2).
  SymLaurent reflect(int i) const;
  bool is_symmetric() const;
  /// Value at t1 = t2 = 1.
  Int eval_one() const;
  /// Exact quotient; throws std::domain_error if the division leaves a remainder.
  SymLaurent exact_div(const SymLaurent& d) const;

  std::string to_string() const;

 private:
  std::map<Weight, Int> terms_;
};

Weight reflect_weight(int i, Weight w);
/// Both dominance inequalities 2m1 − m2 ≥ 0 and 2m2 − m1 ≥ 0.
bool is_dominant(int m1, int m2);

/// Character of L(m1·α1 + m2·α2) via the Weyl character formula.
SymLaurent ch_irr(int m1, int m2);
/// Weyl dimension formula, for cross-checking.
Int weyl_dimension(int m1, int m2);

struct Isotypic {
  int m1 = 0;
  int m2 = 0;
  Int mult;
  friend bool operator==(const Isotypic&, const Isotypic&) = default;
};

/// Unique expansion f = Σ mult·ch L(m1,m2); highest terms first.
std::vector<Isotypic> decompose(const SymLaurent& f);
SymLaurent reconstruct(const std::vector<Isotypic>& parts);
/// Multiplicity of L(m1,m2) in f.
Int multiplicity(const SymLaurent& f, int m1, int m2);

/// Truncated series Σ_{n ≤ N} c_n z^n with SymLaurent coefficients.
class CharSeries {
 public:
  explicit CharSeries(unsigned order = 0) : coeffs_(order + 1) {}
  static CharSeries one(unsigned order);

  unsigned order() const { return static_cast<unsigned>(coeffs_.size() - 1); }
  const SymLaurent& operator[](unsigned n) const { return coeffs_.at(n); }
  SymLaurent& operator[](unsigned n) { return coeffs_.at(n); }

  CharSeries& operator+=(const CharSeries& o);
  CharSeries& operator-=(const CharSeries& o);
  friend CharSeries operator+(CharSeries a, const CharSeries& b) { return a += b; }
  friend CharSeries operator-(CharSeries a, const CharSeries& b) { return a -= b; }
  /// Product truncated at the smaller order.
  friend CharSeries operator*(const CharSeries& a, const CharSeries& b);
  friend bool operator==(const CharSeries&, const CharSeries&) = default;

 private:
  std::vector<SymLaurent> coeffs_;
};

/// (1 − e^μ z^n)^c truncated at z^order, for any integer c.
CharSeries binomial_factor(Weight mu, unsigned n, const Int& c, unsigned order);

/// λ(Σ c_{n,μ} e^μ z^n) = Π (1 − e^μ z^n)^{c_{n,μ}}; rejects a nonzero constant term.
CharSeries lambda_op(const CharSeries& x);

/// a_n = a[n-1], b_n = b[n-1].
struct DimSeriesPair {
  std::vector<Int> a;
  std::vector<Int> b;
};

/// Φ = Π_n Π_{α∈Δ}(1 − e^α z^n)^{a_n} (1 − z^n)^{2a_n + b_n} mod z^{N+1}.
CharSeries phi(const DimSeriesPair& ab, unsigned order);

/// Unique (a, b) with [Φ : L(0)] = 1 and [Φ : L(α1+α2)] = −D·z up to z^N.
DimSeriesPair solve_conjecture(unsigned D, unsigned order);

struct ConjectureCheck {
  bool invariant_ok = true;  // [Φ : L(0)] ≡ 1
  bool adjoint_ok = true;    // [Φ : L(α1+α2)] ≡ −D z
  std::vector<Int> invariant;
  std::vector<Int> adjoint;
};
ConjectureCheck check_conjecture(const CharSeries& phi_series, unsigned D);

}  // namespace abg
