#include "abg/char_ring.hpp"

#include <algorithm>
#include <array>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace abg {

namespace {

constexpr std::array<Weight, 6> kRoots{{{1, 0}, {0, 1}, {1, 1}, {-1, 0}, {0, -1}, {-1, -1}}};

Weight operator+(Weight a, Weight b) { return {a.first + b.first, a.second + b.second}; }
Weight operator-(Weight a, Weight b) { return {a.first - b.first, a.second - b.second}; }

// Weyl group elements as words in s1, s2, with their signs.
struct WeylElement {
  std::vector<int> word;
  int sign;
};
const std::array<WeylElement, 6> kWeyl{{{{}, 1}, {{1}, -1}, {{2}, -1}, {{1, 2}, 1}, {{2, 1}, 1}, {{1, 2, 1}, -1}}};

Weight act(const WeylElement& w, Weight mu) {
  for (auto it = w.word.rbegin(); it != w.word.rend(); ++it) mu = reflect_weight(*it, mu);
  return mu;
}

SymLaurent alternant(Weight mu) {
  SymLaurent out;
  for (const auto& w : kWeyl) {
    Weight v = act(w, mu);
    out.add_term(v.first, v.second, w.sign);
  }
  return out;
}

}  // namespace

Weight reflect_weight(int i, Weight w) {
  auto [p, q] = w;
  if (i == 1) return {q - p, q};
  if (i == 2) return {p, p - q};
  throw std::invalid_argument("finite reflection index must be 1 or 2");
}

bool is_dominant(int m1, int m2) { return 2 * m1 - m2 >= 0 && 2 * m2 - m1 >= 0; }

SymLaurent SymLaurent::constant(const Int& c) { return monomial(0, 0, c); }

SymLaurent SymLaurent::monomial(int p, int q, const Int& c) {
  SymLaurent f;
  f.add_term(p, q, c);
  return f;
}

Weight SymLaurent::from_fundamental(int a, int b) {
  int p = 2 * a + b, q = a + 2 * b;
  if (p % 3 != 0 || q % 3 != 0) throw std::domain_error("weight is not in the root lattice");
  return {p / 3, q / 3};
}

SymLaurent SymLaurent::orbit_sum(int p, int q) {
  std::vector<Weight> seen;
  for (const auto& w : kWeyl) {
    Weight v = act(w, {p, q});
    if (std::find(seen.begin(), seen.end(), v) == seen.end()) seen.push_back(v);
  }
  SymLaurent f;
  for (auto v : seen) f.add_term(v.first, v.second, 1);
  return f;
}

Int SymLaurent::coeff(int p, int q) const {
  auto it = terms_.find({p, q});
  return it == terms_.end() ? Int(0) : it->second;
}

void SymLaurent::add_term(int p, int q, const Int& c) {
  if (c == 0) return;
  auto [it, fresh] = terms_.emplace(Weight{p, q}, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

SymLaurent& SymLaurent::operator+=(const SymLaurent& o) {
  for (const auto& [w, c] : o.terms_) add_term(w.first, w.second, c);
  return *this;
}

SymLaurent& SymLaurent::operator-=(const SymLaurent& o) {
  for (const auto& [w, c] : o.terms_) add_term(w.first, w.second, -c);
  return *this;
}

SymLaurent& SymLaurent::operator*=(const Int& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, x] : terms_) x *= c;
  return *this;
}

SymLaurent operator*(const SymLaurent& a, const SymLaurent& b) {
  SymLaurent out;
  for (const auto& [u, x] : a.terms_)
    for (const auto& [v, y] : b.terms_) out.add_term(u.first + v.first, u.second + v.second, x * y);
  return out;
}

SymLaurent SymLaurent::dilate(int k) const {
  SymLaurent out;
  for (const auto& [w, c] : terms_) out.add_term(k * w.first, k * w.second, c);
  return out;
}

SymLaurent SymLaurent::reflect(int i) const {
  SymLaurent out;
  for (const auto& [w, c] : terms_) {
    Weight v = reflect_weight(i, w);
    out.add_term(v.first, v.second, c);
  }
  return out;
}

bool SymLaurent::is_symmetric() const { return reflect(1) == *this && reflect(2) == *this; }

Int SymLaurent::eval_one() const {
  Int s = 0;
  for (const auto& [w, c] : terms_) s += c;
  return s;
}

SymLaurent SymLaurent::exact_div(const SymLaurent& d) const {
  if (d.is_zero()) throw std::domain_error("division by zero Laurent polynomial");
  SymLaurent quotient, rem = *this;
  if (rem.is_zero()) return quotient;
  // Lex order on exponents is a group order, so quotient terms are bounded below.
  const Weight floor = terms_.begin()->first - d.terms_.begin()->first;
  const auto& [lead_w, lead_c] = *d.terms_.rbegin();
  while (!rem.is_zero()) {
    const auto& [w, c] = *rem.terms_.rbegin();
    Weight shift = w - lead_w;
    if (shift < floor || !mpz_divisible_p(c.get_mpz_t(), lead_c.get_mpz_t()))
      throw std::domain_error("Laurent division is not exact");
    Int factor = c / lead_c;
    quotient.add_term(shift.first, shift.second, factor);
    rem -= d * monomial(shift.first, shift.second, factor);
  }
  return quotient;
}

std::string SymLaurent::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [w, c] = *it;
    os << (first ? "" : " + ") << c.get_str();
    if (w != Weight{0, 0}) os << "*e(" << w.first << "," << w.second << ")";
    first = false;
  }
  return os.str();
}

SymLaurent ch_irr(int m1, int m2) {
  if (!is_dominant(m1, m2)) throw std::domain_error("highest weight is not dominant");
  static std::mutex mutex;
  static std::map<Weight, SymLaurent> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find({m1, m2});
  if (it != cache.end()) return it->second;
  const Weight rho{1, 1};
  SymLaurent ch = alternant(Weight{m1, m2} + rho).exact_div(alternant(rho));
  cache.emplace(Weight{m1, m2}, ch);
  return ch;
}

Int weyl_dimension(int m1, int m2) {
  if (!is_dominant(m1, m2)) throw std::domain_error("highest weight is not dominant");
  Int a = 2 * m1 - m2, b = 2 * m2 - m1;
  return (a + 1) * (b + 1) * (a + b + 2) / 2;
}

std::vector<Isotypic> decompose(const SymLaurent& f) {
  if (!f.is_symmetric()) throw std::invalid_argument("character is not S3-symmetric");
  std::vector<Isotypic> out;
  SymLaurent rest = f;
  while (!rest.is_zero()) {
    bool found = false;
    Weight best{};
    for (const auto& [w, c] : rest.terms()) {
      if (!is_dominant(w.first, w.second)) continue;
      auto key = [](Weight v) { return std::pair{v.first + v.second, v.first}; };
      if (!found || key(w) > key(best)) best = w;
      found = true;
    }
    if (!found) throw std::logic_error("symmetric character without dominant support");
    Int mult = rest.coeff(best.first, best.second);
    out.push_back({best.first, best.second, mult});
    rest -= ch_irr(best.first, best.second) * mult;
  }
  return out;
}

SymLaurent reconstruct(const std::vector<Isotypic>& parts) {
  SymLaurent f;
  for (const auto& p : parts) f += ch_irr(p.m1, p.m2) * p.mult;
  return f;
}

Int multiplicity(const SymLaurent& f, int m1, int m2) {
  for (const auto& p : decompose(f))
    if (p.m1 == m1 && p.m2 == m2) return p.mult;
  return 0;
}

CharSeries CharSeries::one(unsigned order) {
  CharSeries s(order);
  s[0] = SymLaurent::constant(1);
  return s;
}

CharSeries& CharSeries::operator+=(const CharSeries& o) {
  if (o.order() != order()) throw std::invalid_argument("series orders differ");
  for (unsigned n = 0; n <= order(); ++n) coeffs_[n] += o.coeffs_[n];
  return *this;
}

CharSeries& CharSeries::operator-=(const CharSeries& o) {
  if (o.order() != order()) throw std::invalid_argument("series orders differ");
  for (unsigned n = 0; n <= order(); ++n) coeffs_[n] -= o.coeffs_[n];
  return *this;
}

CharSeries operator*(const CharSeries& a, const CharSeries& b) {
  unsigned order = std::min(a.order(), b.order());
  CharSeries out(order);
  for (unsigned i = 0; i <= order; ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (unsigned j = 0; i + j <= order; ++j)
      if (!b.coeffs_[j].is_zero()) out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return out;
}

CharSeries binomial_factor(Weight mu, unsigned n, const Int& c, unsigned order) {
  if (n == 0) throw std::invalid_argument("factor degree must be positive");
  CharSeries s(order);
  for (unsigned k = 0; k * n <= order; ++k) {
    Int coef = binomial(c, k);
    if (k % 2 == 1) coef = -coef;
    s[k * n].add_term(static_cast<int>(k) * mu.first, static_cast<int>(k) * mu.second, coef);
  }
  return s;
}

CharSeries lambda_op(const CharSeries& x) {
  if (!x[0].is_zero()) throw std::invalid_argument("lambda operation needs a series without constant term");
  CharSeries out = CharSeries::one(x.order());
  for (unsigned n = 1; n <= x.order(); ++n)
    for (const auto& [mu, c] : x[n].terms()) out = out * binomial_factor(mu, n, c, x.order());
  return out;
}

namespace {

CharSeries phi_factor(unsigned n, const Int& a, const Int& b, unsigned order) {
  CharSeries f = binomial_factor({0, 0}, n, 2 * a + b, order);
  for (auto root : kRoots) f = f * binomial_factor(root, n, a, order);
  return f;
}

}  // namespace

CharSeries phi(const DimSeriesPair& ab, unsigned order) {
  if (ab.a.size() < order || ab.b.size() < order) throw std::invalid_argument("sequences shorter than the order");
  CharSeries out = CharSeries::one(order);
  for (unsigned n = 1; n <= order; ++n) out = out * phi_factor(n, ab.a[n - 1], ab.b[n - 1], order);
  return out;
}

DimSeriesPair solve_conjecture(unsigned D, unsigned order) {
  DimSeriesPair out;
  CharSeries partial = CharSeries::one(order);
  for (unsigned n = 1; n <= order; ++n) {
    const SymLaurent& c = partial[n];
    Int a = multiplicity(c, 1, 1) + (n == 1 ? Int(D) : Int(0));
    Int b = multiplicity(c, 0, 0);
    out.a.push_back(a);
    out.b.push_back(b);
    partial = partial * phi_factor(n, a, b, order);
  }
  return out;
}

ConjectureCheck check_conjecture(const CharSeries& series, unsigned D) {
  ConjectureCheck r;
  for (unsigned n = 0; n <= series.order(); ++n) {
    Int inv = multiplicity(series[n], 0, 0);
    Int adj = multiplicity(series[n], 1, 1);
    r.invariant.push_back(inv);
    r.adjoint.push_back(adj);
    if (inv != (n == 0 ? 1 : 0)) r.invariant_ok = false;
    if (adj != (n == 1 ? -Int(D) : Int(0))) r.adjoint_ok = false;
  }
  return r;
}

}  // namespace abg
