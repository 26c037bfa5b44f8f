#include "abg/abg_lie.hpp"

#include <stdexcept>

namespace abg {

Mat3 Mat3::unit(int i, int j) {
  Mat3 x;
  x(i, j) = 1;
  return x;
}

Mat3 Mat3::identity() { return unit(1, 1) + unit(2, 2) + unit(3, 3); }

Mat3 operator+(const Mat3& a, const Mat3& b) {
  Mat3 c;
  for (int k = 0; k < 9; ++k) c.m[k] = a.m[k] + b.m[k];
  return c;
}

Mat3 operator-(const Mat3& a, const Mat3& b) {
  Mat3 c;
  for (int k = 0; k < 9; ++k) c.m[k] = a.m[k] - b.m[k];
  return c;
}

Mat3 operator*(const Mat3& a, const Mat3& b) {
  Mat3 c;
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j) {
      Rat s = 0;
      for (int k = 1; k <= 3; ++k) s += a(i, k) * b(k, j);
      c(i, j) = s;
    }
  return c;
}

Mat3 operator*(const Rat& s, const Mat3& a) {
  Mat3 c;
  for (int k = 0; k < 9; ++k) c.m[k] = s * a.m[k];
  return c;
}

const Mat3& sl3_basis(int s) {
  static const std::array<Mat3, kSl3Dim> basis{
      Mat3::unit(1, 2), Mat3::unit(1, 3), Mat3::unit(2, 1),
      Mat3::unit(2, 3), Mat3::unit(3, 1), Mat3::unit(3, 2),
      Mat3::unit(1, 1) - Mat3::unit(2, 2), Mat3::unit(2, 2) - Mat3::unit(3, 3),
  };
  return basis.at(static_cast<std::size_t>(s));
}

const char* sl3_name(int s) {
  static const std::array<const char*, kSl3Dim> names{"e12", "e13", "e21", "e23", "e31", "e32", "h1", "h2"};
  return names.at(static_cast<std::size_t>(s));
}

std::array<Rat, kSl3Dim> sl3_coords(const Mat3& x) {
  if (x.trace() != 0) throw std::invalid_argument("matrix is not traceless");
  // diag(d1, d2, d3) = d1·h1 + (−d3)·h2 when d1 + d2 + d3 = 0
  return {x(1, 2), x(1, 3), x(2, 1), x(2, 3), x(3, 1), x(3, 2), x(1, 1), -x(3, 3)};
}

Weight sl3_weight(int s) {
  static const std::array<Weight, kSl3Dim> w{{{1, 0}, {1, 1}, {-1, 0}, {0, 1}, {-1, -1}, {0, -1}, {0, 0}, {0, 0}}};
  return w.at(static_cast<std::size_t>(s));
}

AbgBasisElement AbgAlgebra::decode(unsigned n, std::uint32_t k) const {
  auto bn = static_cast<std::uint32_t>(dim_b(n));
  if (k < bn) return {true, k, 0, 0};
  auto an = static_cast<std::uint32_t>(algebra().dim(n));
  k -= bn;
  if (k >= kSl3Dim * an) throw std::out_of_range("ABG basis index out of range");
  return {false, 0, static_cast<int>(k / an), k % an};
}

std::uint32_t AbgAlgebra::tensor_index(unsigned n, int s, std::uint32_t i) const {
  return static_cast<std::uint32_t>(dim_b(n) + static_cast<std::size_t>(s) * algebra().dim(n) + i);
}

Weight AbgAlgebra::weight(unsigned n, std::uint32_t k) const {
  auto e = decode(n, k);
  return e.is_b ? Weight{0, 0} : sl3_weight(e.sl3);
}

std::string AbgAlgebra::describe(unsigned n, std::uint32_t k) const {
  auto e = decode(n, k);
  if (e.is_b) {
    const auto& w = der_.b_space(n).representative(e.b_index);
    const auto& A = algebra();
    return "<" + A.component(w.p).basis_monomial(w.i).to_string() + "," +
           A.component(w.q).basis_monomial(w.j).to_string() + ">";
  }
  return std::string(sl3_name(e.sl3)) + "(x)" + algebra().component(n).basis_monomial(e.a_index).to_string();
}

void AbgAlgebra::add_tensor(RatVec& out, unsigned n, const Mat3& x, const AlgElement& a, const Rat& scale) const {
  if (a.is_zero()) return;
  if (a.degree != static_cast<int>(n)) throw std::logic_error("tensor degree mismatch");
  auto c = sl3_coords(x);
  std::vector<RatVec::Entry> entries;
  for (int s = 0; s < kSl3Dim; ++s) {
    if (c[s] == 0) continue;
    for (const auto& [i, v] : a.coords) entries.emplace_back(tensor_index(n, s, i), scale * c[s] * v);
  }
  out += RatVec::from_unsorted(std::move(entries));
}

AbgElement AbgAlgebra::tensor(const Mat3& x, const AlgElement& a) const {
  AbgElement X;
  auto n = static_cast<unsigned>(a.degree);
  RatVec v;
  add_tensor(v, n, x, a, 1);
  if (!v.empty()) X[n] = std::move(v);
  return X;
}

AbgElement AbgAlgebra::pairing(const AlgElement& a, const AlgElement& b) const {
  AbgElement X;
  auto n = static_cast<unsigned>(a.degree + b.degree);
  RatVec v = der_.b_space(n).bracket_class(a, b);
  if (!v.empty()) X[n] = std::move(v);
  return X;
}

AlgElement AbgAlgebra::tensor_part(const AbgElement& X, unsigned n, int s) const {
  AlgElement a = algebra().zero(n);
  auto it = X.find(n);
  if (it == X.end()) return a;
  auto lo = tensor_index(n, s, 0);
  auto an = static_cast<std::uint32_t>(algebra().dim(n));
  for (const auto& [k, v] : it->second)
    if (k >= lo && k < lo + an) a.coords.push_back_unchecked(k - lo, v);
  return a;
}

const RatVec& AbgAlgebra::bracket_basis(unsigned n1, std::uint32_t k1, unsigned n2, std::uint32_t k2) const {
  if (n1 >= 32 || n2 >= 32 || k1 >= (1u << 27) || k2 >= (1u << 27)) throw std::out_of_range("bracket key overflow");
  std::uint64_t key = (std::uint64_t{n1} << 59) | (std::uint64_t{n2} << 54) | (std::uint64_t{k1} << 27) | k2;
  {
    std::lock_guard lock(mutex_);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
  }
  RatVec v = compute_bracket(n1, k1, n2, k2);
  std::lock_guard lock(mutex_);
  return cache_.emplace(key, std::move(v)).first->second;
}

RatVec AbgAlgebra::compute_bracket(unsigned n1, std::uint32_t k1, unsigned n2, std::uint32_t k2) const {
  const auto& A = algebra();
  const unsigned n = n1 + n2;
  auto x = decode(n1, k1), y = decode(n2, k2);
  RatVec out;
  if (!x.is_b && !y.is_b) {
    const Mat3& mx = sl3_basis(x.sl3);
    const Mat3& my = sl3_basis(y.sl3);
    AlgElement a = A.basis_element(n1, x.a_index), b = A.basis_element(n2, y.a_index);
    Mat3 xy = mx * my, yx = my * mx;
    Rat tr = xy.trace();
    if (tr != 0) out += (tr / 3) * der_.b_space(n).bracket_class(a, b);
    AlgElement ab = A.multiply(a, b), ba = A.multiply(b, a);
    add_tensor(out, n, xy - yx, ab + ba, Rat(1, 2));
    add_tensor(out, n, xy + yx - (Rat(2, 3) * tr) * Mat3::identity(), ab - ba, Rat(1, 2));
    return out;
  }
  if (x.is_b && !y.is_b) {
    const auto& w = der_.b_space(n1).representative(x.b_index);
    AlgElement c = A.basis_element(n2, y.a_index);
    add_tensor(out, n, sl3_basis(y.sl3), der_.apply(A.basis_element(w.p, w.i), A.basis_element(w.q, w.j), c), 1);
    return out;
  }
  if (!x.is_b && y.is_b) return -bracket_basis(n2, k2, n1, k1);
  const auto& w1 = der_.b_space(n1).representative(x.b_index);
  const auto& w2 = der_.b_space(n2).representative(y.b_index);
  AlgElement a = A.basis_element(w1.p, w1.i), b = A.basis_element(w1.q, w1.j);
  AlgElement c = A.basis_element(w2.p, w2.i), d = A.basis_element(w2.q, w2.j);
  const auto& B = der_.b_space(n);
  out += B.bracket_class(der_.apply(a, b, c), d);
  out += B.bracket_class(c, der_.apply(a, b, d));
  return out;
}

AbgElement AbgAlgebra::bracket(const AbgElement& X, const AbgElement& Y) const {
  AbgElement out;
  for (const auto& [n1, v1] : X)
    for (const auto& [n2, v2] : Y) {
      RatVec& acc = out[n1 + n2];
      for (const auto& [k1, x] : v1)
        for (const auto& [k2, y] : v2) acc.add_scaled(bracket_basis(n1, k1, n2, k2), x * y);
    }
  std::erase_if(out, [](const auto& kv) { return kv.second.empty(); });
  return out;
}

AbgElement AbgAlgebra::sl3_action(const Mat3& x, const AbgElement& X) const {
  AbgElement out;
  for (const auto& [n, v] : X) {
    RatVec acc;
    for (const auto& [k, c] : v) {
      auto e = decode(n, k);
      if (e.is_b) continue;
      auto coords = sl3_coords(commutator(x, sl3_basis(e.sl3)));
      std::vector<RatVec::Entry> entries;
      for (int s = 0; s < kSl3Dim; ++s)
        if (coords[s] != 0) entries.emplace_back(tensor_index(n, s, e.a_index), c * coords[s]);
      acc += RatVec::from_unsorted(std::move(entries));
    }
    if (!acc.empty()) out[n] = std::move(acc);
  }
  return out;
}

std::map<Weight, std::size_t> AbgAlgebra::weight_spaces(unsigned n) const {
  std::map<Weight, std::size_t> out;
  const Mat3& h1 = sl3_basis(H1);
  const Mat3& h2 = sl3_basis(H2);
  for (std::uint32_t k = 0; k < dim(n); ++k) {
    AbgElement unit{{n, RatVec::unit(k)}};
    auto eigen = [&](const Mat3& h) {
      AbgElement img = sl3_action(h, unit);
      Rat e = img.count(n) ? img.at(n).get(k) : Rat(0);
      AbgElement expect;
      if (e != 0) expect[n] = e * RatVec::unit(k);
      if (img != expect) throw std::logic_error("basis element is not a Cartan eigenvector");
      if (e.get_den() != 1) throw std::logic_error("non-integral Cartan eigenvalue");
      return static_cast<int>(e.get_num().get_si());
    };
    int e1 = eigen(h1), e2 = eigen(h2);
    // e1 = 2p − q, e2 = 2q − p for the weight pα1 + qα2
    if ((2 * e1 + e2) % 3 != 0 || (e1 + 2 * e2) % 3 != 0) throw std::logic_error("weight outside the root lattice");
    out[{(2 * e1 + e2) / 3, (e1 + 2 * e2) / 3}]++;
  }
  return out;
}

AlgElement AbgAlgebra::bm_product(const AlgElement& a, const AlgElement& b) const {
  AbgElement br = bracket(tensor(sl3_basis(E12), a), tensor(sl3_basis(E23), b));
  return tensor_part(br, static_cast<unsigned>(a.degree + b.degree), E13);
}

bool is_zero(const AbgElement& X) {
  for (const auto& [n, v] : X)
    if (!v.empty()) return false;
  return true;
}

AbgElement add(const AbgElement& X, const AbgElement& Y, const Rat& scale) {
  AbgElement out = X;
  for (const auto& [n, v] : Y) out[n].add_scaled(v, scale);
  std::erase_if(out, [](const auto& kv) { return kv.second.empty(); });
  return out;
}

AbgElement random_abg(const AbgAlgebra& g, unsigned n, Rng& rng) {
  std::size_t d = g.dim(n);
  AbgElement X;
  if (d == 0) return X;
  std::uniform_int_distribution<std::size_t> pick(0, d - 1);
  std::uniform_int_distribution<int> terms(1, 3), coeff(1, 3), sign(0, 1);
  RatVec v;
  while (v.empty()) {
    for (int t = terms(rng); t > 0; --t) {
      int c = coeff(rng) * (sign(rng) ? 1 : -1);
      v.add_scaled(RatVec::unit(static_cast<std::uint32_t>(pick(rng))), Rat(c));
    }
  }
  X[n] = std::move(v);
  return X;
}

namespace {

std::string show(const AbgAlgebra& g, const AbgElement& X) {
  std::string s;
  for (const auto& [n, v] : X)
    for (const auto& [k, c] : v) s += (s.empty() ? "" : " + ") + ("(" + c.get_str() + ")" + g.describe(n, k));
  return s.empty() ? "0" : s;
}

AbgElement jacobiator(const AbgAlgebra& g, const AbgElement& X, const AbgElement& Y, const AbgElement& Z) {
  AbgElement j = g.bracket(g.bracket(X, Y), Z);
  j = add(j, g.bracket(g.bracket(Y, Z), X));
  return add(j, g.bracket(g.bracket(Z, X), Y));
}

struct Basis {
  unsigned n;
  std::uint32_t k;
};

std::vector<Basis> basis_up_to(const AbgAlgebra& g, unsigned max_degree) {
  std::vector<Basis> out;
  for (unsigned n = 1; n <= max_degree; ++n)
    for (std::uint32_t k = 0; k < g.dim(n); ++k) out.push_back({n, k});
  return out;
}

AbgElement unit(const Basis& b) { return {{b.n, RatVec::unit(b.k)}}; }

Mat3 random_sl3(Rng& rng) {
  std::uniform_int_distribution<int> coeff(-2, 2);
  Mat3 x;
  while (x == Mat3{}) {
    x = Mat3{};
    for (int s = 0; s < kSl3Dim; ++s) x = x + Rat(coeff(rng)) * sl3_basis(s);
  }
  return x;
}

}  // namespace

CheckResult jacobi_check(const AbgAlgebra& g, unsigned degree_bound, unsigned exhaustive_degree, std::size_t trials,
                         Rng& rng) {
  CheckResult r;
  r.name = "Jacobi identity in ABG";
  unsigned ex = std::min(exhaustive_degree, degree_bound);
  // The Jacobiator is alternating once the bracket is, so unordered triples suffice.
  std::vector<Basis> all = basis_up_to(g, ex >= 3 ? ex - 2 : 0);
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = i + 1; j < all.size(); ++j) {
      if (all[i].n + all[j].n + 1 > ex) continue;
      for (unsigned n3 = all[j].n; all[i].n + all[j].n + n3 <= ex; ++n3)
        for (std::uint32_t k = 0; k < g.dim(n3); ++k) {
          Basis z{n3, k};
          if (n3 == all[j].n && k <= all[j].k) continue;
          AbgElement X = unit(all[i]), Y = unit(all[j]), Z = unit(z);
          bool ok = is_zero(jacobiator(g, X, Y, Z));
          r.record(ok, ok ? "" : show(g, X) + " ; " + show(g, Y) + " ; " + show(g, Z));
        }
    }
  std::size_t exhaustive = r.trials;
  if (degree_bound >= 3) {
    for (std::size_t t = 0; t < trials; ++t) {
      auto deg = random_degrees(3, degree_bound, rng);
      auto X = random_abg(g, deg[0], rng), Y = random_abg(g, deg[1], rng), Z = random_abg(g, deg[2], rng);
      bool ok = is_zero(jacobiator(g, X, Y, Z));
      r.record(ok, ok ? "" : show(g, X) + " ; " + show(g, Y) + " ; " + show(g, Z));
    }
  }
  r.note = std::to_string(exhaustive) + " basis triples up to degree " + std::to_string(ex) + ", " +
           std::to_string(r.trials - exhaustive) + " random triples up to degree " + std::to_string(degree_bound);
  return r;
}

CheckResult antisymmetry_check(const AbgAlgebra& g, unsigned degree_bound, std::size_t trials, Rng& rng) {
  CheckResult r;
  r.name = "ABG bracket is antisymmetric";
  if (degree_bound < 2) {
    r.note = "skipped: needs degree bound >= 2";
    return r;
  }
  for (std::size_t t = 0; t < trials; ++t) {
    auto deg = random_degrees(2, degree_bound, rng);
    auto X = random_abg(g, deg[0], rng), Y = random_abg(g, deg[1], rng);
    bool ok = is_zero(add(g.bracket(X, Y), g.bracket(Y, X)));
    if (deg[0] == deg[1]) ok = ok && is_zero(g.bracket(X, X));
    r.record(ok, ok ? "" : show(g, X) + " ; " + show(g, Y));
  }
  return r;
}

std::vector<CheckResult> sl3_action_checks(const AbgAlgebra& g, unsigned degree_bound, std::size_t trials, Rng& rng) {
  std::vector<CheckResult> out(2);
  out[0].name = "sl3 acts by derivations of the ABG bracket";
  out[1].name = "sl3 action is a Lie algebra action";
  for (std::size_t t = 0; t < trials && degree_bound >= 2; ++t) {
    auto deg = random_degrees(2, degree_bound, rng);
    Mat3 x = random_sl3(rng);
    auto X = random_abg(g, deg[0], rng), Y = random_abg(g, deg[1], rng);
    AbgElement lhs = g.sl3_action(x, g.bracket(X, Y));
    AbgElement rhs = add(g.bracket(g.sl3_action(x, X), Y), g.bracket(X, g.sl3_action(x, Y)));
    bool ok = is_zero(add(lhs, rhs, -1));
    out[0].record(ok, ok ? "" : show(g, X) + " ; " + show(g, Y));
  }
  if (degree_bound < 2) out[0].note = "skipped: needs degree bound >= 2";
  for (std::size_t t = 0; t < trials; ++t) {
    std::uniform_int_distribution<unsigned> deg(1, std::max(1u, degree_bound));
    Mat3 x = random_sl3(rng), y = random_sl3(rng);
    auto X = random_abg(g, deg(rng), rng);
    AbgElement lhs = g.sl3_action(commutator(x, y), X);
    AbgElement rhs = add(g.sl3_action(x, g.sl3_action(y, X)), g.sl3_action(y, g.sl3_action(x, X)), -1);
    bool ok = is_zero(add(lhs, rhs, -1));
    out[1].record(ok, ok ? "" : show(g, X));
  }
  return out;
}

CheckResult bm_roundtrip_check(const AbgAlgebra& g, unsigned degree_bound, unsigned exhaustive_degree,
                               std::size_t trials, Rng& rng) {
  const auto& A = g.algebra();
  CheckResult r;
  r.name = "product recovered from [e12(x)a, e23(x)b] equals multiply";
  if (degree_bound < 2) {
    r.note = "skipped: needs degree bound >= 2";
    return r;
  }
  unsigned ex = std::min(exhaustive_degree, degree_bound);
  for (unsigned p = 1; p < ex; ++p)
    for (unsigned q = 1; p + q <= ex; ++q)
      for (std::uint32_t i = 0; i < A.dim(p); ++i)
        for (std::uint32_t j = 0; j < A.dim(q); ++j) {
          auto a = A.basis_element(p, i), b = A.basis_element(q, j);
          bool ok = g.bm_product(a, b) == A.multiply(a, b);
          r.record(ok, ok ? "" : describe(A, a) + " ; " + describe(A, b));
        }
  std::size_t exhaustive = r.trials;
  for (std::size_t t = 0; t < trials; ++t) {
    auto deg = random_degrees(2, degree_bound, rng);
    auto a = random_element(A, deg[0], rng), b = random_element(A, deg[1], rng);
    bool ok = g.bm_product(a, b) == A.multiply(a, b);
    r.record(ok, ok ? "" : describe(A, a) + " ; " + describe(A, b));
  }
  r.note = std::to_string(exhaustive) + " basis pairs up to degree " + std::to_string(ex) + ", " +
           std::to_string(r.trials - exhaustive) + " random pairs";
  return r;
}

}  // namespace abg
