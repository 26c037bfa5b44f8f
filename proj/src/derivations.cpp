#include "abg/derivations.hpp"

#include <array>
#include <stdexcept>
#include <tuple>

#include "abg/echelon.hpp"

namespace abg {

bool DerivationTuple::is_zero() const {
  for (const auto& x : images)
    if (!x.is_zero()) return false;
  return true;
}

DerivationTuple& DerivationTuple::operator+=(const DerivationTuple& o) {
  if (o.images.size() != images.size()) throw std::invalid_argument("derivation tuples of different length");
  for (std::size_t k = 0; k < images.size(); ++k) images[k] += o.images[k];
  return *this;
}

std::pair<std::uint32_t, int> BElementSpace::column(unsigned p, std::uint32_t i, unsigned q, std::uint32_t j) const {
  if (p + q != degree_) throw std::invalid_argument("wedge degrees do not sum to the space degree");
  int sign = 1;
  if (p < q || (p == q && i > j)) {
    std::swap(p, q);
    std::swap(i, j);
    sign = -1;
  }
  if (p == q) {
    if (i == j) return {0, 0};
    std::uint32_t a = dims_[p];
    return {block_offset_[p] + i * (2 * a - i - 1) / 2 + (j - i - 1), sign};
  }
  return {block_offset_[p] + i * dims_[q] + j, sign};
}

RatVec BElementSpace::wedge(const AlgElement& u, const AlgElement& v) const {
  std::vector<RatVec::Entry> acc;
  auto p = static_cast<unsigned>(u.degree);
  auto q = static_cast<unsigned>(v.degree);
  for (const auto& [i, x] : u.coords) {
    for (const auto& [j, y] : v.coords) {
      auto [col, sign] = column(p, i, q, j);
      if (sign == 0) continue;
      acc.emplace_back(col, sign > 0 ? Rat(x * y) : Rat(-x * y));
    }
  }
  return RatVec::from_unsorted(std::move(acc));
}

RatVec BElementSpace::reduce(const RatVec& lambda2) const {
  std::vector<RatVec::Entry> acc;
  for (const auto& [col, x] : lambda2)
    for (const auto& [k, y] : column_nf_.at(col)) acc.emplace_back(k, x * y);
  return RatVec::from_unsorted(std::move(acc));
}

AlgElement Derivations::apply(const AlgElement& a, const AlgElement& b, const AlgElement& c) const {
  const auto& A = algebra_;
  AlgElement out = A.commutator(A.commutator(a, b), c);
  out += Rat(3) * A.associator(a, c, b);
  return out;
}

AlgElement Derivations::apply_operator_form(const AlgElement& a, const AlgElement& b, const AlgElement& c) const {
  const auto& A = algebra_;
  auto m = [&](const AlgElement& x, const AlgElement& y) { return A.multiply(x, y); };
  AlgElement ll = m(a, m(b, c)) - m(b, m(a, c));
  AlgElement rr = m(m(c, b), a) - m(m(c, a), b);
  AlgElement lr = m(a, m(c, b)) - m(m(a, c), b);
  return ll + rr + lr;
}

AlgElement Derivations::apply_class(unsigned b_degree, const RatVec& b_coords, const AlgElement& c) const {
  const auto& space = b_space(b_degree);
  AlgElement out = algebra_.zero(b_degree + static_cast<unsigned>(c.degree));
  for (const auto& [k, x] : b_coords) {
    const auto& w = space.representative(k);
    out += x * apply(algebra_.basis_element(w.p, w.i), algebra_.basis_element(w.q, w.j), c);
  }
  return out;
}

DerivationTuple Derivations::tuple(const AlgElement& a, const AlgElement& b) const {
  DerivationTuple t;
  for (unsigned g = 0; g < algebra_.generators(); ++g) t.images.push_back(apply(a, b, algebra_.generator(g)));
  return t;
}

const BElementSpace& Derivations::b_space(unsigned degree) const {
  if (degree == 0) throw std::domain_error("degree must be positive");
  std::lock_guard lock(mutex_);
  if (spaces_.size() <= degree) spaces_.resize(degree + 1);
  if (!spaces_[degree]) spaces_[degree] = build_b_space(degree);
  return *spaces_[degree];
}

std::unique_ptr<BElementSpace> Derivations::build_b_space(unsigned n) const {
  const auto& A = algebra_;
  auto space = std::make_unique<BElementSpace>();
  space->generators_ = A.generators();
  space->degree_ = n;
  space->dims_.assign(n, 0);
  space->block_offset_.assign(n, 0);
  for (unsigned k = 1; k < n; ++k) space->dims_[k] = static_cast<std::uint32_t>(A.dim(k));

  std::uint32_t offset = 0;
  for (unsigned p = (n + 1) / 2; p < n; ++p) {
    unsigned q = n - p;
    space->block_offset_[p] = offset;
    std::uint32_t ap = space->dims_[p], aq = space->dims_[q];
    if (p > q) {
      for (std::uint32_t i = 0; i < ap; ++i)
        for (std::uint32_t j = 0; j < aq; ++j) space->columns_.push_back({p, i, q, j});
    } else {
      for (std::uint32_t i = 0; i < ap; ++i)
        for (std::uint32_t j = i + 1; j < ap; ++j) space->columns_.push_back({p, i, q, j});
    }
    offset = static_cast<std::uint32_t>(space->columns_.size());
  }

  const auto ncols = static_cast<std::uint32_t>(space->columns_.size());
  RationalRref rref(ncols);
  // I(A)_n is spanned by ab∧c + bc∧a + ca∧b over basis triples; the expression
  // is invariant under cyclic rotation, so only one rotation of each triple is used.
  using Key = std::tuple<unsigned, std::uint32_t, unsigned, std::uint32_t, unsigned, std::uint32_t>;
  for (unsigned p = 1; p + 2 <= n; ++p) {
    for (unsigned q = 1; p + q + 1 <= n; ++q) {
      unsigned r = n - p - q;
      for (std::uint32_t i = 0; i < space->dims_[p]; ++i) {
        for (std::uint32_t j = 0; j < space->dims_[q]; ++j) {
          for (std::uint32_t k = 0; k < space->dims_[r]; ++k) {
            Key t0{p, i, q, j, r, k}, t1{q, j, r, k, p, i}, t2{r, k, p, i, q, j};
            if (t1 < t0 || t2 < t0) continue;
            AlgElement a = A.basis_element(p, i), b = A.basis_element(q, j), c = A.basis_element(r, k);
            RatVec g = space->wedge(A.multiply(a, b), c);
            g += space->wedge(A.multiply(b, c), a);
            g += space->wedge(A.multiply(c, a), b);
            rref.insert(g);
          }
        }
      }
    }
  }

  std::vector<std::int64_t> pos(ncols, -1);
  for (std::uint32_t col = 0; col < ncols; ++col) {
    if (!rref.is_pivot(col)) {
      pos[col] = static_cast<std::int64_t>(space->basis_.size());
      space->basis_.push_back(col);
    }
  }
  space->column_nf_.resize(ncols);
  for (std::uint32_t col = 0; col < ncols; ++col) {
    if (pos[col] >= 0) {
      space->column_nf_[col] = RatVec::unit(static_cast<std::uint32_t>(pos[col]));
      continue;
    }
    std::vector<RatVec::Entry> nf;
    for (const auto& [c, x] : rref.pivot_row(col))
      if (c != col) nf.emplace_back(static_cast<std::uint32_t>(pos[c]), -x);
    space->column_nf_[col] = RatVec::from_unsorted(std::move(nf));
  }
  return space;
}

std::size_t Derivations::dim_inner(unsigned degree) const {
  const auto& A = algebra_;
  const auto& space = b_space(degree);
  const auto target = static_cast<std::uint32_t>(A.dim(degree + 1));
  std::vector<RatVec> rows;
  rows.reserve(space.dim_lambda2());
  for (const auto& w : space.lambda2_basis()) {
    DerivationTuple t = tuple(A.basis_element(w.p, w.i), A.basis_element(w.q, w.j));
    std::vector<RatVec::Entry> flat;
    for (std::uint32_t g = 0; g < t.images.size(); ++g)
      for (const auto& [k, x] : t.images[g].coords) flat.emplace_back(g * target + k, x);
    rows.push_back(RatVec::from_unsorted(std::move(flat)));
  }
  return rank_fraction_free(rows);
}

std::vector<CheckResult> check_inner_derivation_identities(const Derivations& der, unsigned degree_bound, std::size_t trials, Rng& rng) {
  const auto& A = der.algebra();
  auto rnd = [&](unsigned d) { return random_element(A, d, rng); };
  auto show = [&](std::initializer_list<const AlgElement*> xs) {
    std::string s;
    for (const auto* x : xs) s += (s.empty() ? "" : " ; ") + describe(A, *x);
    return s;
  };
  std::vector<CheckResult> out(5);
  out[0].name = "inner derivation formula matches [L_a,L_b]+[R_a,R_b]+[L_a,R_b]";
  out[1].name = "D_{a,b} is a derivation";
  out[2].name = "D_{a,b} + D_{b,a} = 0";
  out[3].name = "D_{ab,c} + D_{bc,a} + D_{ca,b} = 0";
  out[4].name = "[D, D_{a,b}] = D_{D(a),b} + D_{a,D(b)} for D = D_{u,v}";

  // Largest A-degree touched by each identity: deg(inputs) (+1 when evaluated on a generator).
  const std::array<unsigned, 5> arity{3, 4, 3, 3, 4};
  const std::array<unsigned, 5> extra{0, 0, 0, 1, 1};
  for (std::size_t s = 0; s < 5; ++s) {
    if (degree_bound < arity[s] + extra[s]) {
      out[s].note = "skipped: needs degree bound >= " + std::to_string(arity[s] + extra[s]);
      continue;
    }
    for (std::size_t t = 0; t < trials; ++t) {
      auto deg = random_degrees(arity[s], degree_bound - extra[s], rng);
      switch (s) {
        case 0: {
          auto a = rnd(deg[0]), b = rnd(deg[1]), c = rnd(deg[2]);
          out[s].record(der.apply(a, b, c) == der.apply_operator_form(a, b, c), show({&a, &b, &c}));
          break;
        }
        case 1: {
          auto a = rnd(deg[0]), b = rnd(deg[1]), c = rnd(deg[2]), d = rnd(deg[3]);
          AlgElement lhs = der.apply(a, b, A.multiply(c, d));
          AlgElement rhs = A.multiply(der.apply(a, b, c), d) + A.multiply(c, der.apply(a, b, d));
          out[s].record(lhs == rhs, show({&a, &b, &c, &d}));
          break;
        }
        case 2: {
          auto a = rnd(deg[0]), b = rnd(deg[1]), c = rnd(deg[2]);
          out[s].record((der.apply(a, b, c) + der.apply(b, a, c)).is_zero(), show({&a, &b, &c}));
          break;
        }
        case 3: {
          auto a = rnd(deg[0]), b = rnd(deg[1]), c = rnd(deg[2]);
          DerivationTuple sum = der.tuple(A.multiply(a, b), c);
          sum += der.tuple(A.multiply(b, c), a);
          sum += der.tuple(A.multiply(c, a), b);
          out[s].record(sum.is_zero(), show({&a, &b, &c}));
          break;
        }
        case 4: {
          auto u = rnd(deg[0]), v = rnd(deg[1]), a = rnd(deg[2]), b = rnd(deg[3]);
          bool ok = true;
          DerivationTuple rhs = der.tuple(der.apply(u, v, a), b);
          rhs += der.tuple(a, der.apply(u, v, b));
          for (unsigned g = 0; g < A.generators() && ok; ++g) {
            AlgElement x = A.generator(g);
            AlgElement lhs = der.apply(u, v, der.apply(a, b, x)) - der.apply(a, b, der.apply(u, v, x));
            ok = lhs == rhs.images[g];
          }
          out[s].record(ok, show({&u, &v, &a, &b}));
          break;
        }
      }
    }
  }
  return out;
}

}  // namespace abg
