#include "abg/alt_algebra.hpp"

#include <stdexcept>

#include "abg/echelon.hpp"

namespace abg {

AlgElement& AlgElement::operator+=(const AlgElement& o) {
  if (o.degree != degree) throw std::invalid_argument("adding elements of different degrees");
  coords += o.coords;
  return *this;
}

AlgElement& AlgElement::operator-=(const AlgElement& o) {
  if (o.degree != degree) throw std::invalid_argument("subtracting elements of different degrees");
  coords -= o.coords;
  return *this;
}

std::uint32_t GradedComponent::magma_index(const Monomial& m) const {
  auto it = magma_lookup_.find(m);
  if (it == magma_lookup_.end()) throw std::invalid_argument("monomial " + m.to_string() + " not in this component");
  return it->second;
}

void GradedComponent::index_magma() {
  magma_lookup_.clear();
  magma_lookup_.reserve(magma_.size());
  for (std::uint32_t i = 0; i < magma_.size(); ++i) magma_lookup_.emplace(magma_[i], i);
}

std::map<std::vector<unsigned>, std::size_t> GradedComponent::multigraded_dims() const {
  std::map<std::vector<unsigned>, std::size_t> out;
  for (auto idx : basis_) out[magma_[idx].multidegree(generators_)]++;
  return out;
}

FreeAlternativeAlgebra::FreeAlternativeAlgebra(unsigned generators, AlgebraOptions options)
    : generators_(generators), options_(std::move(options)) {
  if (generators == 0) throw std::domain_error("free alternative algebra needs at least one generator");
  if (generators > Monomial::kMaxGenerators) throw std::domain_error("at most 15 generators supported");
}

const GradedComponent& FreeAlternativeAlgebra::component(unsigned degree) const {
  if (degree == 0) throw std::domain_error("degree must be positive");
  std::lock_guard lock(mutex_);
  if (components_.size() <= degree) components_.resize(degree + 1);
  if (components_[degree]) return *components_[degree];
  for (unsigned d = 1; d < degree; ++d) component(d);

  std::uint64_t count = magma_count(generators_, degree);
  if (count > options_.magma_cap || degree > Monomial::kMaxDegree)
    throw ResourceLimit("A(" + std::to_string(generators_) + ")_" + std::to_string(degree) + " needs " +
                        std::to_string(count) + " magma monomials, cap is " + std::to_string(options_.magma_cap));

  std::unique_ptr<GradedComponent> built;
  if (options_.cache_dir) {
    auto path = component_cache_path(*options_.cache_dir, generators_, degree);
    try {
      if (auto loaded = load_component(path, generators_, degree))
        built = std::make_unique<GradedComponent>(std::move(*loaded));
    } catch (const std::runtime_error&) {
      built.reset();  // stale or foreign cache file: rebuild and overwrite
    }
  }
  if (!built) {
    built = build(degree);
    if (options_.cache_dir) save_component(*built, component_cache_path(*options_.cache_dir, generators_, degree));
  }
  components_[degree] = std::move(built);
  return *components_[degree];
}

std::unique_ptr<GradedComponent> FreeAlternativeAlgebra::build(unsigned n) const {
  auto comp = std::make_unique<GradedComponent>();
  comp->generators_ = generators_;
  comp->degree_ = n;
  comp->magma_ = enumerate_monomials(generators_, n);
  comp->index_magma();
  const auto& magma = comp->magma_;
  const std::size_t total = magma.size();

  // The relation space is multihomogeneous; eliminate one letter-count block at a time.
  std::map<std::vector<unsigned>, std::uint32_t> block_ids;
  std::vector<std::uint32_t> block_of(total), local_col(total);
  std::vector<std::uint32_t> block_sizes;
  std::vector<std::vector<std::uint32_t>> block_members;
  for (std::uint32_t i = 0; i < total; ++i) {
    auto key = magma[i].multidegree(generators_);
    auto [it, fresh] = block_ids.emplace(key, static_cast<std::uint32_t>(block_sizes.size()));
    if (fresh) {
      block_sizes.push_back(0);
      block_members.emplace_back();
    }
    block_of[i] = it->second;
    local_col[i] = block_sizes[it->second]++;
    block_members[it->second].push_back(i);
  }
  std::vector<RationalRref> engines;
  engines.reserve(block_sizes.size());
  for (auto s : block_sizes) engines.emplace_back(s);

  std::vector<std::pair<std::uint32_t, Rat>> scratch;
  auto insert_row = [&](const std::vector<std::pair<Monomial, Rat>>& terms) {
    scratch.clear();
    std::uint32_t block = UINT32_MAX;
    for (const auto& [m, c] : terms) {
      std::uint32_t idx = comp->magma_index(m);
      if (block == UINT32_MAX) block = block_of[idx];
      if (block_of[idx] != block) throw std::logic_error("relation is not multihomogeneous");
      scratch.emplace_back(local_col[idx], c);
    }
    if (block == UINT32_MAX) return;
    engines[block].insert(RatVec::from_unsorted(scratch));
  };

  if (n >= 3) {
    std::vector<std::pair<Monomial, Rat>> terms;
    const Rat one(1), minus_one(-1);
    // Linearized alternative laws on all monomial triples of total degree n.
    for (unsigned p = 1; p + 2 <= n; ++p) {
      for (unsigned q = 1; p + q + 1 <= n; ++q) {
        unsigned r = n - p - q;
        const auto& mp = component(p).magma();
        const auto& mq = component(q).magma();
        const auto& mr = component(r).magma();
        for (const auto& a : mp) {
          for (const auto& b : mq) {
            for (const auto& c : mr) {
              Monomial ab_c = (a * b) * c;
              Monomial a_bc = a * (b * c);
              if (a <= b) {  // (a,b,c)+(b,a,c) is symmetric in a,b
                terms = {{ab_c, one}, {a_bc, minus_one}, {(b * a) * c, one}, {b * (a * c), minus_one}};
                insert_row(terms);
              }
              if (b <= c) {  // (a,b,c)+(a,c,b) is symmetric in b,c
                terms = {{ab_c, one}, {a_bc, minus_one}, {(a * c) * b, one}, {a * (c * b), minus_one}};
                insert_row(terms);
              }
            }
          }
        }
      }
    }
    // Ideal closure: monomials times relations of lower degree.
    for (unsigned k = 1; k + 3 <= n; ++k) {
      const GradedComponent& lower = component(n - k);
      const auto& mult = component(k).magma();
      std::vector<std::pair<Monomial, Rat>> rel;
      std::vector<std::pair<Monomial, Rat>> prod;
      for (std::uint32_t idx = 0; idx < lower.magma().size(); ++idx) {
        if (lower.is_basis(idx)) continue;
        rel.clear();
        rel.emplace_back(lower.magma()[idx], one);
        for (const auto& [pos, c] : lower.normal_form(idx)) rel.emplace_back(lower.basis_monomial(pos), -c);
        for (const auto& u : mult) {
          prod.clear();
          for (const auto& [m, c] : rel) prod.emplace_back(u * m, c);
          insert_row(prod);
          prod.clear();
          for (const auto& [m, c] : rel) prod.emplace_back(m * u, c);
          insert_row(prod);
        }
      }
    }
  }

  comp->basis_pos_.assign(total, -1);
  for (std::uint32_t i = 0; i < total; ++i) {
    if (!engines[block_of[i]].is_pivot(local_col[i])) {
      comp->basis_pos_[i] = static_cast<std::int64_t>(comp->basis_.size());
      comp->basis_.push_back(i);
    }
  }
  comp->normal_forms_.resize(total);
  for (std::uint32_t i = 0; i < total; ++i) {
    if (comp->basis_pos_[i] >= 0) {
      comp->normal_forms_[i] = RatVec::unit(static_cast<std::uint32_t>(comp->basis_pos_[i]));
      continue;
    }
    const auto& members = block_members[block_of[i]];
    std::vector<RatVec::Entry> nf;
    for (const auto& [col, c] : engines[block_of[i]].pivot_row(local_col[i])) {
      if (col == local_col[i]) continue;
      nf.emplace_back(static_cast<std::uint32_t>(comp->basis_pos_[members[col]]), -c);
    }
    comp->normal_forms_[i] = RatVec::from_unsorted(std::move(nf));
  }
  return comp;
}

AlgElement FreeAlternativeAlgebra::generator(unsigned index) const {
  if (index >= generators_) throw std::domain_error("generator index out of range");
  const auto& c = component(1);
  return {1, c.normal_form(c.magma_index(Monomial::generator(index)))};
}

AlgElement FreeAlternativeAlgebra::basis_element(unsigned degree, std::uint32_t pos) const {
  if (pos >= component(degree).dim()) throw std::out_of_range("basis position out of range");
  return {static_cast<int>(degree), RatVec::unit(pos)};
}

AlgElement FreeAlternativeAlgebra::reduce(unsigned degree, const RatVec& raw) const {
  const auto& c = component(degree);
  std::vector<RatVec::Entry> acc;
  for (const auto& [idx, x] : raw) {
    if (idx >= c.magma().size()) throw std::out_of_range("magma index out of range");
    for (const auto& [pos, y] : c.normal_form(idx)) acc.emplace_back(pos, x * y);
  }
  return {static_cast<int>(degree), RatVec::from_unsorted(std::move(acc))};
}

AlgElement FreeAlternativeAlgebra::reduce_monomials(unsigned degree,
                                                    const std::vector<std::pair<Monomial, Rat>>& raw) const {
  const auto& c = component(degree);
  std::vector<RatVec::Entry> items;
  for (const auto& [m, x] : raw) {
    if (m.degree() != degree) throw std::invalid_argument("degree mismatch in reduce");
    items.emplace_back(c.magma_index(m), x);
  }
  return reduce(degree, RatVec::from_unsorted(std::move(items)));
}

const RatVec& FreeAlternativeAlgebra::basis_product(unsigned p, std::uint32_t i, unsigned q, std::uint32_t j) const {
  std::uint64_t key = (std::uint64_t{p} << 59) | (std::uint64_t{q} << 54) | (std::uint64_t{i} << 27) | j;
  std::lock_guard lock(mutex_);
  if (auto it = product_cache_.find(key); it != product_cache_.end()) return it->second;
  const auto& target = component(p + q);
  Monomial m = component(p).basis_monomial(i) * component(q).basis_monomial(j);
  return product_cache_.emplace(key, target.normal_form(target.magma_index(m))).first->second;
}

AlgElement FreeAlternativeAlgebra::multiply(const AlgElement& u, const AlgElement& v) const {
  unsigned p = static_cast<unsigned>(u.degree);
  unsigned q = static_cast<unsigned>(v.degree);
  component(p + q);
  std::vector<RatVec::Entry> acc;
  for (const auto& [i, x] : u.coords) {
    for (const auto& [j, y] : v.coords) {
      Rat s = x * y;
      for (const auto& [k, z] : basis_product(p, i, q, j)) acc.emplace_back(k, s * z);
    }
  }
  return {u.degree + v.degree, RatVec::from_unsorted(std::move(acc))};
}

AlgElement FreeAlternativeAlgebra::associator(const AlgElement& a, const AlgElement& b, const AlgElement& c) const {
  return multiply(multiply(a, b), c) - multiply(a, multiply(b, c));
}

AlgElement FreeAlternativeAlgebra::commutator(const AlgElement& a, const AlgElement& b) const {
  return multiply(a, b) - multiply(b, a);
}

}  // namespace abg
