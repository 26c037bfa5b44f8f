#include "abg/monomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace abg {

namespace {

unsigned shape_length(unsigned degree) { return 2 * degree - 1; }

void render(const Monomial& m, std::string& out) {
  if (m.is_generator()) {
    out += 'x';
    out += std::to_string(m.letter(0) + 1);
    return;
  }
  auto [l, r] = m.split();
  out += '(';
  render(l, out);
  out += '*';
  render(r, out);
  out += ')';
}

}  // namespace

Monomial Monomial::generator(unsigned index) {
  if (index >= kMaxGenerators) throw std::domain_error("generator index out of range");
  return Monomial(1, 0, index);
}

Monomial Monomial::from_codes(unsigned degree, std::uint64_t shape, std::uint64_t word) {
  if (degree == 0 || degree > kMaxDegree) throw std::domain_error("monomial degree out of range");
  Monomial m(degree, shape, word);
  // Validate the shape: a preorder string of a full binary tree with `degree` leaves.
  unsigned len = shape_length(degree);
  if (len < 64 && (shape >> len) != 0) throw std::invalid_argument("malformed shape code");
  int need = 1;
  unsigned leaves = 0;
  for (unsigned i = 0; i < len; ++i) {
    if (need <= 0) throw std::invalid_argument("malformed shape code");
    bool internal = (shape >> (len - 1 - i)) & 1u;
    need += internal ? 1 : -1;
    if (!internal) ++leaves;
  }
  if (need != 0 || leaves != degree) throw std::invalid_argument("malformed shape code");
  if (degree < kMaxDegree && (word >> (4 * degree)) != 0) throw std::invalid_argument("malformed word code");
  return m;
}

unsigned Monomial::letter(unsigned pos) const {
  return static_cast<unsigned>((word_ >> (4 * (degree_ - 1 - pos))) & 0xFu);
}

std::vector<unsigned> Monomial::word() const {
  std::vector<unsigned> w(degree_);
  for (unsigned i = 0; i < degree_; ++i) w[i] = letter(i);
  return w;
}

std::vector<unsigned> Monomial::multidegree(unsigned generators) const {
  std::vector<unsigned> counts(generators, 0);
  for (unsigned i = 0; i < degree_; ++i) counts.at(letter(i))++;
  return counts;
}

std::pair<Monomial, Monomial> Monomial::split() const {
  if (degree_ < 2) throw std::logic_error("cannot split a generator");
  unsigned len = shape_length(degree_);
  // Walk the left subtree, starting after the root bit.
  int need = 1;
  unsigned pos = 1;
  unsigned left_leaves = 0;
  while (need > 0) {
    bool internal = (shape_ >> (len - 1 - pos)) & 1u;
    need += internal ? 1 : -1;
    if (!internal) ++left_leaves;
    ++pos;
  }
  unsigned left_len = pos - 1;
  unsigned right_len = len - pos;
  unsigned right_leaves = degree_ - left_leaves;
  std::uint64_t right_shape = right_len == 64 ? shape_ : (shape_ & ((std::uint64_t{1} << right_len) - 1));
  std::uint64_t left_shape = (shape_ >> right_len) & ((std::uint64_t{1} << left_len) - 1);
  std::uint64_t right_word =
      right_leaves * 4 == 64 ? word_ : (word_ & ((std::uint64_t{1} << (4 * right_leaves)) - 1));
  std::uint64_t left_word = word_ >> (4 * right_leaves);
  return {Monomial(left_leaves, left_shape, left_word), Monomial(right_leaves, right_shape, right_word)};
}

std::string Monomial::to_string() const {
  std::string out;
  render(*this, out);
  return out;
}

Monomial operator*(const Monomial& u, const Monomial& v) {
  unsigned degree = u.degree_ + v.degree_;
  if (degree > Monomial::kMaxDegree) throw std::domain_error("monomial degree exceeds 16");
  unsigned lu = shape_length(u.degree_);
  unsigned lv = shape_length(v.degree_);
  std::uint64_t shape = (std::uint64_t{1} << (lu + lv)) | (u.shape_ << lv) | v.shape_;
  std::uint64_t word = (u.word_ << (4 * v.degree_)) | v.word_;
  return Monomial(degree, shape, word);
}

Monomial magma_product(const Monomial& u, const Monomial& v) { return u * v; }

std::uint64_t catalan(unsigned n) {
  std::uint64_t c = 1;
  for (unsigned k = 0; k < n; ++k) c = c * 2 * (2 * k + 1) / (k + 2);
  return c;
}

std::uint64_t magma_count(unsigned generators, unsigned degree) {
  if (degree == 0) return 0;
  std::uint64_t p = catalan(degree - 1);
  for (unsigned i = 0; i < degree; ++i) p *= generators;
  return p;
}

std::vector<Monomial> enumerate_monomials(unsigned generators, unsigned degree) {
  if (generators == 0 || degree == 0) throw std::domain_error("enumerate_monomials needs D >= 1 and n >= 1");
  if (generators > Monomial::kMaxGenerators) throw std::domain_error("at most 15 generators supported");
  if (degree > Monomial::kMaxDegree) throw std::domain_error("degree exceeds 16");
  std::vector<std::vector<Monomial>> by_degree(degree + 1);
  for (unsigned i = 0; i < generators; ++i) by_degree[1].push_back(Monomial::generator(i));
  for (unsigned n = 2; n <= degree; ++n) {
    auto& out = by_degree[n];
    out.reserve(magma_count(generators, n));
    for (unsigned p = 1; p < n; ++p) {
      for (const auto& u : by_degree[p]) {
        for (const auto& v : by_degree[n - p]) out.push_back(u * v);
      }
    }
    std::sort(out.begin(), out.end());
  }
  return std::move(by_degree[degree]);
}

}  // namespace abg
