#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace abg {

/// A parenthesized word in the free magma on at most 15 generators.
///
/// Encoded as two integers: the preorder shape string of the binary tree
/// (internal node = 1, leaf = 0, 2n-1 bits, most significant first) and the
/// leaf word with 4 bits per letter. Both codes compare lexicographically as
/// integers once the degree is fixed, which gives the canonical order
/// (word first, shape second) for free.
class Monomial {
 public:
  static constexpr unsigned kMaxDegree = 16;
  static constexpr unsigned kMaxGenerators = 15;

  /// Generator x_{index+1}; index is 0-based.
  static Monomial generator(unsigned index);
  static Monomial from_codes(unsigned degree, std::uint64_t shape, std::uint64_t word);

  unsigned degree() const { return degree_; }
  std::uint64_t shape_code() const { return shape_; }
  std::uint64_t word_code() const { return word_; }

  /// 0-based generator index of the leaf at position pos (left to right).
  unsigned letter(unsigned pos) const;
  std::vector<unsigned> word() const;
  /// Letter counts indexed by generator; the multidegree.
  std::vector<unsigned> multidegree(unsigned generators) const;

  bool is_generator() const { return degree_ == 1; }
  /// Left and right factors; requires degree >= 2.
  std::pair<Monomial, Monomial> split() const;

  /// Fully parenthesized text form, e.g. "((x1*x2)*x3)".
  std::string to_string() const;

  friend Monomial operator*(const Monomial& u, const Monomial& v);

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
    if (auto c = a.degree_ <=> b.degree_; c != 0) return c;
    if (auto c = a.word_ <=> b.word_; c != 0) return c;
    return a.shape_ <=> b.shape_;
  }

 private:
  Monomial(unsigned degree, std::uint64_t shape, std::uint64_t word)
      : degree_(degree), shape_(shape), word_(word) {}

  unsigned degree_ = 1;
  std::uint64_t shape_ = 0;
  std::uint64_t word_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept {
    std::uint64_t h = m.shape_code() * 0x9E3779B97F4A7C15ull;
    h ^= m.word_code() + 0x7F4A7C159E3779B9ull + (h << 6) + (h >> 2);
    h ^= m.degree();
    return static_cast<std::size_t>(h);
  }
};

std::uint64_t catalan(unsigned n);

/// Number of magma monomials of degree n in D generators: Catalan(n-1) * D^n.
std::uint64_t magma_count(unsigned generators, unsigned degree);

/// All degree-n monomials in D generators, sorted by the canonical order.
std::vector<Monomial> enumerate_monomials(unsigned generators, unsigned degree);

Monomial magma_product(const Monomial& u, const Monomial& v);

}  // namespace abg
