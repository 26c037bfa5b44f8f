#pragma once

#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "abg/abg_lie.hpp"
#include "abg/char_ring.hpp"

namespace abg {

/// A wedge word x_{i_1} ∧ … ∧ x_{i_r} over the graded basis of ABG, with
/// strictly increasing global indices.
using Wedge = std::vector<std::uint32_t>;

struct WedgeHash {
  std::size_t operator()(const Wedge& w) const noexcept {
    std::size_t h = w.size();
    for (auto x : w) h = h * 0x100000001B3ull ^ x;
    return h;
  }
};

struct ChainBlock {
  Weight weight;
  std::vector<Wedge> words;
  std::unordered_map<Wedge, std::uint32_t, WedgeHash> index;
};

/// The Chevalley–Eilenberg complex of ABG(A(D)) truncated to internal degree ≤ max_degree.
class ChainComplex {
 public:
  ChainComplex(const AbgAlgebra& g, unsigned max_degree);

  const AbgAlgebra& algebra() const { return g_; }
  unsigned max_degree() const { return max_degree_; }
  std::size_t generators() const { return elements_.size(); }
  unsigned degree_of(std::uint32_t global) const { return elements_[global].first; }
  std::uint32_t local_of(std::uint32_t global) const { return elements_[global].second; }
  Weight weight_of(std::uint32_t global) const { return weights_[global]; }
  std::uint32_t global_index(unsigned n, std::uint32_t k) const { return offsets_[n] + k; }

  /// dim C_r in degree N by weight, from the product Π(1 + t·x), without enumeration.
  std::map<Weight, Int> chain_dims(unsigned r, unsigned N) const;
  /// Enumerates the weight blocks of C_r in degree N (optionally one weight only).
  std::vector<ChainBlock> chain_space(unsigned r, unsigned N, const Weight* only = nullptr) const;

  /// d(word) in C_{r−1} coordinates of `target`: Σ_{i<j} (−1)^{i+j+1} [x_i, x_j] ∧ (rest),
  /// indices 0-based, so d(x ∧ y) = [x, y].
  RatVec apply_d(const Wedge& word, const ChainBlock& target) const;
  /// Same, keyed by words; used for d∘d.
  std::map<Wedge, Rat> apply_d_words(const Wedge& word) const;

 private:
  const AbgAlgebra& g_;
  unsigned max_degree_;
  std::vector<std::pair<unsigned, std::uint32_t>> elements_;
  std::vector<Weight> weights_;
  std::vector<std::uint32_t> offsets_;
};

struct BlockResult {
  unsigned r = 0;
  unsigned N = 0;
  Weight weight;
  std::size_t chain_dim = 0;
  std::size_t rank_out = 0;  // rank of d_r : C_r → C_{r−1}
  std::size_t rank_in = 0;   // rank of d_{r+1} : C_{r+1} → C_r
  std::size_t homology = 0;
};

struct SkippedBlock {
  unsigned r = 0;
  unsigned N = 0;
  Weight weight;
  Int chain_dim;
  std::string reason;
};

struct DegreeSummary {
  unsigned r = 0;
  unsigned N = 0;
  bool complete = true;  // false when a block of this (r, N) was skipped
  std::size_t dim = 0;
  SymLaurent weight_char;
  std::vector<Isotypic> isotypic;
  Int invariant;  // [H : L(0)]
  Int adjoint;    // [H : L(α1+α2)]
};

struct HomologyOptions {
  unsigned r_max = 3;
  unsigned n_max = 4;
  std::size_t cap = 500000;
  bool check_dd = true;
};

struct HomologyReport {
  unsigned D = 0;
  HomologyOptions options;
  std::vector<BlockResult> blocks;
  std::vector<SkippedBlock> skipped;
  std::vector<DegreeSummary> degrees;  // r = 0..r_max, N = 0..n_max, nonzero or incomplete only
  bool dd_ok = true;
  std::size_t dd_blocks = 0;
  bool euler_ok = true;
  std::size_t euler_blocks = 0;
  bool symmetric_ok = true;

  const DegreeSummary* find(unsigned r, unsigned N) const;
  /// Human-readable statement of which (r, N) were certified.
  std::string verified_range() const;
};

HomologyReport homology(const AbgAlgebra& g, const HomologyOptions& options);

/// H_r in degree N as given by the affine Weyl group rows (D = 1): every (r, N)
/// with r ≤ r_max, N ≤ n_max must match a row or vanish.
struct RowComparison {
  bool passed = true;
  std::vector<std::string> mismatches;
};
RowComparison compare_with_rows(const HomologyReport& report, unsigned max_length);

}  // namespace abg
