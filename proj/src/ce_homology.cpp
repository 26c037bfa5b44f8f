#include "abg/ce_homology.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <tuple>

#include "abg/affine_weyl.hpp"
#include "abg/echelon.hpp"

namespace abg {

ChainComplex::ChainComplex(const AbgAlgebra& g, unsigned max_degree) : g_(g), max_degree_(max_degree) {
  offsets_.assign(max_degree + 2, 0);
  for (unsigned n = 1; n <= max_degree; ++n) {
    offsets_[n] = static_cast<std::uint32_t>(elements_.size());
    for (std::uint32_t k = 0; k < g.dim(n); ++k) {
      elements_.emplace_back(n, k);
      weights_.push_back(g.weight(n, k));
    }
  }
  offsets_[max_degree + 1] = static_cast<std::uint32_t>(elements_.size());
}

std::map<Weight, Int> ChainComplex::chain_dims(unsigned r, unsigned N) const {
  if (N > max_degree_) throw std::out_of_range("degree beyond the truncation of the complex");
  std::map<std::pair<unsigned, Weight>, std::size_t> groups;
  for (std::uint32_t i = 0; i < elements_.size(); ++i) groups[{elements_[i].first, weights_[i]}]++;
  using Key = std::tuple<unsigned, unsigned, int, int>;  // words, degree, weight
  std::map<Key, Int> dp{{{0, 0, 0, 0}, Int(1)}};
  for (const auto& [key, mult] : groups) {
    const auto& [d, w] = key;
    std::map<Key, Int> next;
    for (const auto& [state, c] : dp) {
      const auto& [rr, dd, p, q] = state;
      for (unsigned k = 0; k <= mult && rr + k <= r && dd + k * d <= N; ++k) {
        Int ways = binomial(Int(static_cast<unsigned long>(mult)), k) * c;
        int kk = static_cast<int>(k);
        next[{rr + k, dd + k * d, p + kk * w.first, q + kk * w.second}] += ways;
      }
    }
    dp = std::move(next);
  }
  std::map<Weight, Int> out;
  for (const auto& [state, c] : dp) {
    const auto& [rr, dd, p, q] = state;
    if (rr == r && dd == N && c != 0) out[{p, q}] = c;
  }
  return out;
}

std::vector<ChainBlock> ChainComplex::chain_space(unsigned r, unsigned N, const Weight* only) const {
  if (N > max_degree_) throw std::out_of_range("degree beyond the truncation of the complex");
  std::map<Weight, ChainBlock> blocks;
  Wedge word;
  const auto total = static_cast<std::uint32_t>(elements_.size());
  auto rec = [&](auto&& self, std::uint32_t start, unsigned left, unsigned remaining, Weight w) -> void {
    if (left == 0) {
      if (remaining != 0) return;
      if (only && *only != w) return;
      auto& b = blocks[w];
      b.weight = w;
      b.index.emplace(word, static_cast<std::uint32_t>(b.words.size()));
      b.words.push_back(word);
      return;
    }
    for (std::uint32_t i = start; i < total; ++i) {
      unsigned d = elements_[i].first;
      if (d * left > remaining) break;  // degrees are nondecreasing along the global order
      if (left == 1 && d != remaining) continue;
      word.push_back(i);
      self(self, i + 1, left - 1, remaining - d, {w.first + weights_[i].first, w.second + weights_[i].second});
      word.pop_back();
    }
  };
  if (r == 0) {
    if (N == 0 && (!only || *only == Weight{0, 0})) {
      ChainBlock b;
      b.index.emplace(Wedge{}, 0);
      b.words.push_back({});
      return {b};
    }
    return {};
  }
  rec(rec, 0, r, N, {0, 0});
  std::vector<ChainBlock> out;
  for (auto& [w, b] : blocks) out.push_back(std::move(b));
  return out;
}

std::map<Wedge, Rat> ChainComplex::apply_d_words(const Wedge& word) const {
  std::map<Wedge, Rat> out;
  const std::size_t r = word.size();
  Wedge rest, next;
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = i + 1; j < r; ++j) {
      const auto [ni, ki] = elements_[word[i]];
      const auto [nj, kj] = elements_[word[j]];
      const RatVec& br = g_.bracket_basis(ni, ki, nj, kj);
      if (br.empty()) continue;
      rest.clear();
      for (std::size_t t = 0; t < r; ++t)
        if (t != i && t != j) rest.push_back(word[t]);
      const int sign = ((i + j + 1) % 2 == 0) ? 1 : -1;
      for (const auto& [k, c] : br) {
        std::uint32_t z = global_index(ni + nj, k);
        auto pos = std::lower_bound(rest.begin(), rest.end(), z);
        if (pos != rest.end() && *pos == z) continue;
        auto before = static_cast<std::size_t>(pos - rest.begin());
        next = rest;
        next.insert(next.begin() + static_cast<std::ptrdiff_t>(before), z);
        Rat v = (sign * ((before % 2 == 0) ? 1 : -1)) * c;
        auto [it, fresh] = out.emplace(next, v);
        if (!fresh) {
          it->second += v;
          if (it->second == 0) out.erase(it);
        }
      }
    }
  return out;
}

RatVec ChainComplex::apply_d(const Wedge& word, const ChainBlock& target) const {
  std::vector<RatVec::Entry> entries;
  for (auto& [w, c] : apply_d_words(word)) {
    auto it = target.index.find(w);
    if (it == target.index.end()) throw std::logic_error("differential leaves its weight block");
    entries.emplace_back(it->second, c);
  }
  return RatVec::from_unsorted(std::move(entries));
}

const DegreeSummary* HomologyReport::find(unsigned r, unsigned N) const {
  for (const auto& d : degrees)
    if (d.r == r && d.N == N) return &d;
  return nullptr;
}

std::string HomologyReport::verified_range() const {
  std::string s = "H_r for 0 <= r <= " + std::to_string(options.r_max) + ", internal degree 0 <= N <= " +
                  std::to_string(options.n_max);
  std::string gaps;
  for (const auto& d : degrees)
    if (!d.complete) gaps += (gaps.empty() ? "" : ", ") + ("(r=" + std::to_string(d.r) + ", N=" + std::to_string(d.N) + ")");
  if (!gaps.empty()) s += "; incomplete: " + gaps;
  return s;
}

namespace {

struct EnumeratedDegree {
  bool enumerated = false;
  std::map<Weight, Int> dims;
  std::map<Weight, ChainBlock> blocks;  // only blocks within the cap
};

}  // namespace

HomologyReport homology(const AbgAlgebra& g, const HomologyOptions& options) {
  HomologyReport report;
  report.D = g.algebra().generators();
  report.options = options;
  ChainComplex cc(g, std::max(1u, options.n_max));

  {
    DegreeSummary h0;
    h0.r = 0;
    h0.N = 0;
    h0.dim = 1;
    h0.weight_char = SymLaurent::constant(1);
    h0.isotypic = {{0, 0, Int(1)}};
    h0.invariant = 1;
    h0.adjoint = 0;
    report.degrees.push_back(h0);
    report.blocks.push_back({0, 0, {0, 0}, 1, 0, 0, 1});
  }

  for (unsigned N = 1; N <= options.n_max; ++N) {
    const unsigned top = std::min(N, options.r_max + 1);
    std::vector<EnumeratedDegree> C(top + 1);
    for (unsigned r = 1; r <= top; ++r) {
      C[r].dims = cc.chain_dims(r, N);
      Int total = 0;
      for (const auto& [w, d] : C[r].dims) total += d;
      if (total > Int(static_cast<unsigned long>(4 * options.cap))) continue;
      C[r].enumerated = true;
      for (auto& b : cc.chain_space(r, N)) {
        if (Int(static_cast<unsigned long>(b.words.size())) != C[r].dims.at(b.weight))
          throw std::logic_error("chain enumeration disagrees with the generating function");
        if (b.words.size() <= options.cap) C[r].blocks.emplace(b.weight, std::move(b));
      }
    }
    auto available = [&](unsigned r, Weight w) {
      if (r == 0 || r > top) return true;  // zero spaces
      return !C[r].dims.count(w) || C[r].blocks.count(w) > 0;
    };
    auto block_dim = [&](unsigned r, Weight w) -> std::size_t {
      if (r == 0 || r > top || !C[r].dims.count(w)) return 0;
      return C[r].blocks.at(w).words.size();
    };
    // rank of d_r on weight w; requires C_r and C_{r−1} available
    std::map<std::pair<unsigned, Weight>, std::size_t> ranks;
    auto rank_of = [&](unsigned r, Weight w) -> std::size_t {
      if (r <= 1 || r > top || !C[r].dims.count(w)) return 0;
      auto key = std::pair{r, w};
      if (auto it = ranks.find(key); it != ranks.end()) return it->second;
      const auto& src = C[r].blocks.at(w);
      static const ChainBlock empty;
      const ChainBlock& dst = C[r - 1].dims.count(w) ? C[r - 1].blocks.at(w) : empty;
      std::vector<RatVec> rows;
      rows.reserve(src.words.size());
      for (const auto& word : src.words) rows.push_back(cc.apply_d(word, dst));
      std::size_t rk = rank_fraction_free(rows);
      ranks.emplace(key, rk);
      return rk;
    };

    std::set<Weight> weights;
    for (unsigned r = 1; r <= top; ++r)
      for (const auto& [w, d] : C[r].dims) weights.insert(w);

    std::vector<DegreeSummary> summaries(std::min(N, options.r_max) + 1);
    for (unsigned r = 1; r < summaries.size(); ++r) {
      summaries[r].r = r;
      summaries[r].N = N;
    }
    for (const auto& w : weights) {
      bool all_available = true;
      for (unsigned r = 1; r <= top; ++r) {
        if (available(r, w)) continue;
        all_available = false;
        std::string reason = C[r].enumerated ? "block exceeds the chain dimension cap" : "chain space too large to enumerate";
        if (r < summaries.size()) report.skipped.push_back({r, N, w, C[r].dims.at(w), reason});
      }
      for (unsigned r = 1; r < summaries.size(); ++r) {
        if (!(available(r, w) && available(r - 1, w) && available(r + 1, w))) {
          summaries[r].complete = false;
          continue;
        }
        std::size_t dim = block_dim(r, w);
        if (dim == 0) continue;
        std::size_t out = rank_of(r, w), in = rank_of(r + 1, w);
        std::size_t h = dim - out - in;
        report.blocks.push_back({r, N, w, dim, out, in, h});
        if (h) {
          summaries[r].weight_char.add_term(w.first, w.second, Int(static_cast<unsigned long>(h)));
          summaries[r].dim += h;
        }
      }
      if (options.check_dd && all_available) {
        for (unsigned r = 3; r <= top; ++r) {
          if (!C[r].dims.count(w)) continue;
          ++report.dd_blocks;
          for (const auto& word : C[r].blocks.at(w).words) {
            std::map<Wedge, Rat> twice;
            for (const auto& [mid, c] : cc.apply_d_words(word))
              for (const auto& [low, e] : cc.apply_d_words(mid)) {
                auto& acc = twice[low];
                acc += c * e;
              }
            bool zero = std::all_of(twice.begin(), twice.end(), [](const auto& kv) { return kv.second == 0; });
            if (!zero) report.dd_ok = false;
          }
        }
      }
      if (all_available && options.r_max >= N) {
        ++report.euler_blocks;
        Int chain = 0, hom = 0;
        for (unsigned r = 1; r <= N; ++r) {
          int sgn = (r % 2 == 0) ? 1 : -1;
          chain += sgn * Int(static_cast<unsigned long>(block_dim(r, w)));
          hom += sgn * Int(static_cast<unsigned long>(block_dim(r, w) - rank_of(r, w) - rank_of(r + 1, w)));
        }
        if (chain != hom) report.euler_ok = false;
      }
    }
    for (unsigned r = 1; r < summaries.size(); ++r) {
      auto& s = summaries[r];
      if (s.complete) {
        if (!s.weight_char.is_symmetric()) {
          report.symmetric_ok = false;
        } else {
          s.isotypic = decompose(s.weight_char);
          for (const auto& part : s.isotypic) {
            if (part.m1 == 0 && part.m2 == 0) s.invariant = part.mult;
            if (part.m1 == 1 && part.m2 == 1) s.adjoint = part.mult;
          }
        }
      }
      report.degrees.push_back(std::move(s));
    }
  }
  return report;
}

RowComparison compare_with_rows(const HomologyReport& report, unsigned max_length) {
  RowComparison cmp;
  std::map<std::pair<unsigned, unsigned>, std::vector<Isotypic>> expected;
  for (const auto& row : garland_lepowsky(max_length)) {
    if (row.length > report.options.r_max || row.delta_degree > static_cast<int>(report.options.n_max)) continue;
    expected[{row.length, static_cast<unsigned>(row.delta_degree)}].push_back({row.m1, row.m2, Int(1)});
  }
  auto key = [](const Isotypic& a) { return std::tuple(a.m1, a.m2); };
  for (const auto& d : report.degrees) {
    std::string where = "H_" + std::to_string(d.r) + " in degree " + std::to_string(d.N);
    if (!d.complete) {
      cmp.passed = false;
      cmp.mismatches.push_back(where + ": incomplete");
      continue;
    }
    auto want = expected[{d.r, d.N}];
    auto got = d.isotypic;
    auto by_key = [&](const Isotypic& a, const Isotypic& b) { return key(a) < key(b); };
    std::sort(want.begin(), want.end(), by_key);
    std::sort(got.begin(), got.end(), by_key);
    if (want != got) {
      cmp.passed = false;
      cmp.mismatches.push_back(where + ": computed " + std::to_string(got.size()) + " summands, expected " +
                               std::to_string(want.size()));
    }
    expected.erase({d.r, d.N});
  }
  for (const auto& [rn, parts] : expected) {
    if (parts.empty()) continue;
    cmp.passed = false;
    cmp.mismatches.push_back("H_" + std::to_string(rn.first) + " in degree " + std::to_string(rn.second) +
                             ": expected summands but nothing computed");
  }
  return cmp;
}

}  // namespace abg
