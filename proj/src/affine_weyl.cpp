#include "abg/affine_weyl.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "abg/char_ring.hpp"

namespace abg {

std::array<int, 3> AffineWeight::pairing() const {
  std::array<int, 3> v{1, 1, 1};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) v[i] += kAffineCartan[i][j] * c[j];
  return v;
}

AffineWeight reflect(int i, const AffineWeight& w) {
  if (i < 0 || i > 2) throw std::invalid_argument("affine reflection index must be 0, 1 or 2");
  AffineWeight out = w;
  out.c[i] -= w.pairing()[i];
  return out;
}

std::vector<OrbitPoint> enumerate_orbit(unsigned max_length) {
  std::vector<OrbitPoint> out{{AffineWeight{}, 0, {}}};
  std::map<AffineWeight, std::size_t> seen{{AffineWeight{}, 0}};
  std::size_t begin = 0;
  for (unsigned len = 1; len <= max_length; ++len) {
    std::size_t end = out.size();
    for (std::size_t k = begin; k < end; ++k) {
      for (int i = 0; i < 3; ++i) {
        AffineWeight next = reflect(i, out[k].weight);
        if (seen.count(next)) continue;
        std::vector<int> word{i};
        word.insert(word.end(), out[k].word.begin(), out[k].word.end());
        seen.emplace(next, out.size());
        out.push_back({next, len, std::move(word)});
      }
    }
    begin = end;
  }
  return out;
}

std::vector<OrbitPoint> enumerate_w1s(unsigned max_length) {
  std::vector<OrbitPoint> out;
  for (auto& p : enumerate_orbit(max_length)) {
    auto v = p.weight.pairing();
    if (v[1] > 0 && v[2] > 0) out.push_back(std::move(p));
  }
  return out;
}

std::vector<GLRow> garland_lepowsky(unsigned max_length) {
  std::vector<GLRow> rows;
  for (const auto& p : enumerate_w1s(max_length)) {
    const auto& c = p.weight.c;
    GLRow r{p.length, c[1] - c[0], c[2] - c[0], -c[0], p.word};
    if (!is_dominant(r.m1, r.m2)) throw std::logic_error("finite part of a W1_S element is not dominant");
    rows.push_back(std::move(r));
  }
  std::stable_sort(rows.begin(), rows.end(), [](const GLRow& a, const GLRow& b) {
    return std::tie(a.length, a.m1) < std::tie(b.length, b.m1);
  });
  return rows;
}

DistinctReport check_distinct_mod_delta(unsigned max_length) {
  DistinctReport r;
  auto orbit = enumerate_orbit(max_length);
  r.elements = orbit.size();
  std::map<std::pair<int, int>, std::size_t> finite;
  for (std::size_t k = 0; k < orbit.size(); ++k) {
    const auto& c = orbit[k].weight.c;
    auto [it, fresh] = finite.emplace(std::pair{c[1] - c[0], c[2] - c[0]}, k);
    if (!fresh && r.passed) {
      r.passed = false;
      r.witness = word_to_string(orbit[it->second].word) + " and " + word_to_string(orbit[k].word);
    }
  }
  return r;
}

std::string word_to_string(const std::vector<int>& word) {
  if (word.empty()) return "1";
  std::string s;
  for (int i : word) s += "r" + std::to_string(i);
  return s;
}

}  // namespace abg
