#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace abg {

using Int = mpz_class;
using Rat = mpq_class;

/// Raised when a computation would exceed a configured dimension cap.
class ResourceLimit : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline bool is_zero(const Int& x) { return sgn(x) == 0; }
inline bool is_zero(const Rat& x) { return sgn(x) == 0; }

std::string to_string(const Rat& x);
std::string to_string(const Int& x);

/// Sparse vector with entries sorted by index and no stored zeros.
template <class T>
class SparseVec {
 public:
  using Entry = std::pair<std::uint32_t, T>;

  SparseVec() = default;

  /// Builds from arbitrary (index, value) pairs; duplicates are summed.
  static SparseVec from_unsorted(std::vector<Entry> items) {
    std::sort(items.begin(), items.end(),
              [](const Entry& a, const Entry& b) { return a.first < b.first; });
    SparseVec v;
    for (auto& [i, x] : items) {
      if (!v.entries_.empty() && v.entries_.back().first == i) {
        v.entries_.back().second += x;
      } else {
        v.entries_.emplace_back(i, std::move(x));
      }
    }
    v.prune();
    return v;
  }

  static SparseVec unit(std::uint32_t i, T value = T(1)) {
    SparseVec v;
    if (!is_zero(value)) v.entries_.emplace_back(i, std::move(value));
    return v;
  }

  const std::vector<Entry>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }

  T get(std::uint32_t i) const {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), i,
                               [](const Entry& e, std::uint32_t k) { return e.first < k; });
    if (it != entries_.end() && it->first == i) return it->second;
    return T(0);
  }

  std::uint32_t max_index() const { return entries_.back().first; }

  /// this += s * other
  void add_scaled(const SparseVec& other, const T& s) {
    if (is_zero(s) || other.empty()) return;
    std::vector<Entry> out;
    out.reserve(entries_.size() + other.entries_.size());
    auto a = entries_.begin();
    auto b = other.entries_.begin();
    while (a != entries_.end() || b != other.entries_.end()) {
      if (b == other.entries_.end() || (a != entries_.end() && a->first < b->first)) {
        out.push_back(std::move(*a));
        ++a;
      } else if (a == entries_.end() || b->first < a->first) {
        out.emplace_back(b->first, s * b->second);
        ++b;
      } else {
        T x = a->second + s * b->second;
        if (!is_zero(x)) out.emplace_back(a->first, std::move(x));
        ++a;
        ++b;
      }
    }
    entries_ = std::move(out);
  }

  SparseVec& operator+=(const SparseVec& o) {
    add_scaled(o, T(1));
    return *this;
  }
  SparseVec& operator-=(const SparseVec& o) {
    add_scaled(o, T(-1));
    return *this;
  }
  SparseVec& operator*=(const T& s) {
    if (is_zero(s)) {
      entries_.clear();
    } else {
      for (auto& e : entries_) e.second *= s;
    }
    return *this;
  }
  friend SparseVec operator+(SparseVec a, const SparseVec& b) { return a += b; }
  friend SparseVec operator-(SparseVec a, const SparseVec& b) { return a -= b; }
  friend SparseVec operator*(const T& s, SparseVec a) { return a *= s; }
  SparseVec operator-() const {
    SparseVec r = *this;
    for (auto& e : r.entries_) e.second = -e.second;
    return r;
  }
  friend bool operator==(const SparseVec& a, const SparseVec& b) { return a.entries_ == b.entries_; }

  void push_back_unchecked(std::uint32_t i, T x) { entries_.emplace_back(i, std::move(x)); }

 private:
  void prune() {
    std::erase_if(entries_, [](const Entry& e) { return is_zero(e.second); });
  }

  std::vector<Entry> entries_;
};

using RatVec = SparseVec<Rat>;
using IntVec = SparseVec<Int>;

/// Multiplies a rational row by the lcm of its denominators and divides by the
/// content, giving a primitive integer row with the same span.
IntVec primitive_integer_row(const RatVec& row);

Int binomial(const Int& top, unsigned long k);

}  // namespace abg
