#include "abg/echelon.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace abg {

std::string to_string(const Rat& x) { return x.get_str(); }
std::string to_string(const Int& x) { return x.get_str(); }

Int binomial(const Int& top, unsigned long k) {
  Int r;
  mpz_bin_ui(r.get_mpz_t(), top.get_mpz_t(), k);
  return r;
}

IntVec primitive_integer_row(const RatVec& row) {
  IntVec out;
  if (row.empty()) return out;
  Int lcm = 1;
  for (const auto& [i, x] : row) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.get_den_mpz_t());
  Int content = 0;
  std::vector<IntVec::Entry> items;
  items.reserve(row.size());
  for (const auto& [i, x] : row) {
    Int v = x.get_num() * (lcm / x.get_den());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
    items.emplace_back(i, std::move(v));
  }
  for (auto& [i, v] : items) {
    mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), content.get_mpz_t());
    out.push_back_unchecked(i, std::move(v));
  }
  return out;
}

RationalRref::RationalRref(std::uint32_t columns)
    : columns_(columns),
      row_of_pivot_(columns, -1),
      occurrences_(columns),
      acc_(columns),
      touched_(columns, 0) {}

const RatVec& RationalRref::pivot_row(std::uint32_t col) const {
  auto id = row_of_pivot_.at(col);
  if (id < 0) throw std::out_of_range("column is not a pivot");
  return rows_[static_cast<std::size_t>(id)];
}

std::vector<std::uint32_t> RationalRref::pivots() const {
  std::vector<std::uint32_t> out;
  for (std::uint32_t c = 0; c < columns_; ++c)
    if (row_of_pivot_[c] >= 0) out.push_back(c);
  return out;
}

void RationalRref::load(const RatVec& v) const {
  for (const auto& [i, x] : v) {
    if (i >= columns_) throw std::out_of_range("row index exceeds column count");
    if (!touched_[i]) {
      touched_[i] = 1;
      touched_list_.push_back(i);
      acc_[i] = x;
    } else {
      acc_[i] += x;
    }
  }
}

RatVec RationalRref::unload() const {
  std::sort(touched_list_.begin(), touched_list_.end());
  RatVec out;
  for (auto i : touched_list_) {
    if (!is_zero(acc_[i])) out.push_back_unchecked(i, acc_[i]);
    acc_[i] = 0;
    touched_[i] = 0;
  }
  touched_list_.clear();
  return out;
}

RatVec RationalRref::reduce(const RatVec& v) const {
  load(v);
  // Pivot rows carry no other pivot column, so one pass over the input suffices.
  for (const auto& [c, x] : v) {
    auto id = row_of_pivot_[c];
    if (id < 0) continue;
    Rat coeff = acc_[c];
    if (is_zero(coeff)) continue;
    for (const auto& [j, y] : rows_[static_cast<std::size_t>(id)]) {
      if (!touched_[j]) {
        touched_[j] = 1;
        touched_list_.push_back(j);
        acc_[j] = -coeff * y;
      } else {
        acc_[j] -= coeff * y;
      }
    }
  }
  return unload();
}

bool RationalRref::insert(const RatVec& row) {
  RatVec r = reduce(row);
  if (r.empty()) return false;
  std::uint32_t pivot = r.max_index();
  Rat lead = r.entries().back().second;
  if (lead != 1) r *= Rat(1) / lead;

  for (auto id : occurrences_[pivot]) {
    RatVec& q = rows_[id];
    Rat coeff = q.get(pivot);
    if (is_zero(coeff)) continue;
    RatVec old = q;
    q.add_scaled(r, -coeff);
    // Register q under any column it did not contain before.
    auto o = old.begin();
    for (const auto& [j, y] : q) {
      while (o != old.end() && o->first < j) ++o;
      if (o == old.end() || o->first != j) occurrences_[j].push_back(id);
    }
  }
  occurrences_[pivot].clear();
  occurrences_[pivot].shrink_to_fit();

  auto id = static_cast<std::uint32_t>(rows_.size());
  for (const auto& [j, y] : r)
    if (j != pivot) occurrences_[j].push_back(id);
  row_of_pivot_[pivot] = id;
  rows_.push_back(std::move(r));
  return true;
}

std::size_t rank_fraction_free(const std::vector<RatVec>& rows) {
  std::unordered_map<std::uint32_t, IntVec> pivots;
  for (const auto& input : rows) {
    IntVec r = primitive_integer_row(input);
    while (!r.empty()) {
      std::uint32_t c = r.max_index();
      auto it = pivots.find(c);
      if (it == pivots.end()) {
        if (r.entries().back().second < 0) r *= Int(-1);
        pivots.emplace(c, std::move(r));
        break;
      }
      const IntVec& p = it->second;
      Int a = p.entries().back().second;
      Int b = r.entries().back().second;
      Int g = gcd(a, b);
      r *= Int(a / g);
      r.add_scaled(p, Int(-(b / g)));
      if (r.empty()) break;
      Int content = 0;
      for (const auto& [i, x] : r) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), x.get_mpz_t());
      if (content != 1) {
        IntVec scaled;
        for (const auto& [i, x] : r) scaled.push_back_unchecked(i, Int(x / content));
        r = std::move(scaled);
      }
    }
  }
  return pivots.size();
}

}  // namespace abg
