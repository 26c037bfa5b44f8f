#pragma once

#include <cstdint>
#include <vector>

#include "abg/types.hpp"

namespace abg {

/// Incrementally maintained reduced row echelon form over Q.
///
/// The pivot of each row is its largest column. Rows are kept fully reduced
/// (pivot coefficient 1, no other pivot column present), so reducing a vector
/// against the span is a single pass over its own entries. The pivot set is
/// the set of leading columns of the span, independent of insertion order.
class RationalRref {
 public:
  explicit RationalRref(std::uint32_t columns);

  std::uint32_t columns() const { return columns_; }
  std::size_t rank() const { return rows_.size(); }

  /// Adds a row to the span. Returns true if the rank grew.
  bool insert(const RatVec& row);

  bool is_pivot(std::uint32_t col) const { return row_of_pivot_[col] >= 0; }
  /// The fully reduced row whose pivot is col (coefficient 1 at col).
  const RatVec& pivot_row(std::uint32_t col) const;
  /// Pivot columns in ascending order.
  std::vector<std::uint32_t> pivots() const;

  /// Remainder of v modulo the span; supported on non-pivot columns only.
  RatVec reduce(const RatVec& v) const;

 private:
  void load(const RatVec& v) const;
  RatVec unload() const;

  std::uint32_t columns_;
  std::vector<RatVec> rows_;
  std::vector<std::int64_t> row_of_pivot_;
  // Rows that (may) contain a given column; stale entries are tolerated.
  std::vector<std::vector<std::uint32_t>> occurrences_;
  std::vector<std::uint32_t> stamp_;
  std::uint32_t epoch_ = 0;

  mutable std::vector<Rat> acc_;
  mutable std::vector<char> touched_;
  mutable std::vector<std::uint32_t> touched_list_;
};

/// Rank over Q of a list of rational rows, by fraction-free elimination on the
/// primitive integer rows obtained after clearing denominators.
std::size_t rank_fraction_free(const std::vector<RatVec>& rows);

}  // namespace abg
