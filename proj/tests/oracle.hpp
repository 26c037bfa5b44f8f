#pragma once

// Slow, dense reference implementations used only to cross-check the library.

#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <vector>

#include "abg/monomial.hpp"

namespace oracle {

using Row = std::vector<mpq_class>;

// Rank of a dense rational matrix by textbook Gaussian elimination.
inline std::size_t dense_rank(std::vector<Row> m) {
  if (m.empty()) return 0;
  std::size_t cols = m[0].size(), rank = 0;
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t piv = rank;
    while (piv < m.size() && m[piv][c] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[rank]);
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == rank || m[r][c] == 0) continue;
      mpq_class f = m[r][c] / m[rank][c];
      for (std::size_t k = c; k < cols; ++k) m[r][k] -= f * m[rank][k];
    }
    ++rank;
  }
  return rank;
}

// Spanning rows (not reduced) of the degree-n relation space of the free
// alternative algebra, built straight from the definition: linearized laws on
// monomial triples plus left/right monomial multiples of lower relations.
struct AltRelations {
  unsigned D;
  std::map<unsigned, std::vector<abg::Monomial>> magma;
  std::map<unsigned, std::map<abg::Monomial, std::size_t>> index;
  std::map<unsigned, std::vector<Row>> rows;

  explicit AltRelations(unsigned generators) : D(generators) {}

  const std::vector<abg::Monomial>& mons(unsigned n) {
    if (!magma.count(n)) {
      magma[n] = abg::enumerate_monomials(D, n);
      for (std::size_t i = 0; i < magma[n].size(); ++i) index[n][magma[n][i]] = i;
    }
    return magma[n];
  }

  void add(Row& r, unsigned n, const abg::Monomial& m, int c) { r[index[n].at(m)] += c; }

  const std::vector<Row>& relations(unsigned n) {
    if (rows.count(n)) return rows[n];
    std::vector<Row> out;
    std::size_t width = mons(n).size();
    for (unsigned p = 1; p < n; ++p)
      for (unsigned q = 1; p + q < n; ++q) {
        unsigned r = n - p - q;
        for (const auto& a : mons(p))
          for (const auto& b : mons(q))
            for (const auto& c : mons(r)) {
              auto assoc = [&](Row& row, const abg::Monomial& x, const abg::Monomial& y, const abg::Monomial& z) {
                add(row, n, (x * y) * z, 1);
                add(row, n, x * (y * z), -1);
              };
              Row t1(width), t2(width);
              assoc(t1, a, b, c);
              assoc(t1, b, a, c);
              assoc(t2, a, b, c);
              assoc(t2, a, c, b);
              out.push_back(std::move(t1));
              out.push_back(std::move(t2));
            }
      }
    for (unsigned k = 1; k + 3 <= n; ++k) {
      const auto& lower = relations(n - k);
      const auto& lower_mons = mons(n - k);
      for (const auto& rel : lower)
        for (const auto& m : mons(k)) {
          Row left(width), right(width);
          for (std::size_t i = 0; i < rel.size(); ++i) {
            if (rel[i] == 0) continue;
            left[index[n].at(m * lower_mons[i])] += rel[i];
            right[index[n].at(lower_mons[i] * m)] += rel[i];
          }
          out.push_back(std::move(left));
          out.push_back(std::move(right));
        }
    }
    rows[n] = std::move(out);
    return rows[n];
  }

  std::size_t dim(unsigned n) { return mons(n).size() - dense_rank(relations(n)); }
};

}  // namespace oracle
