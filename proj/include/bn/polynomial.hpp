#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <vector>

#include <boost/rational.hpp>

namespace bn {

using Rational = boost::rational<long long>;

/// Dense polynomial over Q; coeffs[k] multiplies x^k. Trailing zeros allowed.
using Polynomial = std::vector<Rational>;

inline std::optional<int> lowest_term(const Polynomial& f) {
  for (std::size_t k = 0; k < f.size(); ++k)
    if (f[k].numerator() != 0) return static_cast<int>(k);
  return std::nullopt;
}

inline std::optional<int> highest_term(const Polynomial& f) {
  for (std::size_t k = f.size(); k-- > 0;)
    if (f[k].numerator() != 0) return static_cast<int>(k);
  return std::nullopt;
}

/// Pivot positions of an echelon form of `rows`, where columns are consumed
/// in the order given by `column_order`. The result is sorted in that order.
/// Returns nullopt when the rows are linearly dependent.
inline std::optional<std::vector<int>> echelon_pivots(std::vector<Polynomial> rows,
                                                       const std::vector<int>& column_order) {
  std::vector<int> pivots;
  std::size_t next = 0;
  for (int col : column_order) {
    if (next == rows.size()) break;
    const auto c = static_cast<std::size_t>(col);
    std::size_t hit = next;
    while (hit < rows.size() && (c >= rows[hit].size() || rows[hit][c].numerator() == 0)) ++hit;
    if (hit == rows.size()) continue;
    std::swap(rows[next], rows[hit]);
    const Rational lead = rows[next][c];
    for (std::size_t i = next + 1; i < rows.size(); ++i) {
      if (c >= rows[i].size() || rows[i][c].numerator() == 0) continue;
      const Rational factor = rows[i][c] / lead;
      for (std::size_t k = 0; k < rows[i].size() && k < rows[next].size(); ++k) rows[i][k] -= factor * rows[next][k];
    }
    pivots.push_back(col);
    ++next;
  }
  if (pivots.size() != rows.size()) return std::nullopt;
  return pivots;
}

}  // namespace bn
