#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <limits>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bn/finite_field.hpp"
#include "bn/flag_profile.hpp"
#include "bn/sequences.hpp"

namespace bn {

class InfeasibleSize : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::uint64_t kDefaultEnumerationBudget = 10'000'000;

/// Subspace-test budget, overridable through BN_ENUM_BUDGET.
inline std::uint64_t enumeration_budget() {
  if (const char* env = std::getenv("BN_ENUM_BUDGET"); env != nullptr && *env != '\0') {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != nullptr && *end == '\0') return v;
    throw InvalidInput(std::string("BN_ENUM_BUDGET is not a nonnegative integer: ") + env);
  }
  return kDefaultEnumerationBudget;
}

/// Number of k-dimensional subspaces of F_q^n, saturating at uint64 max.
inline std::uint64_t gaussian_binomial(int n, int k, int q) {
  if (k < 0 || k > n) return 0;
  constexpr auto cap = std::numeric_limits<std::uint64_t>::max();
  std::vector<std::uint64_t> row(static_cast<std::size_t>(k + 1), 0);
  row[0] = 1;
  // [n,k]_q = [n-1,k-1]_q + q^k [n-1,k]_q
  for (int m = 1; m <= n; ++m) {
    for (int j = std::min(m, k); j >= 1; --j) {
      std::uint64_t scaled = row[static_cast<std::size_t>(j)];
      for (int t = 0; t < j && scaled != cap; ++t)
        scaled = scaled > cap / static_cast<std::uint64_t>(q) ? cap : scaled * static_cast<std::uint64_t>(q);
      const std::uint64_t prev = row[static_cast<std::size_t>(j - 1)];
      row[static_cast<std::size_t>(j)] = scaled > cap - prev ? cap : scaled + prev;
    }
  }
  return row[static_cast<std::size_t>(k)];
}

/// Coordinate model of a pair of flags: basis vector i vanishes to order
/// order1[i] at the first point and order2[i] at the second, and each flag step
/// is spanned by the basis vectors of high enough order.
struct TwoFlagModel {
  int n = 0;
  int max_order = 0;
  std::vector<int> order1;
  std::vector<int> order2;
};

inline TwoFlagModel two_flag_model(const FlagProfile& profile) {
  TwoFlagModel m{profile.n(), profile.max_order(), {}, {}};
  for (auto [b, c] : profile.adapted_orders()) {
    m.order1.push_back(b);
    m.order2.push_back(c);
  }
  return m;
}

/// Vanishing sequences (at the first point, at the second point) of a subspace.
using VanishingKey = std::pair<std::vector<int>, std::vector<int>>;
using VanishingCensus = std::map<VanishingKey, std::uint64_t>;

namespace detail {

inline constexpr int kMaxAmbient = 8;
using Row = std::array<SmallField::Element, kMaxAmbient>;

/// Orders of vanishing of span(rows) when coordinates carry `orders`;
/// `by_order` lists the coordinates by increasing order. Rows are clobbered.
inline void vanishing_orders(const SmallField& F, std::vector<Row>& rows, const std::vector<int>& by_order,
                             const std::vector<int>& orders, std::vector<int>& out) {
  out.clear();
  std::size_t next = 0;
  for (int col : by_order) {
    if (next == rows.size()) break;
    const auto c = static_cast<std::size_t>(col);
    std::size_t hit = next;
    while (hit < rows.size() && rows[hit][c] == 0) ++hit;
    if (hit == rows.size()) continue;
    std::swap(rows[next], rows[hit]);
    const auto lead_inv = F.inv(rows[next][c]);
    for (std::size_t i = next + 1; i < rows.size(); ++i) {
      if (rows[i][c] == 0) continue;
      const auto factor = F.mul(rows[i][c], lead_inv);
      for (std::size_t k = 0; k < rows[i].size(); ++k)
        rows[i][k] = F.sub(rows[i][k], F.mul(factor, rows[next][k]));
    }
    out.push_back(orders[c]);
    ++next;
  }
}

inline std::vector<int> coordinates_by(const std::vector<int>& orders) {
  std::vector<int> idx(orders.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) {
    return orders[static_cast<std::size_t>(a)] < orders[static_cast<std::size_t>(b)];
  });
  return idx;
}

}  // namespace detail

/// Enumerates every `dim`-dimensional subspace of F_q^n (as reduced row echelon
/// matrices) and tallies its pair of vanishing sequences against the model's
/// flags. Throws InfeasibleSize if the number of subspaces exceeds `budget`.
inline VanishingCensus vanishing_census(const SmallField& F, const TwoFlagModel& model, int dim,
                                        std::uint64_t budget) {
  const int n = model.n;
  const int q = F.size();
  if (n < 1 || n > detail::kMaxAmbient) throw InvalidInput("ambient dimension must be in [1, 8]");
  if (dim < 1 || dim > n) throw InvalidInput("subspace dimension must be in [1, n]");
  const std::uint64_t total = gaussian_binomial(n, dim, q);
  if (total > budget)
    throw InfeasibleSize("enumerating " + std::to_string(total) + " subspaces of F_" + std::to_string(q) + "^" +
                         std::to_string(n) + " exceeds the budget of " + std::to_string(budget));

  const auto by1 = detail::coordinates_by(model.order1);
  const auto by2 = detail::coordinates_by(model.order2);
  VanishingCensus census;
  std::vector<detail::Row> rows(static_cast<std::size_t>(dim));
  std::vector<detail::Row> scratch;
  std::vector<int> v1, v2;

  std::vector<int> pivots(static_cast<std::size_t>(dim));
  std::iota(pivots.begin(), pivots.end(), 0);
  while (true) {
    std::vector<std::pair<std::size_t, std::size_t>> free_slots;
    for (std::size_t i = 0; i < pivots.size(); ++i)
      for (int c = pivots[i] + 1; c < n; ++c)
        if (std::find(pivots.begin(), pivots.end(), c) == pivots.end())
          free_slots.emplace_back(i, static_cast<std::size_t>(c));

    for (auto& row : rows) row.fill(0);
    for (std::size_t i = 0; i < pivots.size(); ++i) rows[i][static_cast<std::size_t>(pivots[i])] = 1;

    std::vector<int> digits(free_slots.size(), 0);
    while (true) {
      for (std::size_t s = 0; s < free_slots.size(); ++s)
        rows[free_slots[s].first][free_slots[s].second] = static_cast<SmallField::Element>(digits[s]);
      scratch = rows;
      detail::vanishing_orders(F, scratch, by1, model.order1, v1);
      scratch = rows;
      detail::vanishing_orders(F, scratch, by2, model.order2, v2);
      ++census[{v1, v2}];

      std::size_t s = 0;
      while (s < digits.size() && ++digits[s] == q) digits[s++] = 0;
      if (s == digits.size()) break;
    }

    // Next pivot combination in lexicographic order.
    int i = dim - 1;
    while (i >= 0 && pivots[static_cast<std::size_t>(i)] == n - dim + i) --i;
    if (i < 0) break;
    ++pivots[static_cast<std::size_t>(i)];
    for (int k = i + 1; k < dim; ++k) pivots[static_cast<std::size_t>(k)] = pivots[static_cast<std::size_t>(k - 1)] + 1;
  }
  return census;
}

inline bool dominates(const std::vector<int>& v, const std::vector<int>& floor) {
  if (v.size() != floor.size()) return false;
  for (std::size_t j = 0; j < v.size(); ++j)
    if (v[j] < floor[j]) return false;
  return true;
}

/// Subspaces in the census vanishing to at least a1 at the first point and a2
/// at the second.
inline std::uint64_t count_in_census(const VanishingCensus& census, const VanishingSeq& a1, const VanishingSeq& a2) {
  std::uint64_t total = 0;
  for (const auto& [key, count] : census)
    if (dominates(key.first, a1.entries()) && dominates(key.second, a2.entries())) total += count;
  return total;
}

/// Number of (r+1)-dimensional subspaces over F_q, in a coordinate model of
/// `profile`, whose vanishing sequences are at least a1 and a2.
inline std::uint64_t count_series(int q, const FlagProfile& profile, int r, const VanishingSeq& a1,
                                  const VanishingSeq& a2, std::uint64_t budget = enumeration_budget()) {
  if (a1.r() != r || a2.r() != r) throw InvalidInput("vanishing sequences must have length r+1");
  if (a1.d() != profile.max_order() || a2.d() != profile.max_order())
    throw InvalidInput("vanishing sequences must be bounded by the profile's max order");
  if (r + 1 > profile.n()) return 0;
  const SmallField F(q);
  return count_in_census(vanishing_census(F, two_flag_model(profile), r + 1, budget), a1, a2);
}

}  // namespace bn
