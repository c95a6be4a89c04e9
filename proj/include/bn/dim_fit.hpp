#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "bn/polynomial.hpp"
#include "bn/sequences.hpp"

namespace bn {

class NoFit : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CountPoint {
  std::int64_t q;
  std::uint64_t count;
};

/// Monomial coefficients of the polynomial of degree < points.size()
/// interpolating the counts, by Newton divided differences over Q.
inline Polynomial interpolate_counts(std::span<const CountPoint> points) {
  const std::size_t m = points.size();
  std::vector<Rational> coef(m);
  for (std::size_t i = 0; i < m; ++i) coef[i] = Rational(static_cast<long long>(points[i].count));
  for (std::size_t level = 1; level < m; ++level)
    for (std::size_t i = m - 1; i >= level; --i)
      coef[i] = (coef[i] - coef[i - 1]) / Rational(points[i].q - points[i - level].q);

  // Expand sum_k coef[k] * prod_{i<k} (x - q_i), Horner style.
  Polynomial out(m, Rational(0));
  for (std::size_t k = m; k-- > 0;) {
    Polynomial shifted(m, Rational(0));
    for (std::size_t e = 0; e + 1 < m; ++e) shifted[e + 1] = out[e];
    for (std::size_t e = 0; e < m; ++e) shifted[e] -= out[e] * Rational(points[k].q);
    shifted[0] += coef[k];
    out = std::move(shifted);
  }
  return out;
}

/// Degree in q of the point count, or nullopt when every count is zero.
///
/// The fit must be exact and over-determined: the interpolating polynomial has
/// integer coefficients and degree at most points-2, so at least one count
/// confirms it. Anything else throws NoFit.
inline std::optional<int> dim_fit(std::span<const CountPoint> points) {
  std::set<std::int64_t> qs;
  for (const auto& pt : points) qs.insert(pt.q);
  if (points.size() < 3 || qs.size() != points.size())
    throw InvalidInput("dim_fit needs counts at three or more distinct q");
  if (std::all_of(points.begin(), points.end(), [](const CountPoint& pt) { return pt.count == 0; }))
    return std::nullopt;

  const auto poly = interpolate_counts(points);
  const auto degree = highest_term(poly);
  if (!degree) return std::nullopt;
  for (const auto& c : poly)
    if (c.denominator() != 1) throw NoFit("point counts are not an integer polynomial in q");
  if (*degree > static_cast<int>(points.size()) - 2)
    throw NoFit("counts at " + std::to_string(points.size()) + " values of q cannot certify degree " +
                std::to_string(*degree) + " or higher");
  return *degree;
}

inline std::optional<int> dim_fit(const std::vector<CountPoint>& points) {
  return dim_fit(std::span<const CountPoint>(points));
}

}  // namespace bn
