#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bn/polynomial.hpp"
#include "bn/sequences.hpp"

namespace bn {

// Base cases. In genus 0 the two marked points are 0 and infinity on P^1,
// sections of O(d) are polynomials of degree <= d, the order of vanishing at 0
// is the lowest exponent and at infinity it is d - degree.

class DegenerateBasis : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct G0Series {
  int d = 0;
  std::vector<Polynomial> basis;  // r+1 polynomials, each with d+1 coefficients

  int r() const { return static_cast<int>(basis.size()) - 1; }
};

struct VanishingPair {
  VanishingSeq at_zero;
  VanishingSeq at_infinity;
};

/// Exact vanishing sequences of span(basis) at 0 and at infinity.
inline VanishingPair g0_vanishing_check(const G0Series& s) {
  if (s.basis.empty()) throw DegenerateBasis("empty basis");
  const int n = s.d + 1;
  std::vector<Polynomial> rows;
  for (const auto& f : s.basis) {
    if (static_cast<int>(f.size()) > n && highest_term(f).value_or(0) > s.d)
      throw InvalidInput("basis polynomial exceeds degree d=" + std::to_string(s.d));
    Polynomial padded(f);
    padded.resize(static_cast<std::size_t>(n), Rational(0));
    rows.push_back(std::move(padded));
  }
  std::vector<int> ascending(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) ascending[static_cast<std::size_t>(k)] = k;
  std::vector<int> descending(ascending.rbegin(), ascending.rend());

  auto low = echelon_pivots(rows, ascending);
  auto high = echelon_pivots(rows, descending);
  if (!low || !high) throw DegenerateBasis("basis polynomials are linearly dependent");

  std::vector<int> at_inf;
  for (int deg : *high) at_inf.push_back(s.d - deg);  // descending degrees give ascending orders
  const int r = s.r();
  return {VanishingSeq(r, s.d, std::move(*low)), VanishingSeq(r, s.d, std::move(at_inf))};
}

/// Genus-0 series with exact vanishing a1_j at 0 and a2_{r-j} at infinity on
/// the j-th basis element, or nullopt when some a1_j + a2_{r-j} > d.
/// Basis element j is x^{a1_j} (1 + x^e) with e = d - a1_j - a2_{r-j}
/// (just x^{a1_j} when e = 0).
inline std::optional<G0Series> realize_g0(const VanishingSeq& a1, const VanishingSeq& a2) {
  if (a1.r() != a2.r() || a1.d() != a2.d()) throw InvalidInput("vanishing sequences must share (r, d)");
  const int r = a1.r();
  const int d = a1.d();
  G0Series out{d, {}};
  for (int j = 0; j <= r; ++j) {
    const int low = a1[static_cast<std::size_t>(j)];
    const int e = d - low - a2[static_cast<std::size_t>(r - j)];
    if (e < 0) return std::nullopt;
    Polynomial f(static_cast<std::size_t>(d + 1), Rational(0));
    f[static_cast<std::size_t>(low)] += 1;
    if (e > 0) f[static_cast<std::size_t>(low + e)] += 1;
    out.basis.push_back(std::move(f));
  }
  return out;
}

inline std::optional<G0Series> realize_g0(int r, int d, const VanishingSeq& a1, const VanishingSeq& a2) {
  if (a1.r() != r || a1.d() != d) throw InvalidInput("vanishing sequences do not match (r, d)");
  return realize_g0(a1, a2);
}

/// Closed-form dimension of the genus-0 locus: sum_j (d - a1_j - a2_{r-j}),
/// or nullopt when it is empty.
inline std::optional<int> richardson_dim(int d, const VanishingSeq& a1, const VanishingSeq& a2) {
  if (a1.r() != a2.r() || a1.d() != d || a2.d() != d) throw InvalidInput("vanishing sequences do not match d");
  const int r = a1.r();
  int total = 0;
  for (int j = 0; j <= r; ++j) {
    const int room = d - a1[static_cast<std::size_t>(j)] - a2[static_cast<std::size_t>(r - j)];
    if (room < 0) return std::nullopt;
    total += room;
  }
  return total;
}

/// Degree-d line bundle on an elliptic curve with marked points P1, P2:
/// either O(a P1 + (d-a) P2) for some 0 <= a <= d, or none of these.
struct LineBundleDescriptor {
  enum class Kind { special, generic };

  Kind kind = Kind::generic;
  int a = 0;
  int d = 0;

  static LineBundleDescriptor special(int a, int d) {
    if (d < 0 || a < 0 || a > d)
      throw InvalidInput("special descriptor needs 0 <= a <= d, got a=" + std::to_string(a) +
                         " d=" + std::to_string(d));
    return {Kind::special, a, d};
  }
  static LineBundleDescriptor generic(int d) {
    if (d < 0) throw InvalidInput("degree must be nonnegative");
    return {Kind::generic, 0, d};
  }

  bool is_special() const noexcept { return kind == Kind::special; }
  std::string str() const {
    return is_special() ? "O(" + std::to_string(a) + "P1+" + std::to_string(d - a) + "P2)" : "generic";
  }

  friend bool operator==(const LineBundleDescriptor&, const LineBundleDescriptor&) = default;
};

enum class MarkedPoint { P1, P2 };

/// Vanishing sequence of the complete series |L| at a marked point:
/// 0..d-2,d when L = O(dP), otherwise 0..d-1.
inline VanishingSeq classify_g1_vanishing(const LineBundleDescriptor& L, MarkedPoint at) {
  const int d = L.d;
  if (d < 1) throw InvalidInput("genus-1 classification needs d >= 1");
  const bool concentrated =
      L.is_special() && ((at == MarkedPoint::P1 && L.a == d) || (at == MarkedPoint::P2 && L.a == 0));
  std::vector<int> orders(static_cast<std::size_t>(d));
  for (int k = 0; k < d; ++k) orders[static_cast<std::size_t>(k)] = k;
  if (concentrated) orders.back() = d;
  return VanishingSeq(d - 1, d, std::move(orders));
}

/// Line bundle carrying the genus-1 series, or nullopt when none exists on a
/// curve whose marked points do not differ by m-torsion for m <= d.
inline std::optional<LineBundleDescriptor> realize_g1(const VanishingSeq& a1, const VanishingSeq& a2) {
  if (a1.r() != a2.r() || a1.d() != a2.d()) throw InvalidInput("vanishing sequences must share (r, d)");
  const int r = a1.r();
  const int d = a1.d();
  std::optional<int> tight;
  for (int j = 0; j <= r; ++j) {
    const int total = a1[static_cast<std::size_t>(j)] + a2[static_cast<std::size_t>(r - j)];
    if (total > d) return std::nullopt;
    if (total == d) {
      if (tight) return std::nullopt;
      tight = a1[static_cast<std::size_t>(j)];
    }
  }
  if (tight) return LineBundleDescriptor::special(*tight, d);
  return LineBundleDescriptor::generic(d);
}

inline std::optional<LineBundleDescriptor> realize_g1(int r, int d, const VanishingSeq& a1, const VanishingSeq& a2) {
  if (a1.r() != r || a1.d() != d) throw InvalidInput("vanishing sequences do not match (r, d)");
  return realize_g1(a1, a2);
}

}  // namespace bn
