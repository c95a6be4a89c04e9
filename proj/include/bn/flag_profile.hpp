#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "bn/realizers.hpp"
#include "bn/sequences.hpp"

namespace bn {

/// Relative position of two vanishing flags F1, F2 in an n-dimensional space
/// of sections, recorded as h(k1, k2) = dim(F1_{k1} ∩ F2_{k2}) where Fi_k is the
/// subspace vanishing to order >= k at the i-th point. Orders range over
/// [0, max_order]; the table covers k in [0, max_order + 1].
///
/// Construction checks that h(0,0) = n, that h drops by 0 or 1 per step in each
/// argument, vanishes past max_order, and that the pair of flags has a common
/// adapted basis: each basis vector carries one order at each point.
class FlagProfile {
 public:
  FlagProfile(int n, int max_order, std::vector<int> table)
      : n_(n), max_order_(max_order), table_(std::move(table)) {
    if (n < 1) throw InvalidInput("flag profile needs n >= 1");
    if (max_order < n - 1) throw InvalidInput("max_order must be at least n-1");
    const auto w = static_cast<std::size_t>(max_order + 2);
    if (table_.size() != w * w) throw InvalidInput("flag profile table has the wrong size");
    validate();
  }

  int n() const noexcept { return n_; }
  int max_order() const noexcept { return max_order_; }
  int extent() const noexcept { return max_order_ + 2; }

  int operator()(int k1, int k2) const {
    if (k1 < 0) k1 = 0;
    if (k2 < 0) k2 = 0;
    if (k1 >= extent() || k2 >= extent()) return 0;
    return table_[static_cast<std::size_t>(k1 * extent() + k2)];
  }

  /// (order at P1, order at P2) for each vector of a common adapted basis,
  /// sorted by the first order.
  const std::vector<std::pair<int, int>>& adapted_orders() const noexcept { return adapted_; }

  friend bool operator==(const FlagProfile&, const FlagProfile&) = default;

 private:
  void validate() {
    auto bad = [](const std::string& what) { throw InvalidInput("invalid flag profile: " + what); };
    if ((*this)(0, 0) != n_) bad("h(0,0) != n");
    const int e = extent();
    for (int k1 = 0; k1 < e; ++k1) {
      if ((*this)(k1, e - 1) != 0 || (*this)(e - 1, k1) != 0) bad("h must vanish past max_order");
      for (int k2 = 0; k2 < e; ++k2) {
        const int h = (*this)(k1, k2);
        if (h < 0) bad("negative entry");
        const int down1 = h - (*this)(k1 + 1, k2);
        const int down2 = h - (*this)(k1, k2 + 1);
        if (down1 < 0 || down1 > 1 || down2 < 0 || down2 > 1) bad("steps must be 0 or 1");
      }
    }
    adapted_.clear();
    for (int k1 = 0; k1 < e; ++k1) {
      for (int k2 = 0; k2 < e; ++k2) {
        const int m = (*this)(k1, k2) - (*this)(k1 + 1, k2) - (*this)(k1, k2 + 1) + (*this)(k1 + 1, k2 + 1);
        if (m < 0 || m > 1) bad("flags admit no common adapted basis");
        if (m == 1) adapted_.emplace_back(k1, k2);
      }
    }
    if (static_cast<int>(adapted_.size()) != n_) bad("adapted basis has the wrong size");
  }

  int n_;
  int max_order_;
  std::vector<int> table_;
  std::vector<std::pair<int, int>> adapted_;
};

/// Two complementary flags: h(k1, k2) = max(0, n - k1 - k2). This is the
/// genus-0 profile for polynomials of degree <= n-1 at 0 and infinity.
inline FlagProfile profile_complementary(int n) {
  if (n < 1) throw InvalidInput("profile_complementary needs n >= 1");
  const int e = n + 1;
  std::vector<int> t(static_cast<std::size_t>(e * e));
  for (int k1 = 0; k1 < e; ++k1)
    for (int k2 = 0; k2 < e; ++k2) t[static_cast<std::size_t>(k1 * e + k2)] = std::max(0, n - k1 - k2);
  return FlagProfile(n, n - 1, std::move(t));
}

/// Genus-1 profile of H^0(L), n = d, from Riemann-Roch:
///   h(k1,k2) = h^0(L - k1 P1 - k2 P2) = e for e = d-k1-k2 >= 1, 0 for e < 0,
/// and for e = 0 it is 1 exactly when L - k1 P1 - k2 P2 is trivial.
/// For special L = O(a P1 + (d-a) P2) that class is (a-k1)(P1 - P2), and
/// `trivial_class(m)` must say whether m(P1 - P2) is trivial. Generic L never
/// meets a trivial class.
template <class TrivialClass>
FlagProfile profile_g1(const LineBundleDescriptor& L, TrivialClass&& trivial_class) {
  const int d = L.d;
  if (d < 1) throw InvalidInput("genus-1 profile needs d >= 1");
  const int e = d + 2;
  std::vector<int> t(static_cast<std::size_t>(e * e), 0);
  for (int k1 = 0; k1 < e; ++k1) {
    for (int k2 = 0; k2 < e; ++k2) {
      const int deg = d - k1 - k2;
      int h = 0;
      if (deg >= 1) h = deg;
      else if (deg == 0 && L.is_special() && trivial_class(L.a - k1)) h = 1;
      t[static_cast<std::size_t>(k1 * e + k2)] = h;
    }
  }
  return FlagProfile(d, d, std::move(t));
}

/// Genus-1 profile when P1 - P2 is not m-torsion for any m <= d.
inline FlagProfile profile_g1(const LineBundleDescriptor& L) {
  return profile_g1(L, [](int multiple) { return multiple == 0; });
}

}  // namespace bn
