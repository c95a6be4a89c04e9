#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "bn/dim_fit.hpp"
#include "bn/elliptic.hpp"
#include "bn/flag_profile.hpp"
#include "bn/realizers.hpp"
#include "bn/sequences.hpp"
#include "bn/subspace_census.hpp"

namespace bn {

inline const std::vector<int>& default_oracle_fields() {
  static const std::vector<int> qs{2, 3, 4};
  return qs;
}

/// Genus-1 flag profile of H^0(L) on a concrete model; triviality of degree-0
/// classes m(P1 - P2) is decided with the group law.
inline FlagProfile profile_g1(const LineBundleDescriptor& L, const EllipticModel& model) {
  return profile_g1(L, [&](int multiple) { return model.multiple_is_trivial(multiple); });
}

/// generic, O(0P1+dP2), ..., O(dP1+0P2).
inline std::vector<LineBundleDescriptor> g1_descriptors(int d) {
  std::vector<LineBundleDescriptor> out{LineBundleDescriptor::generic(d)};
  for (int a = 0; a <= d; ++a) out.push_back(LineBundleDescriptor::special(a, d));
  return out;
}

/// O(aP1+(d-a)P2) and O(a'P1+(d-a')P2) are isomorphic iff (a-a')(P1-P2) = 0.
inline bool descriptors_coincide(const EllipticModel& model, const LineBundleDescriptor& L,
                                 const LineBundleDescriptor& M) {
  if (!L.is_special() || !M.is_special()) return L == M;
  if (L.d != M.d) return false;
  return model.multiple_is_trivial(L.a - M.a);
}

struct OracleCounts {
  std::vector<CountPoint> counts;
  bool any_nonzero = false;
  std::optional<int> fitted_dim;  // set when the fit is certified
  std::string fit_note;           // NoFit message otherwise
};

inline OracleCounts fit_counts(std::vector<CountPoint> counts) {
  OracleCounts out;
  out.counts = std::move(counts);
  for (const auto& c : out.counts) out.any_nonzero = out.any_nonzero || c.count != 0;
  try {
    out.fitted_dim = dim_fit(out.counts);
  } catch (const NoFit& e) {
    out.fit_note = e.what();
  }
  return out;
}

/// Counts of genus-0 series with vanishing >= a1 at 0 and >= a2 at infinity,
/// over each field in `qs`, with the fitted dimension.
inline OracleCounts g0_oracle(const VanishingSeq& a1, const VanishingSeq& a2,
                              const std::vector<int>& qs = default_oracle_fields(),
                              std::uint64_t budget = enumeration_budget()) {
  const auto profile = profile_complementary(a1.d() + 1);
  std::vector<CountPoint> counts;
  for (int q : qs) counts.push_back({q, count_series(q, profile, a1.r(), a1, a2, budget)});
  return fit_counts(std::move(counts));
}

struct DescriptorScan {
  LineBundleDescriptor bundle;
  OracleCounts fiber;
};

/// Counts of series with vanishing >= a1, a2 inside H^0(L) for every
/// descriptor L, without any torsion assumption on the model.
inline std::vector<DescriptorScan> g1_descriptor_scan(const EllipticModel& model, const VanishingSeq& a1,
                                                      const VanishingSeq& a2,
                                                      const std::vector<int>& qs = default_oracle_fields(),
                                                      std::uint64_t budget = enumeration_budget()) {
  const int d = a1.d();
  if (d < 1) throw InvalidInput("genus-1 oracle needs d >= 1");
  std::vector<DescriptorScan> out;
  for (const auto& L : g1_descriptors(d)) {
    const auto profile = profile_g1(L, model);
    std::vector<CountPoint> counts;
    for (int q : qs) counts.push_back({q, count_series(q, profile, a1.r(), a1, a2, budget)});
    out.push_back({L, fit_counts(std::move(counts))});
  }
  return out;
}

/// Descriptors whose fiber is nonempty.
inline std::vector<LineBundleDescriptor> nonempty_descriptors(const std::vector<DescriptorScan>& scan) {
  std::vector<LineBundleDescriptor> out;
  for (const auto& s : scan)
    if (s.fiber.any_nonzero) out.push_back(s.bundle);
  return out;
}

/// Genus-1 nonemptiness decided by brute force over all descriptors. Requires
/// ord(P1 - P2) > d.
inline bool ec_g1_nonempty(const EllipticModel& model, const BNProblem& p,
                           const std::vector<int>& qs = default_oracle_fields(),
                           std::uint64_t budget = enumeration_budget()) {
  if (p.g != 1) throw InvalidInput("ec_g1_nonempty needs a genus-1 problem");
  if (model.order_diff <= p.d())
    throw InvalidInput("model " + model.name + " has ord(P1-P2)=" + std::to_string(model.order_diff) +
                       " <= d=" + std::to_string(p.d()));
  const auto scan = g1_descriptor_scan(model, to_vanishing(p.alpha1), to_vanishing(p.alpha2), qs, budget);
  return !nonempty_descriptors(scan).empty();
}

}  // namespace bn
