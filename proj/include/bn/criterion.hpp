#pragma once

#include <cstddef>

#include "bn/sequences.hpp"

namespace bn {

/// Expected dimension (r+1)(d-r) - r*g - sum(alpha1) - sum(alpha2) of the
/// g^r_d's on a genus-g curve with ramification alpha1, alpha2 at two points.
/// May be negative.
inline int rho(int g, const RamSeq& alpha1, const RamSeq& alpha2) {
  const int r = alpha1.r();
  const int d = alpha1.d();
  return (r + 1) * (d - r) - r * g - alpha1.sum() - alpha2.sum();
}

inline int rho(const BNProblem& p) { return rho(p.g, p.alpha1, p.alpha2); }

/// Left side of the sharp two-point inequality:
///   sum over { j : alpha1_j + alpha2_{r-j} + r >= d+1-g } of (alpha1_j + alpha2_{r-j} + r - d + g).
/// Each summand is >= 1 on the index set; an empty index set gives 0.
inline int criterion_sum(const BNProblem& p) {
  const int r = p.r();
  const int d = p.d();
  int total = 0;
  for (int j = 0; j <= r; ++j) {
    const int pair = p.alpha1[static_cast<std::size_t>(j)] + p.alpha2[static_cast<std::size_t>(r - j)] + r;
    if (pair >= d + 1 - p.g) total += pair - d + p.g;
  }
  return total;
}

/// True iff a general two-pointed genus-g curve carries a g^r_d with the
/// prescribed ramification.
inline bool nonempty_criterion(const BNProblem& p) { return criterion_sum(p) <= p.g; }

}  // namespace bn
