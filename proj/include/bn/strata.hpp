#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "bn/criterion.hpp"
#include "bn/sequences.hpp"

namespace bn {

// Eisenbud-Harris limit series on a curve Y u_Q Z: a series on each component,
// with ramification alphaY at the node on Y and alphaZ at the node on Z.

inline bool eh_compatible(const RamSeq& alphaY, const RamSeq& alphaZ) {
  if (alphaY.r() != alphaZ.r() || alphaY.d() != alphaZ.d()) return false;
  const int r = alphaY.r();
  const int slack = alphaY.d() - r;
  for (int j = 0; j <= r; ++j)
    if (alphaY[static_cast<std::size_t>(j)] + alphaZ[static_cast<std::size_t>(r - j)] < slack) return false;
  return true;
}

/// The unique node sequence on the other component achieving equality
/// alphaY_j + alphaZ_{r-j} = d - r for every j.
inline RamSeq refined_complement(const RamSeq& alphaY) {
  const int r = alphaY.r();
  const int d = alphaY.d();
  std::vector<int> out(static_cast<std::size_t>(r + 1));
  for (int j = 0; j <= r; ++j) out[static_cast<std::size_t>(j)] = d - r - alphaY[static_cast<std::size_t>(r - j)];
  return RamSeq(r, d, std::move(out));
}

/// sum_j (alphaY_j + alphaZ_{r-j} - (d-r)); throws on incompatible pairs.
inline int fiber_dim_bound(const RamSeq& alphaY, const RamSeq& alphaZ) {
  if (!eh_compatible(alphaY, alphaZ))
    throw InvalidInput("node sequences " + alphaY.str() + " and " + alphaZ.str() + " are not EH-compatible");
  const int r = alphaY.r();
  int total = 0;
  for (int j = 0; j <= r; ++j)
    total += alphaY[static_cast<std::size_t>(j)] + alphaZ[static_cast<std::size_t>(r - j)] - (alphaY.d() - r);
  return total;
}

/// A compatible pair of node ramification sequences.
class Stratum {
 public:
  Stratum(RamSeq alphaY, RamSeq alphaZ) : alphaY_(std::move(alphaY)), alphaZ_(std::move(alphaZ)) {
    excess_ = fiber_dim_bound(alphaY_, alphaZ_);
  }

  const RamSeq& alphaY() const noexcept { return alphaY_; }
  const RamSeq& alphaZ() const noexcept { return alphaZ_; }
  bool refined() const noexcept { return excess_ == 0; }
  int r() const noexcept { return alphaY_.r(); }
  int d() const noexcept { return alphaY_.d(); }

  friend bool operator==(const Stratum&, const Stratum&) = default;

 private:
  RamSeq alphaY_;
  RamSeq alphaZ_;
  int excess_ = 0;
};

inline int fiber_dim_bound(const Stratum& s) { return fiber_dim_bound(s.alphaY(), s.alphaZ()); }

/// Refined strata, ordered lexicographically by alphaY. There are C(d+1, r+1).
inline std::vector<Stratum> enumerate_refined_strata(int r, int d) {
  std::vector<Stratum> out;
  for (auto& alphaY : all_ramseqs(r, d)) {
    auto alphaZ = refined_complement(alphaY);
    out.emplace_back(std::move(alphaY), std::move(alphaZ));
  }
  return out;
}

/// Y carries P1 (ramification alpha1), Z carries P2 (alpha2); glued at Q.
struct TwoComponentProblem {
  int gY;
  int gZ;
  RamSeq alpha1;
  RamSeq alpha2;

  TwoComponentProblem(int genusY, int genusZ, RamSeq a1, RamSeq a2)
      : gY(genusY), gZ(genusZ), alpha1(std::move(a1)), alpha2(std::move(a2)) {
    if (gY < 0 || gZ < 0) throw InvalidInput("component genera must be nonnegative");
    if (alpha1.r() != alpha2.r() || alpha1.d() != alpha2.d())
      throw InvalidInput("ramification sequences must share (r, d)");
  }

  int r() const noexcept { return alpha1.r(); }
  int d() const noexcept { return alpha1.d(); }

  BNProblem glued() const { return {gY + gZ, alpha1, alpha2}; }
  BNProblem y_problem(const Stratum& s) const { return {gY, alpha1, s.alphaY()}; }
  BNProblem z_problem(const Stratum& s) const { return {gZ, s.alphaZ(), alpha2}; }
};

/// rho_{Y;alphaY} + rho_{Z;alphaZ}.
inline int stratum_expected_dim(const TwoComponentProblem& p, const Stratum& s) {
  return rho(p.gY, p.alpha1, s.alphaY()) + rho(p.gZ, s.alphaZ(), p.alpha2);
}

/// First refined stratum (in enumeration order) on which both component
/// problems are nonempty according to `component_nonempty(const BNProblem&)`.
template <class Oracle>
std::optional<Stratum> find_nonempty_stratum(const TwoComponentProblem& p, Oracle&& component_nonempty) {
  for (auto& s : enumerate_refined_strata(p.r(), p.d())) {
    if (component_nonempty(p.y_problem(s)) && component_nonempty(p.z_problem(s))) return s;
  }
  return std::nullopt;
}

template <class Oracle>
bool eh_nonempty_two_component(const TwoComponentProblem& p, Oracle&& component_nonempty) {
  return find_nonempty_stratum(p, std::forward<Oracle>(component_nonempty)).has_value();
}

}  // namespace bn
