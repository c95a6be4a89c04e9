#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace bn {

/// Raised when caller-supplied data violates a documented invariant.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

namespace detail {

inline void check_shape(int r, int d) {
  if (r < 0) throw InvalidInput("r must be nonnegative, got " + std::to_string(r));
  if (d < r)
    throw InvalidInput("degree d must satisfy d >= r, got r=" + std::to_string(r) +
                       " d=" + std::to_string(d));
}

inline std::string render(const std::vector<int>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s + ")";
}

}  // namespace detail

/// Ramification sequence of a g^r_d at a point: nondecreasing, length r+1,
/// entries in [0, d-r].
class RamSeq {
 public:
  RamSeq(int r, int d, std::vector<int> entries) : r_(r), d_(d), entries_(std::move(entries)) {
    detail::check_shape(r, d);
    if (entries_.size() != static_cast<std::size_t>(r + 1))
      throw InvalidInput("ramification sequence " + detail::render(entries_) + " must have length r+1=" +
                         std::to_string(r + 1));
    for (std::size_t j = 0; j < entries_.size(); ++j) {
      if (entries_[j] < 0 || entries_[j] > d - r)
        throw InvalidInput("ramification sequence " + detail::render(entries_) +
                           " has entry outside [0, d-r]=[0," + std::to_string(d - r) + "]");
      if (j > 0 && entries_[j] < entries_[j - 1])
        throw InvalidInput("ramification sequence " + detail::render(entries_) + " is not nondecreasing");
    }
  }

  static RamSeq zero(int r, int d) { return RamSeq(r, d, std::vector<int>(static_cast<std::size_t>(r + 1), 0)); }

  int r() const noexcept { return r_; }
  int d() const noexcept { return d_; }
  std::size_t size() const noexcept { return entries_.size(); }
  const std::vector<int>& entries() const noexcept { return entries_; }
  int operator[](std::size_t j) const { return entries_[j]; }
  int sum() const { return std::accumulate(entries_.begin(), entries_.end(), 0); }
  std::string str() const { return detail::render(entries_); }

  friend bool operator==(const RamSeq&, const RamSeq&) = default;
  friend auto operator<=>(const RamSeq&, const RamSeq&) = default;

 private:
  int r_;
  int d_;
  std::vector<int> entries_;
};

/// Vanishing orders a_0 < ... < a_r in [0, d].
class VanishingSeq {
 public:
  VanishingSeq(int r, int d, std::vector<int> entries) : r_(r), d_(d), entries_(std::move(entries)) {
    detail::check_shape(r, d);
    if (entries_.size() != static_cast<std::size_t>(r + 1))
      throw InvalidInput("vanishing sequence " + detail::render(entries_) + " must have length r+1=" +
                         std::to_string(r + 1));
    for (std::size_t j = 0; j < entries_.size(); ++j) {
      if (entries_[j] < 0 || entries_[j] > d)
        throw InvalidInput("vanishing sequence " + detail::render(entries_) + " has entry outside [0, d]");
      if (j > 0 && entries_[j] <= entries_[j - 1])
        throw InvalidInput("vanishing sequence " + detail::render(entries_) + " is not strictly increasing");
    }
  }

  int r() const noexcept { return r_; }
  int d() const noexcept { return d_; }
  std::size_t size() const noexcept { return entries_.size(); }
  const std::vector<int>& entries() const noexcept { return entries_; }
  int operator[](std::size_t j) const { return entries_[j]; }
  std::string str() const { return detail::render(entries_); }

  friend bool operator==(const VanishingSeq&, const VanishingSeq&) = default;
  friend auto operator<=>(const VanishingSeq&, const VanishingSeq&) = default;

 private:
  int r_;
  int d_;
  std::vector<int> entries_;
};

inline VanishingSeq to_vanishing(const RamSeq& alpha) {
  std::vector<int> a(alpha.entries());
  for (std::size_t j = 0; j < a.size(); ++j) a[j] += static_cast<int>(j);
  return VanishingSeq(alpha.r(), alpha.d(), std::move(a));
}

inline RamSeq to_ramification(const VanishingSeq& a) {
  std::vector<int> alpha(a.entries());
  for (std::size_t j = 0; j < alpha.size(); ++j) alpha[j] -= static_cast<int>(j);
  return RamSeq(a.r(), a.d(), std::move(alpha));
}

/// A two-point Brill-Noether question: g^r_d's on a genus-g curve with
/// ramification at least alpha1 at P1 and alpha2 at P2.
struct BNProblem {
  int g;
  RamSeq alpha1;
  RamSeq alpha2;

  BNProblem(int genus, RamSeq a1, RamSeq a2) : g(genus), alpha1(std::move(a1)), alpha2(std::move(a2)) {
    if (g < 0) throw InvalidInput("genus must be nonnegative, got " + std::to_string(g));
    if (alpha1.r() != alpha2.r() || alpha1.d() != alpha2.d())
      throw InvalidInput("ramification sequences must share (r, d)");
  }

  /// Unramified problem at both points.
  static BNProblem classical(int g, int r, int d) { return {g, RamSeq::zero(r, d), RamSeq::zero(r, d)}; }

  int r() const noexcept { return alpha1.r(); }
  int d() const noexcept { return alpha1.d(); }

  friend bool operator==(const BNProblem&, const BNProblem&) = default;
};

inline std::uint64_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t out = 1;
  for (int i = 1; i <= k; ++i) out = out * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return out;
}

/// All valid ramification sequences in context (r, d), in lexicographic order.
inline std::vector<RamSeq> all_ramseqs(int r, int d) {
  detail::check_shape(r, d);
  std::vector<RamSeq> out;
  std::vector<int> cur(static_cast<std::size_t>(r + 1), 0);
  const int top = d - r;
  while (true) {
    out.emplace_back(r, d, cur);
    // Advance as a nondecreasing odometer.
    int j = r;
    while (j >= 0 && cur[static_cast<std::size_t>(j)] == top) --j;
    if (j < 0) break;
    const int v = cur[static_cast<std::size_t>(j)] + 1;
    for (int k = j; k <= r; ++k) cur[static_cast<std::size_t>(k)] = v;
  }
  return out;
}

inline std::vector<VanishingSeq> all_vanishing_seqs(int r, int d) {
  std::vector<VanishingSeq> out;
  for (const auto& alpha : all_ramseqs(r, d)) out.push_back(to_vanishing(alpha));
  return out;
}

}  // namespace bn
