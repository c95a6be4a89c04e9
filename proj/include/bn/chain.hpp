#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bn/criterion.hpp"
#include "bn/realizers.hpp"
#include "bn/sequences.hpp"
#include "bn/strata.hpp"

namespace bn {

class ConstructionFailed : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// One component of a chain: genus 0 or 1, ramification at its left point
/// (toward P1) and right point (toward P2).
struct ChainComponent {
  int genus = 1;
  RamSeq left_ram;
  RamSeq right_ram;
  int component_rho = 0;

  friend bool operator==(const ChainComponent&, const ChainComponent&) = default;
};

struct ChainWitness {
  int r = 0;
  int d = 0;
  std::vector<ChainComponent> components;
  int total_rho = 0;

  friend bool operator==(const ChainWitness&, const ChainWitness&) = default;
};

struct NodeSplit {
  RamSeq alphaY;
  RamSeq alphaZ;
};

namespace detail {

inline bool split_validates(const BNProblem& p, const RamSeq& alphaY) {
  return nonempty_criterion(BNProblem{1, p.alpha1, alphaY}) &&
         nonempty_criterion(BNProblem{p.g - 1, refined_complement(alphaY), p.alpha2});
}

/// Builds a RamSeq from raw slot values if they form one, otherwise nullopt.
inline std::optional<RamSeq> as_ramseq(int r, int d, const std::vector<int>& v) {
  for (std::size_t j = 0; j < v.size(); ++j) {
    if (v[j] < 0 || v[j] > d - r) return std::nullopt;
    if (j > 0 && v[j] < v[j - 1]) return std::nullopt;
  }
  return RamSeq(r, d, v);
}

}  // namespace detail

/// Splits off an elliptic tail at P1: returns node sequences (alphaY, alphaZ)
/// with alphaZ the refined complement of alphaY, such that (1, alpha1, alphaY)
/// and (g-1, alphaZ, alpha2) both satisfy the nonemptiness criterion.
///
/// The closed-form candidate is alphaY_j = d-r-1-alpha1_{r-j}, with slot j0 (the
/// first index entering the criterion sum) raised by one when the criterion is
/// tight. If that candidate is not a valid sequence or does not validate, the
/// lexicographically smallest validating member of the family
///   { sort(clamp(base_j + e_j)) : e_j in {0,1}, at most one e_j = 1 }
/// is used, and failing that the smallest validating sequence overall.
inline NodeSplit split_once(const BNProblem& p) {
  if (p.g < 2) throw InvalidInput("split_once needs g >= 2, got g=" + std::to_string(p.g));
  if (!nonempty_criterion(p))
    throw InvalidInput("split_once needs a problem satisfying the nonemptiness criterion");
  const int r = p.r();
  const int d = p.d();
  const auto ur = static_cast<std::size_t>(r);

  std::vector<int> base(ur + 1);
  for (std::size_t j = 0; j <= ur; ++j) base[j] = d - r - 1 - p.alpha1[ur - j];

  auto accept = [&](const RamSeq& alphaY) -> NodeSplit { return {alphaY, refined_complement(alphaY)}; };

  std::vector<int> closed(base);
  if (criterion_sum(p) == p.g) {
    for (int j = 0; j <= r; ++j) {
      const int pair = p.alpha1[static_cast<std::size_t>(j)] + p.alpha2[static_cast<std::size_t>(r - j)] + r;
      if (pair >= d + 1 - p.g) {
        closed[static_cast<std::size_t>(j)] += 1;
        break;
      }
    }
  }
  for (auto& v : closed) v = std::max(v, 0);
  if (auto cand = detail::as_ramseq(r, d, closed); cand && detail::split_validates(p, *cand)) return accept(*cand);

  std::vector<RamSeq> family;
  for (int raised = -1; raised <= r; ++raised) {
    std::vector<int> v(base);
    if (raised >= 0) v[static_cast<std::size_t>(raised)] += 1;
    for (auto& x : v) x = std::clamp(x, 0, d - r);
    std::sort(v.begin(), v.end());
    family.emplace_back(r, d, std::move(v));
  }
  std::sort(family.begin(), family.end());
  for (const auto& cand : family)
    if (detail::split_validates(p, cand)) return accept(cand);

  for (const auto& cand : all_ramseqs(r, d))
    if (detail::split_validates(p, cand)) return accept(cand);

  throw ConstructionFailed("no node sequence splits g=" + std::to_string(p.g) + " alpha1=" + p.alpha1.str() +
                           " alpha2=" + p.alpha2.str());
}

/// Chain of max(g,1) components realizing p, or nullopt when p fails the
/// nonemptiness criterion. Components have genus 1 except for g = 0.
inline std::optional<ChainWitness> build_chain(const BNProblem& p) {
  if (!nonempty_criterion(p)) return std::nullopt;
  ChainWitness w{p.r(), p.d(), {}, 0};
  BNProblem rest = p;
  while (rest.g >= 2) {
    auto split = split_once(rest);
    w.components.push_back({1, rest.alpha1, split.alphaY, rho(1, rest.alpha1, split.alphaY)});
    rest = BNProblem{rest.g - 1, std::move(split.alphaZ), rest.alpha2};
  }
  w.components.push_back({rest.g, rest.alpha1, rest.alpha2, rho(rest)});
  for (const auto& c : w.components) w.total_rho += c.component_rho;
  return w;
}

struct ChainVerdict {
  bool ok = true;
  std::vector<std::string> violations;

  explicit operator bool() const noexcept { return ok; }
};

/// Re-checks every chain invariant from scratch. Base-case admissibility of each
/// component is decided by the explicit genus-0/1 realizers.
inline ChainVerdict verify_chain(const ChainWitness& w, const BNProblem& p) {
  ChainVerdict v;
  auto fail = [&](std::string msg) {
    v.ok = false;
    v.violations.push_back(std::move(msg));
  };

  if (w.r != p.r() || w.d != p.d()) fail("witness (r,d) does not match the problem");
  if (w.components.empty()) {
    fail("witness has no components");
    return v;
  }
  const std::size_t expected = static_cast<std::size_t>(std::max(p.g, 1));
  if (w.components.size() != expected)
    fail("expected " + std::to_string(expected) + " components, found " + std::to_string(w.components.size()));

  int genus_total = 0;
  int rho_total = 0;
  for (std::size_t i = 0; i < w.components.size(); ++i) {
    const auto& c = w.components[i];
    const std::string tag = "component " + std::to_string(i) + ": ";
    if (c.left_ram.r() != w.r || c.left_ram.d() != w.d || c.right_ram.r() != w.r || c.right_ram.d() != w.d) {
      fail(tag + "ramification context differs from witness (r,d)");
      continue;
    }
    if (c.genus != 0 && c.genus != 1) fail(tag + "genus must be 0 or 1");
    if (p.g >= 1 && c.genus != 1) fail(tag + "chains for g >= 1 use elliptic components only");
    const int expected_rho = rho(c.genus, c.left_ram, c.right_ram);
    if (c.component_rho != expected_rho)
      fail(tag + "component rho " + std::to_string(c.component_rho) + " != " + std::to_string(expected_rho));
    const auto a1 = to_vanishing(c.left_ram);
    const auto a2 = to_vanishing(c.right_ram);
    const bool admissible = c.genus == 0 ? realize_g0(a1, a2).has_value() : realize_g1(a1, a2).has_value();
    if (!admissible) fail(tag + "no genus-" + std::to_string(c.genus) + " series with ramification " +
                          c.left_ram.str() + " | " + c.right_ram.str());
    genus_total += c.genus;
    rho_total += c.component_rho;

    if (i + 1 < w.components.size()) {
      const auto& next = w.components[i + 1].left_ram;
      const int r = w.r;
      for (int j = 0; j <= r && next.size() == c.right_ram.size(); ++j) {
        if (c.right_ram[static_cast<std::size_t>(j)] + next[static_cast<std::size_t>(r - j)] != w.d - r) {
          fail("node " + std::to_string(i) + ": " + c.right_ram.str() + " and " + next.str() +
               " are not refined complements");
          break;
        }
      }
    }
  }

  if (genus_total != p.g) fail("component genera sum to " + std::to_string(genus_total) + ", expected " +
                               std::to_string(p.g));
  if (w.components.front().left_ram != p.alpha1) fail("first component does not carry alpha1 at P1");
  if (w.components.back().right_ram != p.alpha2) fail("last component does not carry alpha2 at P2");
  if (w.total_rho != rho_total) fail("total rho " + std::to_string(w.total_rho) + " != component sum " +
                                     std::to_string(rho_total));
  if (w.total_rho != rho(p)) fail("total rho " + std::to_string(w.total_rho) + " != rho(problem) " +
                                  std::to_string(rho(p)));
  return v;
}

}  // namespace bn
