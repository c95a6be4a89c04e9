#include <gtest/gtest.h>

#include <set>
#include <vector>

#include "bn/criterion.hpp"
#include "bn/strata.hpp"

namespace bn {
namespace {

RamSeq rs(int r, int d, std::vector<int> v) { return RamSeq(r, d, std::move(v)); }

TEST(EhCompatible, Examples) {
  EXPECT_TRUE(eh_compatible(rs(1, 3, {1, 1}), rs(1, 3, {1, 1})));
  EXPECT_FALSE(eh_compatible(rs(1, 3, {0, 0}), rs(1, 3, {0, 0})));
  EXPECT_TRUE(eh_compatible(rs(1, 3, {1, 1}), rs(1, 3, {1, 2})));
}

TEST(RefinedComplement, Examples) {
  EXPECT_EQ(refined_complement(rs(1, 3, {0, 1})), rs(1, 3, {1, 2}));
  EXPECT_EQ(refined_complement(rs(2, 5, {3, 3, 3})), RamSeq::zero(2, 5));
  EXPECT_EQ(refined_complement(rs(1, 3, {1, 1})), rs(1, 3, {1, 1}));
}

TEST(RefinedComplement, IsAnInvolutionAchievingEquality) {
  for (int r = 0; r <= 3; ++r)
    for (int d = r; d <= 8; ++d)
      for (const auto& a : all_ramseqs(r, d)) {
        const auto c = refined_complement(a);
        EXPECT_EQ(refined_complement(c), a);
        EXPECT_EQ(fiber_dim_bound(a, c), 0);
      }
}

TEST(EnumerateRefinedStrata, CountsMatchBruteForce) {
  EXPECT_EQ(enumerate_refined_strata(1, 3).size(), 6U);
  EXPECT_EQ(enumerate_refined_strata(0, 1).size(), 2U);
  for (int r = 0; r <= 4; ++r) EXPECT_EQ(enumerate_refined_strata(r, r).size(), 1U);

  // Independent count: every compatible pair with equality at every j.
  for (int r = 0; r <= 2; ++r)
    for (int d = r; d <= 6; ++d) {
      std::size_t equality_pairs = 0;
      const auto seqs = all_ramseqs(r, d);
      for (const auto& y : seqs)
        for (const auto& z : seqs) {
          bool all_equal = true;
          for (int j = 0; j <= r; ++j)
            all_equal = all_equal && y[static_cast<std::size_t>(j)] + z[static_cast<std::size_t>(r - j)] == d - r;
          if (all_equal) ++equality_pairs;
        }
      const auto strata = enumerate_refined_strata(r, d);
      EXPECT_EQ(strata.size(), equality_pairs);
      EXPECT_EQ(strata.size(), binomial(d + 1, r + 1));
      for (const auto& s : strata) EXPECT_TRUE(s.refined());
    }
}

TEST(FiberDimBound, Examples) {
  EXPECT_EQ(fiber_dim_bound(rs(1, 3, {1, 1}), rs(1, 3, {1, 2})), 1);
  EXPECT_EQ(fiber_dim_bound(rs(1, 3, {2, 2}), rs(1, 3, {2, 2})), 4);
  EXPECT_THROW(fiber_dim_bound(rs(1, 3, {0, 0}), rs(1, 3, {0, 0})), InvalidInput);
  EXPECT_THROW(Stratum(rs(1, 3, {0, 0}), rs(1, 3, {1, 1})), InvalidInput);
}

TEST(FiberDimBound, ZeroExactlyOnRefinedPairs) {
  for (int r = 0; r <= 2; ++r)
    for (int d = r; d <= 6; ++d) {
      const auto seqs = all_ramseqs(r, d);
      for (const auto& y : seqs)
        for (const auto& z : seqs) {
          if (!eh_compatible(y, z)) continue;
          const Stratum s(y, z);
          EXPECT_GE(fiber_dim_bound(s), 0);
          EXPECT_EQ(fiber_dim_bound(s) == 0, s.refined());
        }
    }
}

TEST(StratumExpectedDim, HandEvaluation) {
  const TwoComponentProblem p(1, 2, RamSeq::zero(1, 3), RamSeq::zero(1, 3));
  const Stratum s(rs(1, 3, {1, 1}), rs(1, 3, {1, 1}));
  EXPECT_EQ(rho(1, p.alpha1, s.alphaY()), 1);
  EXPECT_EQ(rho(2, s.alphaZ(), p.alpha2), 0);
  EXPECT_EQ(stratum_expected_dim(p, s), 1);
  EXPECT_EQ(rho(p.glued()) - fiber_dim_bound(s), 1);
}

TEST(StratumExpectedDim, DegenerateRangeIsZero) {
  // d = r: the only stratum is all-zero and every rho vanishes.
  for (int r = 0; r <= 3; ++r) {
    const TwoComponentProblem p(0, 0, RamSeq::zero(r, r), RamSeq::zero(r, r));
    const auto strata = enumerate_refined_strata(r, r);
    ASSERT_EQ(strata.size(), 1U);
    EXPECT_EQ(stratum_expected_dim(p, strata.front()), 0);
  }
  // d > r with zero node ramification is never compatible.
  EXPECT_FALSE(eh_compatible(RamSeq::zero(1, 3), RamSeq::zero(1, 3)));
}

TEST(StratumExpectedDim, BookkeepingIdentityOnGrid) {
  for (int r = 0; r <= 2; ++r)
    for (int d = r; d <= 6; ++d) {
      const auto seqs = all_ramseqs(r, d);
      for (int gY = 0; gY <= 3; ++gY)
        for (int gZ = 0; gZ <= 3; ++gZ)
          for (const auto& a1 : {seqs.front(), seqs.back()})
            for (const auto& a2 : {seqs.front(), seqs[seqs.size() / 2]}) {
              const TwoComponentProblem p(gY, gZ, a1, a2);
              for (const auto& y : seqs)
                for (const auto& z : seqs) {
                  if (!eh_compatible(y, z)) continue;
                  const Stratum s(y, z);
                  ASSERT_EQ(stratum_expected_dim(p, s) + fiber_dim_bound(s), rho(p.glued()));
                }
            }
    }
}

TEST(EhNonemptyTwoComponent, Examples) {
  auto criterion = [](const BNProblem& q) { return nonempty_criterion(q); };
  const TwoComponentProblem empty(1, 1, rs(1, 2, {0, 1}), rs(1, 2, {0, 1}));
  EXPECT_EQ(rho(empty.glued()), -2);
  EXPECT_FALSE(eh_nonempty_two_component(empty, criterion));

  const TwoComponentProblem full(1, 2, RamSeq::zero(1, 3), RamSeq::zero(1, 3));
  EXPECT_TRUE(eh_nonempty_two_component(full, criterion));
  const Stratum balanced(rs(1, 3, {1, 1}), rs(1, 3, {1, 1}));
  EXPECT_TRUE(criterion(full.y_problem(balanced)));
  EXPECT_TRUE(criterion(full.z_problem(balanced)));
  // The scan reports the lexicographically first witness, which is (0,2)|(0,2).
  const auto hit = find_nonempty_stratum(full, criterion);
  ASSERT_TRUE(hit.has_value());
  EXPECT_EQ(hit->alphaY(), rs(1, 3, {0, 2}));

  // Two rational components: the zero node pair is incompatible, but a refined
  // stratum such as (0,0)|(2,2) works, as it must since rho = 4 at g = 0.
  const TwoComponentProblem rational(0, 0, RamSeq::zero(1, 3), RamSeq::zero(1, 3));
  EXPECT_FALSE(eh_compatible(RamSeq::zero(1, 3), RamSeq::zero(1, 3)));
  EXPECT_TRUE(eh_nonempty_two_component(rational, criterion));
  EXPECT_TRUE(nonempty_criterion(rational.glued()));
}

TEST(EhNonemptyTwoComponent, OracleIsInjected) {
  int calls = 0;
  const TwoComponentProblem p(1, 1, RamSeq::zero(1, 3), RamSeq::zero(1, 3));
  EXPECT_FALSE(eh_nonempty_two_component(p, [&](const BNProblem&) {
    ++calls;
    return false;
  }));
  EXPECT_EQ(static_cast<std::size_t>(calls), enumerate_refined_strata(1, 3).size());
}

}  // namespace
}  // namespace bn
