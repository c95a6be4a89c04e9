#include <gtest/gtest.h>

#include "bn/chain.hpp"
#include "bn/criterion.hpp"

namespace bn {
namespace {

BNProblem problem(int g, int r, int d, std::vector<int> a1, std::vector<int> a2) {
  return {g, RamSeq(r, d, std::move(a1)), RamSeq(r, d, std::move(a2))};
}

TEST(Rho, DirectEvaluation) {
  EXPECT_EQ(rho(BNProblem::classical(4, 1, 3)), 0);
  EXPECT_EQ(rho(problem(1, 1, 2, {0, 1}, {0, 1})), -1);
  EXPECT_EQ(rho(BNProblem::classical(3, 1, 3)), 1);
}

TEST(NonemptyCriterion, NegativeRhoIsEmpty) {
  EXPECT_FALSE(nonempty_criterion(problem(1, 1, 2, {0, 1}, {0, 1})));
}

TEST(NonemptyCriterion, TightCaseRealizedByChain) {
  const auto p = problem(2, 1, 3, {1, 1}, {0, 0});
  EXPECT_EQ(criterion_sum(p), 2);
  EXPECT_TRUE(nonempty_criterion(p));
  const auto w = build_chain(p);
  ASSERT_TRUE(w.has_value());
  EXPECT_TRUE(verify_chain(*w, p).ok);
}

TEST(NonemptyCriterion, ClassicalZeroRho) {
  EXPECT_TRUE(nonempty_criterion(BNProblem::classical(4, 1, 3)));
}

TEST(NonemptyCriterion, EmptyIndexSetIsTriviallyTrue) {
  // Genus 0, no pair reaches d+1: the sum is empty.
  const auto p = problem(0, 1, 3, {0, 0}, {0, 0});
  EXPECT_EQ(criterion_sum(p), 0);
  EXPECT_TRUE(nonempty_criterion(p));
}

TEST(NonemptyCriterion, SummandPairsAlpha1WithReversedAlpha2) {
  // j=1 is the only index entering: 2+0+1 = 3 >= d+1-g. Pairing alpha2 by the
  // same index would give summand 2+1+1-3+1 = 2 and declare this empty, but the
  // explicit genus-1 analysis finds O(3P1) carrying vanishing (0,3) | (0,2).
  const auto p = problem(1, 1, 3, {0, 2}, {0, 1});
  EXPECT_EQ(criterion_sum(p), 1);
  EXPECT_TRUE(nonempty_criterion(p));
  const auto L = realize_g1(to_vanishing(p.alpha1), to_vanishing(p.alpha2));
  ASSERT_TRUE(L.has_value());
  EXPECT_EQ(*L, LineBundleDescriptor::special(3, 3));
}

class CriterionGrid : public ::testing::Test {
 protected:
  template <class F>
  static void for_each_problem(int max_g, int max_r, int max_d, F&& f) {
    for (int r = 0; r <= max_r; ++r)
      for (int d = r; d <= max_d; ++d) {
        const auto seqs = all_ramseqs(r, d);
        for (int g = 0; g <= max_g; ++g)
          for (const auto& a1 : seqs)
            for (const auto& a2 : seqs) f(BNProblem{g, a1, a2});
      }
  }
};

TEST_F(CriterionGrid, ImpliesNonnegativeRho) {
  for_each_problem(6, 3, 8, [](const BNProblem& p) {
    if (nonempty_criterion(p)) ASSERT_GE(rho(p), 0) << "g=" << p.g << " " << p.alpha1.str() << p.alpha2.str();
  });
}

TEST_F(CriterionGrid, UnramifiedCaseIsRhoNonnegative) {
  for (int g = 0; g <= 6; ++g)
    for (int r = 0; r <= 3; ++r)
      for (int d = r; d <= 8; ++d) {
        const auto p = BNProblem::classical(g, r, d);
        EXPECT_EQ(nonempty_criterion(p), rho(p) >= 0) << "g=" << g << " r=" << r << " d=" << d;
      }
}

TEST_F(CriterionGrid, SymmetricInTheTwoPoints) {
  for_each_problem(5, 3, 7, [](const BNProblem& p) {
    const BNProblem swapped{p.g, p.alpha2, p.alpha1};
    ASSERT_EQ(criterion_sum(p), criterion_sum(swapped));
    ASSERT_EQ(rho(p), rho(swapped));
  });
}

}  // namespace
}  // namespace bn
