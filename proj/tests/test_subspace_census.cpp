#include <gtest/gtest.h>

#include <algorithm>
#include <cstdlib>
#include <set>
#include <vector>

#include "bn/flag_profile.hpp"
#include "bn/subspace_census.hpp"

namespace bn {
namespace {

VanishingSeq vs(int r, int d, std::vector<int> v) { return VanishingSeq(r, d, std::move(v)); }

TEST(SmallField, AxiomsHold) {
  for (int q : {2, 3, 4, 5}) {
    const SmallField F(q);
    using E = SmallField::Element;
    for (int a = 0; a < q; ++a) {
      const auto x = static_cast<E>(a);
      EXPECT_EQ(F.add(x, F.neg(x)), 0);
      EXPECT_EQ(F.mul(x, 1), x);
      if (a != 0) EXPECT_EQ(F.mul(x, F.inv(x)), 1);
      for (int b = 0; b < q; ++b) {
        const auto y = static_cast<E>(b);
        EXPECT_EQ(F.add(x, y), F.add(y, x));
        EXPECT_EQ(F.mul(x, y), F.mul(y, x));
        if (a != 0 && b != 0) EXPECT_NE(F.mul(x, y), 0);
        for (int c = 0; c < q; ++c) {
          const auto z = static_cast<E>(c);
          EXPECT_EQ(F.mul(x, F.add(y, z)), F.add(F.mul(x, y), F.mul(x, z)));
          EXPECT_EQ(F.mul(F.mul(x, y), z), F.mul(x, F.mul(y, z)));
        }
      }
    }
  }
  EXPECT_THROW(SmallField(7), InvalidInput);
}

TEST(GaussianBinomial, KnownValues) {
  EXPECT_EQ(gaussian_binomial(4, 2, 2), 35U);
  EXPECT_EQ(gaussian_binomial(3, 1, 3), 13U);
  EXPECT_EQ(gaussian_binomial(5, 0, 4), 1U);
  EXPECT_EQ(gaussian_binomial(5, 6, 4), 0U);
  EXPECT_EQ(gaussian_binomial(200, 100, 5), std::numeric_limits<std::uint64_t>::max());
}

// Independent oracle: enumerate subspaces as explicit sets of vectors, then test
// dim(V ∩ F_t) through element counts against coordinate subspaces.
std::uint64_t brute_count(int q, const TwoFlagModel& m, int r, const VanishingSeq& a1, const VanishingSeq& a2) {
  const SmallField F(q);
  const int n = m.n;
  const int k = r + 1;
  int qn = 1;
  for (int i = 0; i < n; ++i) qn *= q;
  auto digit = [&](int v, int i) {
    for (int t = 0; t < i; ++t) v /= q;
    return v % q;
  };
  auto combine = [&](int u, int v, int c) {  // u + c v
    int out = 0, place = 1;
    for (int i = 0; i < n; ++i) {
      const auto s = F.add(static_cast<SmallField::Element>(digit(u, i)),
                           F.mul(static_cast<SmallField::Element>(c), static_cast<SmallField::Element>(digit(v, i))));
      out += s * place;
      place *= q;
    }
    return out;
  };
  int qk = 1;
  for (int i = 0; i < k; ++i) qk *= q;

  std::set<std::vector<int>> spaces;
  std::vector<int> gens(static_cast<std::size_t>(k), 0);
  while (true) {
    std::vector<int> span{0};
    for (int g : gens) {
      std::vector<int> grown;
      for (int s : span)
        for (int c = 0; c < q; ++c) grown.push_back(combine(s, g, c));
      std::sort(grown.begin(), grown.end());
      grown.erase(std::unique(grown.begin(), grown.end()), grown.end());
      span = std::move(grown);
    }
    if (static_cast<int>(span.size()) == qk) spaces.insert(span);
    std::size_t i = 0;
    while (i < gens.size() && ++gens[i] == qn) gens[i++] = 0;
    if (i == gens.size()) break;
  }

  auto meets = [&](const std::vector<int>& V, const std::vector<int>& orders, int t, int want_dim) {
    int inside = 0;
    for (int v : V) {
      bool ok = true;
      for (int i = 0; i < n; ++i) ok = ok && (orders[static_cast<std::size_t>(i)] >= t || digit(v, i) == 0);
      inside += ok ? 1 : 0;
    }
    int need = 1;
    for (int t2 = 0; t2 < want_dim; ++t2) need *= q;
    return inside >= need;
  };

  std::uint64_t count = 0;
  for (const auto& V : spaces) {
    bool ok = true;
    for (int j = 0; j <= r; ++j) {
      ok = ok && meets(V, m.order1, a1[static_cast<std::size_t>(j)], k - j);
      ok = ok && meets(V, m.order2, a2[static_cast<std::size_t>(j)], k - j);
    }
    count += ok ? 1 : 0;
  }
  return count;
}

TEST(CountSeries, UnconstrainedIsWholeGrassmannian) {
  const auto prof = profile_complementary(4);
  for (int q : {2, 3, 4, 5})
    EXPECT_EQ(count_series(q, prof, 1, vs(1, 3, {0, 1}), vs(1, 3, {0, 1})), gaussian_binomial(4, 2, q));
}

TEST(CountSeries, GenusZeroExamples) {
  // Complementary pair (0,2)|(1,3) is rigid: exactly one point over every field.
  const auto prof = profile_complementary(4);
  const auto model = two_flag_model(prof);
  for (int q : {2, 3}) {
    EXPECT_EQ(count_series(q, prof, 1, vs(1, 3, {0, 2}), vs(1, 3, {0, 1})),
              brute_count(q, model, 1, vs(1, 3, {0, 2}), vs(1, 3, {0, 1})));
    EXPECT_EQ(count_series(q, prof, 1, vs(1, 3, {0, 2}), vs(1, 3, {1, 3})), 1U);
    EXPECT_EQ(count_series(q, prof, 1, vs(1, 3, {0, 3}), vs(1, 3, {1, 3})), 0U);
  }
}

TEST(CountSeries, AgreesWithSpanOracle) {
  std::vector<FlagProfile> profiles{profile_complementary(3), profile_complementary(4),
                                    profile_g1(LineBundleDescriptor::generic(3)),
                                    profile_g1(LineBundleDescriptor::special(1, 3)),
                                    profile_g1(LineBundleDescriptor::special(3, 3))};
  for (const auto& prof : profiles) {
    const auto model = two_flag_model(prof);
    const int d = prof.max_order();
    for (int r = 0; r <= 1; ++r) {
      const auto seqs = all_vanishing_seqs(r, d);
      for (int q : {2, 3}) {
        const SmallField F(q);
        const auto census = vanishing_census(F, model, r + 1, enumeration_budget());
        for (const auto& a1 : seqs)
          for (const auto& a2 : seqs)
            ASSERT_EQ(count_in_census(census, a1, a2), brute_count(q, model, r, a1, a2))
                << "q=" << q << " n=" << prof.n() << " " << a1.str() << a2.str();
      }
    }
  }
}

TEST(CountSeries, RankBeyondSpaceIsZero) {
  const auto prof = profile_g1(LineBundleDescriptor::generic(2));
  EXPECT_EQ(count_series(2, prof, 2, vs(2, 2, {0, 1, 2}), vs(2, 2, {0, 1, 2})), 0U);
}

TEST(VanishingCensus, BudgetIsEnforced) {
  const auto model = two_flag_model(profile_complementary(8));
  EXPECT_THROW(vanishing_census(SmallField(5), model, 4, 1000), InfeasibleSize);
  EXPECT_THROW(vanishing_census(SmallField(2), two_flag_model(profile_complementary(9)), 2, 1000000),
               InvalidInput);
}

TEST(VanishingCensus, BudgetFromEnvironment) {
  ::setenv("BN_ENUM_BUDGET", "12", 1);
  EXPECT_EQ(enumeration_budget(), 12U);
  EXPECT_THROW(count_series(2, profile_complementary(4), 1, vs(1, 3, {0, 1}), vs(1, 3, {0, 1})), InfeasibleSize);
  ::setenv("BN_ENUM_BUDGET", "lots", 1);
  EXPECT_THROW(enumeration_budget(), InvalidInput);
  ::unsetenv("BN_ENUM_BUDGET");
  EXPECT_EQ(enumeration_budget(), kDefaultEnumerationBudget);
}

}  // namespace
}  // namespace bn
