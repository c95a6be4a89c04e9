#include <gtest/gtest.h>

#include "bn/elliptic.hpp"
#include "bn/json_io.hpp"

namespace bn {
namespace {

// p + 1 + sum over x of the Legendre symbol of x^3 + Ax + B.
std::int64_t legendre_count(std::int64_t p, std::int64_t A, std::int64_t B) {
  auto pow_mod = [p](std::int64_t b, std::int64_t e) {
    std::int64_t r = 1;
    b %= p;
    for (; e > 0; e >>= 1, b = b * b % p)
      if (e & 1) r = r * b % p;
    return r;
  };
  std::int64_t total = p + 1;
  for (std::int64_t x = 0; x < p; ++x) {
    const std::int64_t v = ((x * x % p * x + A * x + B) % p + p) % p;
    if (v == 0) continue;
    total += pow_mod(v, (p - 1) / 2) == 1 ? 1 : -1;
  }
  return total;
}

TEST(EllipticCurve, PointCountMatchesCharacterSum) {
  for (std::int64_t p : {5, 7, 11, 13, 53})
    for (std::int64_t A = 0; A < 3; ++A)
      for (std::int64_t B = 1; B < 4; ++B) {
        if ((4 * A * A * A + 27 * B * B) % p == 0) continue;
        const EllipticCurve E(p, A, B);
        EXPECT_EQ(static_cast<std::int64_t>(E.points().size()), legendre_count(p, A, B)) << p << " " << A << " " << B;
      }
}

TEST(EllipticCurve, GroupAxioms) {
  EXPECT_EQ(check_group_axioms(EllipticCurve(53, 0, 1)), std::nullopt);
  EXPECT_EQ(check_group_axioms(EllipticCurve(13, 2, 3), 20), std::nullopt);
}

TEST(EllipticCurve, OrdersDivideGroupOrder) {
  const EllipticCurve E(53, 0, 1);
  const auto pts = E.points();
  const auto n = static_cast<std::int64_t>(pts.size());
  for (const auto& P : pts) {
    EXPECT_EQ(n % E.order(P), 0);
    EXPECT_TRUE(E.multiply(n, P).infinity);
  }
  EXPECT_EQ(E.order(EcPoint::at_infinity()), 1);
}

TEST(EllipticCurve, RejectsBadParameters) {
  EXPECT_THROW(EllipticCurve(51, 0, 1), InvalidInput);
  EXPECT_THROW(EllipticCurve(53, 0, 0), InvalidInput);
  const EllipticCurve E(53, 0, 1);
  EXPECT_THROW(EllipticModel("bad", E, EcPoint::affine(1, 1), EcPoint::affine(0, 1)), InvalidInput);
}

TEST(EcOrderDiff, Examples) {
  const EllipticCurve E(53, 0, 1);
  const auto P = EcPoint::affine(0, 1);
  EXPECT_EQ(ec_order_diff(EllipticModel("same", E, P, P)), 1);
  // (-1, 0) is 2-torsion on y^2 = x^3 + 1.
  const auto T = EcPoint::affine(52, 0);
  EXPECT_EQ(E.order(T), 2);
  EXPECT_EQ(ec_order_diff(EllipticModel("two", E, E.add(P, T), P)), 2);
  const EllipticModel general("general", E, EcPoint::affine(3, 9), P);
  EXPECT_GT(ec_order_diff(general), 8);
  EXPECT_FALSE(general.multiple_is_trivial(8));
  EXPECT_TRUE(general.multiple_is_trivial(0));
}

TEST(Fixtures, FileMatchesDeterministicSearch) {
  const auto fx = io::load_fixtures(BN_DEFAULT_FIXTURES);
  const auto general = search_general_model(50, 8);
  const auto torsion = search_torsion_model(53, 2);
  EXPECT_EQ(fx.general.curve.p(), general.curve.p());
  EXPECT_EQ(fx.general.curve.A(), general.curve.A());
  EXPECT_EQ(fx.general.curve.B(), general.curve.B());
  EXPECT_EQ(fx.general.P1, general.P1);
  EXPECT_EQ(fx.general.P2, general.P2);
  EXPECT_EQ(fx.general.order_diff, general.order_diff);
  EXPECT_GT(fx.general.order_diff, 8);
  EXPECT_EQ(fx.torsion.P1, torsion.P1);
  EXPECT_EQ(fx.torsion.P2, torsion.P2);
  EXPECT_EQ(fx.torsion.order_diff, 2);
  EXPECT_GE(fx.general.curve.p(), 50);
}

}  // namespace
}  // namespace bn
