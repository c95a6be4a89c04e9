#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bn/sequences.hpp"

namespace bn {

// Short Weierstrass curves y^2 = x^3 + A x + B over a prime field F_p with the
// chord-tangent group law. Only small p (a few hundred at most) is intended.

struct EcPoint {
  bool infinity = true;
  std::int64_t x = 0;
  std::int64_t y = 0;

  static EcPoint at_infinity() { return {}; }
  static EcPoint affine(std::int64_t x, std::int64_t y) { return {false, x, y}; }

  friend bool operator==(const EcPoint&, const EcPoint&) = default;
  friend auto operator<=>(const EcPoint&, const EcPoint&) = default;
};

class EllipticCurve {
 public:
  EllipticCurve(std::int64_t p, std::int64_t A, std::int64_t B) : p_(p), a_(mod(A, p)), b_(mod(B, p)) {
    if (p < 5 || !is_prime(p)) throw InvalidInput("curve modulus must be a prime >= 5");
    if (discriminant() == 0) throw InvalidInput("singular curve: 4A^3 + 27B^2 = 0 mod p");
  }

  std::int64_t p() const noexcept { return p_; }
  std::int64_t A() const noexcept { return a_; }
  std::int64_t B() const noexcept { return b_; }

  std::int64_t discriminant() const { return mod(4 * mul(mul(a_, a_), a_) + 27 * mul(b_, b_), p_); }

  bool contains(const EcPoint& P) const {
    if (P.infinity) return true;
    if (P.x < 0 || P.x >= p_ || P.y < 0 || P.y >= p_) return false;
    return mul(P.y, P.y) == mod(mul(mul(P.x, P.x), P.x) + mul(a_, P.x) + b_, p_);
  }

  EcPoint negate(const EcPoint& P) const {
    if (P.infinity) return P;
    return EcPoint::affine(P.x, mod(-P.y, p_));
  }

  EcPoint add(const EcPoint& P, const EcPoint& Q) const {
    if (P.infinity) return Q;
    if (Q.infinity) return P;
    std::int64_t slope = 0;
    if (P.x == Q.x) {
      if (mod(P.y + Q.y, p_) == 0) return EcPoint::at_infinity();
      slope = mul(mod(3 * mul(P.x, P.x) + a_, p_), inverse(mod(2 * P.y, p_)));
    } else {
      slope = mul(mod(Q.y - P.y, p_), inverse(mod(Q.x - P.x, p_)));
    }
    const std::int64_t x = mod(mul(slope, slope) - P.x - Q.x, p_);
    const std::int64_t y = mod(mul(slope, P.x - x) - P.y, p_);
    return EcPoint::affine(x, y);
  }

  EcPoint subtract(const EcPoint& P, const EcPoint& Q) const { return add(P, negate(Q)); }

  EcPoint multiply(std::int64_t k, const EcPoint& P) const {
    EcPoint base = k < 0 ? negate(P) : P;
    std::uint64_t n = static_cast<std::uint64_t>(k < 0 ? -k : k);
    EcPoint acc = EcPoint::at_infinity();
    while (n) {
      if (n & 1U) acc = add(acc, base);
      base = add(base, base);
      n >>= 1U;
    }
    return acc;
  }

  /// Smallest k >= 1 with kP = O.
  std::int64_t order(const EcPoint& P) const {
    EcPoint acc = P;
    std::int64_t k = 1;
    while (!acc.infinity) {
      acc = add(acc, P);
      ++k;
      if (k > 2 * p_ + 2) throw std::logic_error("point order exceeds the Hasse bound");
    }
    return k;
  }

  /// All points, point at infinity first, then affine points by (x, y).
  std::vector<EcPoint> points() const {
    std::vector<EcPoint> out{EcPoint::at_infinity()};
    for (std::int64_t x = 0; x < p_; ++x) {
      const std::int64_t rhs = mod(mul(mul(x, x), x) + mul(a_, x) + b_, p_);
      for (std::int64_t y = 0; y < p_; ++y)
        if (mul(y, y) == rhs) out.push_back(EcPoint::affine(x, y));
    }
    return out;
  }

  static bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t k = 2; k * k <= n; ++k)
      if (n % k == 0) return false;
    return true;
  }

 private:
  static std::int64_t mod(std::int64_t v, std::int64_t p) {
    v %= p;
    return v < 0 ? v + p : v;
  }
  std::int64_t mul(std::int64_t a, std::int64_t b) const { return mod(a * b, p_); }
  std::int64_t inverse(std::int64_t a) const {
    // Fermat: a^(p-2).
    std::int64_t result = 1;
    std::int64_t base = mod(a, p_);
    for (std::int64_t e = p_ - 2; e > 0; e >>= 1) {
      if (e & 1) result = mul(result, base);
      base = mul(base, base);
    }
    return result;
  }

  std::int64_t p_;
  std::int64_t a_;
  std::int64_t b_;
};

/// An elliptic curve with two marked points; `order_diff` is the order of
/// P1 - P2 in the group.
struct EllipticModel {
  std::string name;
  EllipticCurve curve;
  EcPoint P1;
  EcPoint P2;
  std::int64_t order_diff = 1;

  EllipticModel(std::string label, EllipticCurve c, EcPoint p1, EcPoint p2)
      : name(std::move(label)), curve(c), P1(p1), P2(p2) {
    if (!curve.contains(P1) || !curve.contains(P2)) throw InvalidInput("marked points must lie on the curve");
    order_diff = curve.order(curve.subtract(P1, P2));
  }

  EcPoint difference() const { return curve.subtract(P1, P2); }

  /// Whether m (P1 - P2) is the identity.
  bool multiple_is_trivial(std::int64_t m) const { return curve.multiply(m, difference()).infinity; }
};

inline std::int64_t ec_order_diff(const EllipticModel& m) { return m.order_diff; }

/// Associativity, identity, inverses and commutativity on every triple of the
/// first `sample` points. Returns the first failure, if any.
inline std::optional<std::string> check_group_axioms(const EllipticCurve& E, std::size_t sample = 12) {
  auto pts = E.points();
  if (pts.size() > sample) pts.resize(sample);
  const EcPoint O = EcPoint::at_infinity();
  for (const auto& P : pts) {
    if (!E.contains(P)) return "point off curve";
    if (E.add(P, O) != P) return "identity fails";
    if (!E.add(P, E.negate(P)).infinity) return "inverse fails";
    for (const auto& Q : pts) {
      if (E.add(P, Q) != E.add(Q, P)) return "commutativity fails";
      if (!E.contains(E.add(P, Q))) return "sum off curve";
      for (const auto& R : pts)
        if (E.add(E.add(P, Q), R) != E.add(P, E.add(Q, R))) return "associativity fails";
    }
  }
  return std::nullopt;
}

/// Deterministic search for a general model: the smallest prime p >= min_prime,
/// then the smallest (A, B), then P2 the smallest affine point and P1 the smallest
/// point with ord(P1 - P2) > min_order.
inline EllipticModel search_general_model(std::int64_t min_prime, std::int64_t min_order) {
  for (std::int64_t p = min_prime;; ++p) {
    if (!EllipticCurve::is_prime(p) || p < 5) continue;
    for (std::int64_t A = 0; A < p; ++A) {
      for (std::int64_t B = 0; B < p; ++B) {
        if ((4 * A * A * A + 27 * B * B) % p == 0) continue;
        const EllipticCurve E(p, A, B);
        const auto pts = E.points();
        if (pts.size() < 2) continue;
        const EcPoint P2 = pts[1];
        for (std::size_t i = 1; i < pts.size(); ++i) {
          if (E.order(E.subtract(pts[i], P2)) > min_order) return EllipticModel("general", E, pts[i], P2);
        }
      }
    }
  }
}

/// Deterministic search for a torsion model on the smallest curve over F_p
/// having a point of order `torsion`: P2 is the smallest affine point and
/// P1 = P2 + T for the smallest such T.
inline EllipticModel search_torsion_model(std::int64_t p, std::int64_t torsion) {
  for (std::int64_t A = 0; A < p; ++A) {
    for (std::int64_t B = 0; B < p; ++B) {
      if ((4 * A * A * A + 27 * B * B) % p == 0) continue;
      const EllipticCurve E(p, A, B);
      const auto pts = E.points();
      if (pts.size() < 2) continue;
      for (const auto& T : pts) {
        if (E.order(T) != torsion) continue;
        const EcPoint P2 = pts[1];
        return EllipticModel("torsion", E, E.add(P2, T), P2);
      }
    }
  }
  throw InvalidInput("no curve over F_" + std::to_string(p) + " has a point of order " + std::to_string(torsion));
}

}  // namespace bn
