#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "bn/sequences.hpp"

namespace bn {

/// Table-driven arithmetic in F_q for q in {2, 3, 4, 5}. Elements are 0..q-1;
/// for F_4 an element is a bit pattern b0 + b1*t with t^2 = t + 1.
class SmallField {
 public:
  using Element = std::uint8_t;

  explicit SmallField(int q) : q_(q) {
    if (q != 2 && q != 3 && q != 4 && q != 5)
      throw InvalidInput("supported field sizes are 2, 3, 4, 5; got " + std::to_string(q));
    const auto n = static_cast<std::size_t>(q);
    add_.assign(n * n, 0);
    mul_.assign(n * n, 0);
    for (int a = 0; a < q; ++a) {
      for (int b = 0; b < q; ++b) {
        const auto idx = static_cast<std::size_t>(a * q + b);
        if (q == 4) {
          add_[idx] = static_cast<Element>(a ^ b);
          mul_[idx] = static_cast<Element>(gf4_mul(a, b));
        } else {
          add_[idx] = static_cast<Element>((a + b) % q);
          mul_[idx] = static_cast<Element>((a * b) % q);
        }
      }
    }
    neg_.assign(n, 0);
    inv_.assign(n, 0);
    for (int a = 0; a < q; ++a) {
      for (int b = 0; b < q; ++b) {
        if (add(static_cast<Element>(a), static_cast<Element>(b)) == 0) neg_[static_cast<std::size_t>(a)] = static_cast<Element>(b);
        if (mul(static_cast<Element>(a), static_cast<Element>(b)) == 1) inv_[static_cast<std::size_t>(a)] = static_cast<Element>(b);
      }
    }
  }

  int size() const noexcept { return q_; }
  Element add(Element a, Element b) const { return add_[static_cast<std::size_t>(a * q_ + b)]; }
  Element mul(Element a, Element b) const { return mul_[static_cast<std::size_t>(a * q_ + b)]; }
  Element neg(Element a) const { return neg_[a]; }
  Element sub(Element a, Element b) const { return add(a, neg(b)); }
  /// Inverse of a nonzero element.
  Element inv(Element a) const { return inv_[a]; }

 private:
  static int gf4_mul(int a, int b) {
    // Carry-less product reduced modulo t^2 + t + 1.
    int prod = 0;
    for (int i = 0; i < 2; ++i)
      if (b & (1 << i)) prod ^= a << i;
    if (prod & 4) prod ^= 0b111;
    return prod;
  }

  int q_;
  std::vector<Element> add_;
  std::vector<Element> mul_;
  std::vector<Element> neg_;
  std::vector<Element> inv_;
};

}  // namespace bn
