#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "platonic/rational.hpp"

namespace platonic {

// Element of K = Q(i, sqrt2, sqrt3, sqrt5, sqrt11), stored as 32 rational
// coordinates on the basis of square-free radical products.  Basis index is a
// 5-bit mask: bit 0 = i, bit 1 = sqrt2, bit 2 = sqrt3, bit 3 = sqrt5,
// bit 4 = sqrt11.  Index 0 is the rational unit.
class KElement {
public:
  static constexpr int kBasisSize = 32;
  static constexpr unsigned kBitI = 1u;
  static constexpr unsigned kBitSqrt2 = 2u;
  static constexpr unsigned kBitSqrt3 = 4u;
  static constexpr unsigned kBitSqrt5 = 8u;
  static constexpr unsigned kBitSqrt11 = 16u;

  KElement() = default;
  KElement(int n) { c_[0] = Rational(n); }
  KElement(const Rational& r) { c_[0] = r; }

  static KElement basis(unsigned mask, Rational coeff = Rational(1)) {
    KElement x;
    x.c_[mask & 31u] = std::move(coeff);
    return x;
  }
  static KElement i() { return basis(kBitI); }
  static KElement sqrt2() { return basis(kBitSqrt2); }
  static KElement sqrt3() { return basis(kBitSqrt3); }
  static KElement sqrt5() { return basis(kBitSqrt5); }
  static KElement sqrt11() { return basis(kBitSqrt11); }

  const Rational& coord(unsigned mask) const { return c_[mask & 31u]; }
  Rational& coord(unsigned mask) { return c_[mask & 31u]; }

  bool is_zero() const {
    for (const auto& r : c_)
      if (!r.is_zero()) return false;
    return true;
  }
  // No coordinate on a basis product containing i.
  bool is_real() const {
    for (int m = 0; m < kBasisSize; ++m)
      if ((m & kBitI) && !c_[m].is_zero()) return false;
    return true;
  }
  bool is_rational() const {
    for (int m = 1; m < kBasisSize; ++m)
      if (!c_[m].is_zero()) return false;
    return true;
  }
  const Rational& rational_part() const { return c_[0]; }

  KElement operator-() const {
    KElement x;
    for (int m = 0; m < kBasisSize; ++m) x.c_[m] = -c_[m];
    return x;
  }
  KElement& operator+=(const KElement& o) {
    for (int m = 0; m < kBasisSize; ++m) c_[m] += o.c_[m];
    return *this;
  }
  KElement& operator-=(const KElement& o) {
    for (int m = 0; m < kBasisSize; ++m) c_[m] -= o.c_[m];
    return *this;
  }
  friend KElement operator+(KElement a, const KElement& b) { return a += b; }
  friend KElement operator-(KElement a, const KElement& b) { return a -= b; }

  friend KElement operator*(const KElement& a, const KElement& b) {
    KElement out;
    for (int s = 0; s < kBasisSize; ++s) {
      if (a.c_[s].is_zero()) continue;
      for (int t = 0; t < kBasisSize; ++t) {
        if (b.c_[t].is_zero()) continue;
        Rational term = a.c_[s] * b.c_[t];
        long sq = square_scalar(static_cast<unsigned>(s & t));
        if (sq != 1) term *= Rational(sq);
        out.c_[s ^ t] += term;
      }
    }
    return out;
  }
  KElement& operator*=(const KElement& o) { return *this = *this * o; }

  KElement inv() const;
  friend KElement operator/(const KElement& a, const KElement& b) { return a * b.inv(); }
  KElement& operator/=(const KElement& o) { return *this = *this * o.inv(); }

  friend bool operator==(const KElement& a, const KElement& b) { return a.c_ == b.c_; }
  friend bool operator!=(const KElement& a, const KElement& b) { return !(a == b); }

  // Ring automorphism i -> -i; real radicals fixed.
  KElement conjugate() const {
    KElement x = *this;
    for (int m = 0; m < kBasisSize; ++m)
      if (m & kBitI) x.c_[m] = -x.c_[m];
    return x;
  }

  KElement pow(long e) const {
    if (e < 0) return inv().pow(-e);
    KElement base = *this, out(1);
    while (e > 0) {
      if (e & 1) out *= base;
      base *= base;
      e >>= 1;
    }
    return out;
  }

  // Exact sign of a real element: 0 iff zero (decided on coordinates), else
  // adaptive-precision rational interval evaluation until 0 is excluded.
  // Throws std::domain_error on non-real input.
  int certified_sign() const;

  // Floating evaluation (real part convention: throws if not real).
  double to_double() const;

  std::string str() const;

private:
  // Product of the squares of the shared radicals: i*i = -1, sqrt(n)^2 = n.
  static long square_scalar(unsigned shared) {
    long v = 1;
    if (shared & kBitI) v = -v;
    if (shared & kBitSqrt2) v *= 2;
    if (shared & kBitSqrt3) v *= 3;
    if (shared & kBitSqrt5) v *= 5;
    if (shared & kBitSqrt11) v *= 11;
    return v;
  }

  std::array<Rational, kBasisSize> c_{};
};

inline bool is_zero(const KElement& x) { return x.is_zero(); }

}  // namespace platonic
