#include "platonic/kelement.hpp"

#include <cmath>
#include <sstream>

namespace platonic {

namespace {

// Tower split on the highest radical bit present: x = a + b*r with a, b in the
// subfield without that radical, r^2 = sq.
struct Split {
  KElement a, b;
  unsigned bit;
  long sq;
};

Split split_top(const KElement& x) {
  unsigned bit = 0;
  for (int m = 0; m < KElement::kBasisSize; ++m)
    if (!x.coord(m).is_zero()) bit |= static_cast<unsigned>(m);
  // highest set bit across the support
  unsigned top = 0;
  for (unsigned b = 16; b >= 1; b >>= 1)
    if (bit & b) {
      top = b;
      break;
    }
  Split s;
  s.bit = top;
  s.sq = top == KElement::kBitI        ? -1
         : top == KElement::kBitSqrt2  ? 2
         : top == KElement::kBitSqrt3  ? 3
         : top == KElement::kBitSqrt5  ? 5
         : top == KElement::kBitSqrt11 ? 11
                                       : 0;
  for (int m = 0; m < KElement::kBasisSize; ++m) {
    if (x.coord(m).is_zero()) continue;
    if (m & top)
      s.b.coord(static_cast<unsigned>(m) ^ top) = x.coord(m);
    else
      s.a.coord(m) = x.coord(m);
  }
  return s;
}

}  // namespace

KElement KElement::inv() const {
  if (is_zero()) throw std::domain_error("KElement: inverse of zero");
  if (is_rational()) return KElement(c_[0].inv());
  // x = a + b r, 1/x = (a - b r) / (a^2 - sq b^2); the norm lies in a smaller
  // subfield, so the recursion terminates.
  Split s = split_top(*this);
  KElement norm = s.a * s.a - KElement(Rational(s.sq)) * s.b * s.b;
  KElement ninv = norm.inv();
  KElement out = s.a * ninv;
  KElement rcoef = -(s.b * ninv);
  KElement res;
  for (int m = 0; m < kBasisSize; ++m) {
    res.coord(m) += out.coord(m);
    if (!rcoef.coord(m).is_zero()) res.coord(static_cast<unsigned>(m) ^ s.bit) += rcoef.coord(m);
  }
  return res;
}

namespace {

struct RatInterval {
  Rational lo, hi;
};

RatInterval iv_exact(const Rational& r) { return {r, r}; }

RatInterval iv_mul(const RatInterval& x, const RatInterval& y) {
  Rational a = x.lo * y.lo, b = x.lo * y.hi, c = x.hi * y.lo, d = x.hi * y.hi;
  Rational lo = a, hi = a;
  for (const Rational* v : {&b, &c, &d}) {
    if (*v < lo) lo = *v;
    if (hi < *v) hi = *v;
  }
  return {lo, hi};
}

RatInterval iv_add(const RatInterval& x, const RatInterval& y) {
  return {x.lo + y.lo, x.hi + y.hi};
}

// Enclosure of sqrt(n) with absolute width 2^-prec, via integer sqrt.
RatInterval sqrt_enclosure(long n, unsigned prec) {
  Int scaled = Int(n) << (2 * prec);
  Int r = boost::multiprecision::sqrt(scaled);
  Int den = Int(1) << prec;
  return {Rational(r, den), Rational(r + 1, den)};
}

}  // namespace

int KElement::certified_sign() const {
  if (!is_real()) throw std::domain_error("certified_sign: input not in the real subfield");
  if (is_zero()) return 0;
  // Nonzero is known exactly, so interval refinement terminates.
  for (unsigned prec = 16;; prec *= 2) {
    std::array<RatInterval, 32> radical;
    radical[0] = iv_exact(Rational(1));
    RatInterval s2 = sqrt_enclosure(2, prec);
    RatInterval s3 = sqrt_enclosure(3, prec);
    RatInterval s5 = sqrt_enclosure(5, prec);
    RatInterval s11 = sqrt_enclosure(11, prec);
    RatInterval total = iv_exact(Rational(0));
    for (int m = 0; m < kBasisSize; ++m) {
      if (c_[m].is_zero()) continue;
      RatInterval term = iv_exact(c_[m]);
      if (m & kBitSqrt2) term = iv_mul(term, s2);
      if (m & kBitSqrt3) term = iv_mul(term, s3);
      if (m & kBitSqrt5) term = iv_mul(term, s5);
      if (m & kBitSqrt11) term = iv_mul(term, s11);
      total = iv_add(total, term);
    }
    if (total.lo.sign() > 0) return 1;
    if (total.hi.sign() < 0) return -1;
    if (prec > (1u << 20)) throw std::runtime_error("certified_sign: refinement runaway");
  }
}

double KElement::to_double() const {
  static const double r2 = std::sqrt(2.0), r3 = std::sqrt(3.0), r5 = std::sqrt(5.0),
                      r11 = std::sqrt(11.0);
  double total = 0;
  for (int m = 0; m < kBasisSize; ++m) {
    if (c_[m].is_zero()) continue;
    if (m & kBitI) throw std::domain_error("to_double: input not real");
    double t = c_[m].to_double();
    if (m & kBitSqrt2) t *= r2;
    if (m & kBitSqrt3) t *= r3;
    if (m & kBitSqrt5) t *= r5;
    if (m & kBitSqrt11) t *= r11;
    total += t;
  }
  return total;
}

std::string KElement::str() const {
  if (is_zero()) return "0";
  static const char* names[5] = {"i", "r2", "r3", "r5", "r11"};
  std::ostringstream os;
  bool first = true;
  for (int m = 0; m < kBasisSize; ++m) {
    if (c_[m].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << c_[m].str();
    for (int b = 0; b < 5; ++b)
      if (m & (1 << b)) os << "*" << names[b];
  }
  return os.str();
}

}  // namespace platonic
