#pragma once

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "platonic/kelement.hpp"
#include "platonic/rational.hpp"

namespace platonic {

// Dense univariate polynomial over an exact coefficient ring R.  Coefficients
// ascending; the zero polynomial has an empty coefficient vector and
// degree() == -1 (standing in for "-infinity").
template <class R>
class Polynomial {
public:
  Polynomial() = default;
  explicit Polynomial(R c) {
    if (!::platonic::is_zero(c)) c_.push_back(std::move(c));
  }
  explicit Polynomial(std::vector<R> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Polynomial zero() { return Polynomial(); }
  static Polynomial one() { return Polynomial(R(1)); }
  static Polynomial variable() { return monomial(R(1), 1); }
  static Polynomial monomial(R c, int deg) {
    Polynomial p;
    if (!::platonic::is_zero(c)) {
      p.c_.assign(static_cast<size_t>(deg) + 1, R(0));
      p.c_.back() = std::move(c);
    }
    return p;
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<R>& coeffs() const { return c_; }
  R coeff(int k) const {
    return (k >= 0 && k < static_cast<int>(c_.size())) ? c_[static_cast<size_t>(k)] : R(0);
  }
  const R& lead() const {
    if (c_.empty()) throw std::domain_error("Polynomial: leading coeff of zero");
    return c_.back();
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  Polynomial operator-() const {
    Polynomial p = *this;
    for (auto& c : p.c_) c = -c;
    return p;
  }
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    Polynomial out;
    out.c_.assign(std::max(a.c_.size(), b.c_.size()), R(0));
    for (size_t k = 0; k < a.c_.size(); ++k) out.c_[k] += a.c_[k];
    for (size_t k = 0; k < b.c_.size(); ++k) out.c_[k] += b.c_[k];
    out.trim();
    return out;
  }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial();
    Polynomial out;
    out.c_.assign(a.c_.size() + b.c_.size() - 1, R(0));
    for (size_t s = 0; s < a.c_.size(); ++s) {
      if (::platonic::is_zero(a.c_[s])) continue;
      for (size_t t = 0; t < b.c_.size(); ++t) {
        if (::platonic::is_zero(b.c_[t])) continue;
        out.c_[s + t] += a.c_[s] * b.c_[t];
      }
    }
    out.trim();
    return out;
  }
  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  Polynomial scaled(const R& s) const {
    Polynomial p;
    p.c_.reserve(c_.size());
    for (const auto& c : c_) p.c_.push_back(c * s);
    p.trim();
    return p;
  }

  Polynomial derivative() const {
    Polynomial p;
    if (c_.size() <= 1) return p;
    p.c_.reserve(c_.size() - 1);
    for (size_t k = 1; k < c_.size(); ++k) p.c_.push_back(c_[k] * R(static_cast<int>(k)));
    p.trim();
    return p;
  }

  R operator()(const R& x) const {
    R acc(0);
    for (size_t k = c_.size(); k-- > 0;) acc = acc * x + c_[k];
    return acc;
  }

  Polynomial shifted(int k) const {  // multiply by z^k
    if (is_zero()) return Polynomial();
    Polynomial p;
    p.c_.assign(c_.size() + static_cast<size_t>(k), R(0));
    std::copy(c_.begin(), c_.end(), p.c_.begin() + k);
    return p;
  }

  // Coefficient reversal relative to a formal degree n >= degree().
  Polynomial reversed(int n) const {
    Polynomial p;
    if (n < degree()) throw std::domain_error("Polynomial: reversal degree too small");
    p.c_.assign(static_cast<size_t>(n) + 1, R(0));
    for (size_t k = 0; k < c_.size(); ++k) p.c_[static_cast<size_t>(n) - k] = c_[k];
    p.trim();
    return p;
  }

  // Substitute z -> z^n.
  Polynomial inflated(int n) const {
    Polynomial p;
    if (is_zero()) return p;
    p.c_.assign(static_cast<size_t>(degree()) * n + 1, R(0));
    for (size_t k = 0; k < c_.size(); ++k) p.c_[k * static_cast<size_t>(n)] = c_[k];
    return p;
  }

  // Inverse of inflated: requires support only on multiples of n.
  Polynomial deflated(int n) const {
    Polynomial p;
    for (size_t k = 0; k < c_.size(); ++k) {
      if (k % static_cast<size_t>(n) != 0 && !::platonic::is_zero(c_[k]))
        throw std::domain_error("Polynomial: not a polynomial in z^n");
    }
    for (size_t k = 0; k < c_.size(); k += static_cast<size_t>(n)) p.c_.push_back(c_[k]);
    p.trim();
    return p;
  }

  int valuation() const {  // order of vanishing at 0; -1 for the zero polynomial
    for (size_t k = 0; k < c_.size(); ++k)
      if (!::platonic::is_zero(c_[k])) return static_cast<int>(k);
    return -1;
  }

private:
  void trim() {
    while (!c_.empty() && ::platonic::is_zero(c_.back())) c_.pop_back();
  }
  std::vector<R> c_;
};

template <class R>
bool is_zero(const Polynomial<R>& p) {
  return p.is_zero();
}

using QPoly = Polynomial<Rational>;
using KPoly = Polynomial<KElement>;

// ---- division -------------------------------------------------------------

// Quotient/remainder over a coefficient field.
template <class R>
std::pair<Polynomial<R>, Polynomial<R>> divmod(const Polynomial<R>& a, const Polynomial<R>& b) {
  if (b.is_zero()) throw std::domain_error("Polynomial: division by zero polynomial");
  std::vector<R> rem(a.coeffs());
  int db = b.degree();
  int da = static_cast<int>(rem.size()) - 1;
  if (da < db) return {Polynomial<R>(), a};
  std::vector<R> quo(static_cast<size_t>(da - db) + 1, R(0));
  R lead_inv = R(1) / b.lead();
  for (int k = da; k >= db; --k) {
    R c = rem[static_cast<size_t>(k)];
    if (::platonic::is_zero(c)) continue;
    R q = c * lead_inv;
    quo[static_cast<size_t>(k - db)] = q;
    for (int j = 0; j <= db; ++j)
      rem[static_cast<size_t>(k - db + j)] -= q * b.coeff(j);
  }
  return {Polynomial<R>(std::move(quo)), Polynomial<R>(std::move(rem))};
}

// ---- exact division (integral domains) -------------------------------------

inline Rational exact_div(const Rational& a, const Rational& b) { return a / b; }
inline KElement exact_div(const KElement& a, const KElement& b) { return a / b; }

// Exact division a = q*b in R[z]; throws if the division is not exact.
template <class R>
Polynomial<R> exact_div(const Polynomial<R>& a, const Polynomial<R>& b) {
  if (b.is_zero()) throw std::domain_error("Polynomial: exact division by zero");
  if (a.is_zero()) return Polynomial<R>();
  std::vector<R> rem(a.coeffs());
  int db = b.degree();
  int da = static_cast<int>(rem.size()) - 1;
  if (da < db) throw std::domain_error("Polynomial: inexact division");
  std::vector<R> quo(static_cast<size_t>(da - db) + 1, R(0));
  for (int k = da; k >= db; --k) {
    R c = rem[static_cast<size_t>(k)];
    if (::platonic::is_zero(c)) continue;
    R q = exact_div(c, b.lead());
    quo[static_cast<size_t>(k - db)] = q;
    for (int j = 0; j <= db; ++j)
      rem[static_cast<size_t>(k - db + j)] -= q * b.coeff(j);
  }
  for (const auto& c : rem)
    if (!::platonic::is_zero(c)) throw std::domain_error("Polynomial: inexact division");
  return Polynomial<R>(std::move(quo));
}

// ---- gcd -------------------------------------------------------------------

template <class R>
Polynomial<R> make_monic(const Polynomial<R>& p) {
  if (p.is_zero()) return p;
  return p.scaled(R(1) / p.lead());
}

// Content (gcd of integer numerators over common denominator) of a Q-poly.
Int q_content_num(const QPoly& p);
// Scale to a primitive integer polynomial with positive leading coefficient.
QPoly q_primitive(const QPoly& p);

// Monic gcd over a coefficient field; gcd(0,0) = 0.
template <class R>
Polynomial<R> poly_gcd(Polynomial<R> a, Polynomial<R> b) {
  while (!b.is_zero()) {
    auto [q, r] = divmod(a, b);
    (void)q;
    a = b;
    b = make_monic(r);  // normalization keeps field coefficients tame
  }
  return make_monic(a);
}

// Rational specialization with primitive-part reduction for coefficient control.
QPoly poly_gcd(QPoly a, QPoly b);

// Extended gcd over a coefficient field: returns (g, u, v) with
// u a + v b = g, g monic (or zero).
template <class R>
std::array<Polynomial<R>, 3> poly_ext_gcd(const Polynomial<R>& a, const Polynomial<R>& b) {
  Polynomial<R> r0 = a, r1 = b;
  Polynomial<R> s0 = Polynomial<R>::one(), s1 = Polynomial<R>::zero();
  Polynomial<R> t0 = Polynomial<R>::zero(), t1 = Polynomial<R>::one();
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    Polynomial<R> s2 = s0 - q * s1, t2 = t0 - q * t1;
    r0 = r1;
    r1 = r;
    s0 = s1;
    s1 = s2;
    t0 = t1;
    t1 = t2;
  }
  if (!r0.is_zero()) {
    R inv = R(1) / r0.lead();
    r0 = r0.scaled(inv);
    s0 = s0.scaled(inv);
    t0 = t0.scaled(inv);
  }
  return {r0, s0, t0};
}

// ---- resultants ------------------------------------------------------------

// Fraction-free Bareiss determinant of a square array over an integral
// domain.  Uses row pivoting only (sign tracked).
template <class R>
R bareiss_determinant(std::vector<std::vector<R>> a) {
  const size_t n = a.size();
  if (n == 0) return R(1);
  R prev(1);
  int sign = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    size_t piv = k;
    while (piv < n && ::platonic::is_zero(a[piv][k])) ++piv;
    if (piv == n) return R(0);
    if (piv != k) {
      std::swap(a[piv], a[k]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j) {
        R t = a[k][k] * a[i][j] - a[i][k] * a[k][j];
        a[i][j] = exact_div(t, prev);
      }
      a[i][k] = R(0);
    }
    prev = a[k][k];
  }
  R det = a[n - 1][n - 1];
  return sign < 0 ? -det : det;
}

// Sylvester resultant with explicit formal degrees (rows of p first).  Formal
// degrees allow vanishing leading coefficients, as needed for binary forms
// with roots at infinity.
template <class R>
R resultant_formal(const Polynomial<R>& p, int m, const Polynomial<R>& q, int n) {
  if (m < p.degree() || n < q.degree())
    throw std::domain_error("resultant_formal: formal degree below actual");
  if (m == 0 && n == 0) return R(1);
  const size_t size = static_cast<size_t>(m + n);
  std::vector<std::vector<R>> syl(size, std::vector<R>(size, R(0)));
  for (int r = 0; r < n; ++r)
    for (int j = 0; j <= m; ++j) syl[static_cast<size_t>(r)][static_cast<size_t>(r + j)] = p.coeff(m - j);
  for (int r = 0; r < m; ++r)
    for (int j = 0; j <= n; ++j)
      syl[static_cast<size_t>(n + r)][static_cast<size_t>(r + j)] = q.coeff(n - j);
  return bareiss_determinant(std::move(syl));
}

// Resultant with actual degrees.
template <class R>
R resultant(const Polynomial<R>& p, const Polynomial<R>& q) {
  if (p.is_zero() || q.is_zero()) return R(0);
  return resultant_formal(p, p.degree(), q, q.degree());
}

// ---- Sturm -----------------------------------------------------------------

struct SturmBound {
  bool infinite = true;   // unbounded endpoint
  Rational value;         // finite endpoint
  bool closed = false;    // include a root exactly at the endpoint
};

// Exact number of real roots of a squarefree rational polynomial in the
// interval (throws std::domain_error if p is not squarefree or is zero).
int sturm_real_roots(const QPoly& p, const SturmBound& lo = {}, const SturmBound& hi = {});

}  // namespace platonic
