#include "platonic/forms.hpp"

#include <stdexcept>

namespace platonic {

Mat2 Mat2::group(KElement a, KElement b, KElement c, KElement d) {
  Mat2 m{std::move(a), std::move(b), std::move(c), std::move(d), Flavor::group};
  if (m.det() != KElement(1)) throw std::domain_error("Mat2: group element must have det 1");
  return m;
}

Mat2 Mat2::algebra(KElement a, KElement b, KElement c, KElement d) {
  Mat2 m{std::move(a), std::move(b), std::move(c), std::move(d), Flavor::algebra};
  if (!m.trace().is_zero()) throw std::domain_error("Mat2: algebra element must be trace-free");
  return m;
}

Mat2 Mat2::operator*(const Mat2& o) const {
  return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d, flavor};
}

bool Mat2::is_su2() const {
  if (!trace().is_zero()) return false;
  // dagger = conjugate transpose must equal -self
  return a.conjugate() == -a && d.conjugate() == -d && b.conjugate() == -c &&
         c.conjugate() == -b;
}

Mat2 eta_H() { return Mat2::algebra(KElement(1), KElement(0), KElement(0), KElement(-1)); }
Mat2 eta_X() { return Mat2::algebra(KElement(0), KElement(1), KElement(0), KElement(0)); }
Mat2 eta_Y() { return Mat2::algebra(KElement(0), KElement(0), KElement(1), KElement(0)); }

std::vector<Mat2> su2_basis() {
  KElement half = KElement(Rational(Int(1), Int(2)));
  KElement ihalf = KElement::i() * half;
  return {
      Mat2::algebra(ihalf, KElement(0), KElement(0), -ihalf),
      Mat2::algebra(KElement(0), half, -half, KElement(0)),
      Mat2::algebra(KElement(0), ihalf, ihalf, KElement(0)),
  };
}

BinaryForm::BinaryForm(int degree, std::vector<KElement> coords) : d(degree), z(std::move(coords)) {
  if (static_cast<int>(z.size()) != d + 1)
    throw std::domain_error("BinaryForm: coefficient count must be degree+1");
}

bool BinaryForm::is_zero_vector() const {
  for (const auto& c : z)
    if (!c.is_zero()) return false;
  return true;
}

BinaryForm BinaryForm::conjugate() const {
  BinaryForm g = *this;
  for (auto& c : g.z) c = c.conjugate();
  return g;
}

bool proj_equal(const std::vector<KElement>& f, const std::vector<KElement>& g) {
  if (f.size() != g.size()) return false;
  bool fz = true, gz = true;
  for (const auto& c : f) fz = fz && c.is_zero();
  for (const auto& c : g) gz = gz && c.is_zero();
  if (fz || gz) return false;
  for (size_t i = 0; i < f.size(); ++i)
    for (size_t j = i + 1; j < f.size(); ++j)
      if (!(f[i] * g[j] - f[j] * g[i]).is_zero()) return false;
  return true;
}

bool proj_equal(const BinaryForm& f, const BinaryForm& g) {
  return f.d == g.d && proj_equal(f.z, g.z);
}

BinaryForm substitute(const Mat2& g, const BinaryForm& f) {
  const int d = f.d;
  // images of the basis vectors: x -> a x + c y, y -> b x + d y
  auto power = [](const KElement& u, const KElement& v, int k) {
    // (u x + v y)^k as a coefficient vector
    std::vector<KElement> c(static_cast<size_t>(k) + 1);
    std::vector<KElement> up(static_cast<size_t>(k) + 1), vp(static_cast<size_t>(k) + 1);
    up[0] = KElement(1);
    vp[0] = KElement(1);
    for (int t = 1; t <= k; ++t) {
      up[static_cast<size_t>(t)] = up[static_cast<size_t>(t - 1)] * u;
      vp[static_cast<size_t>(t)] = vp[static_cast<size_t>(t - 1)] * v;
    }
    Int binom = 1;
    for (int m = 0; m <= k; ++m) {
      c[static_cast<size_t>(m)] =
          KElement(Rational(binom)) * up[static_cast<size_t>(k - m)] * vp[static_cast<size_t>(m)];
      binom = binom * (k - m) / (m + 1);
    }
    return c;
  };
  std::vector<std::vector<KElement>> px(static_cast<size_t>(d) + 1),
      py(static_cast<size_t>(d) + 1);
  for (int k = 0; k <= d; ++k) {
    px[static_cast<size_t>(k)] = power(g.a, g.c, k);
    py[static_cast<size_t>(k)] = power(g.b, g.d, k);
  }
  std::vector<KElement> out(static_cast<size_t>(d) + 1);
  for (int j = 0; j <= d; ++j) {
    if (f.z[static_cast<size_t>(j)].is_zero()) continue;
    const auto& a = px[static_cast<size_t>(d - j)];
    const auto& b = py[static_cast<size_t>(j)];
    for (size_t s = 0; s < a.size(); ++s) {
      if (a[s].is_zero()) continue;
      for (size_t t = 0; t < b.size(); ++t) {
        if (b[t].is_zero()) continue;
        out[s + t] += f.z[static_cast<size_t>(j)] * a[s] * b[t];
      }
    }
  }
  return BinaryForm(d, std::move(out));
}

BinaryForm act(const Mat2& g, const BinaryForm& f) {
  if (g.det() != KElement(1)) throw std::domain_error("act: group element must have det 1");
  return substitute(g, f);
}

std::vector<KElement> inf_act(const Mat2& xi, const BinaryForm& f) {
  if (!xi.trace().is_zero()) throw std::domain_error("inf_act: element must be trace-free");
  const int d = f.d;
  std::vector<KElement> out(static_cast<size_t>(d) + 1);
  for (int j = 0; j <= d; ++j) {
    const KElement& zj = f.z[static_cast<size_t>(j)];
    if (zj.is_zero()) continue;
    KElement p = KElement(d - j), q = KElement(j);
    out[static_cast<size_t>(j)] += (p * xi.a + q * xi.d) * zj;
    if (j + 1 <= d) out[static_cast<size_t>(j + 1)] += p * xi.c * zj;
    if (j - 1 >= 0) out[static_cast<size_t>(j - 1)] += q * xi.b * zj;
  }
  return out;
}

BinaryForm from_points(const std::vector<std::pair<CP1Point, int>>& points, int d) {
  int total = 0;
  for (const auto& [pt, mult] : points) total += mult;
  if (total != d) throw std::domain_error("from_points: total multiplicity must equal degree");
  std::vector<KElement> acc{KElement(1)};
  for (const auto& [pt, mult] : points) {
    for (int t = 0; t < mult; ++t) {
      std::vector<KElement> next(acc.size() + 1);
      for (size_t k = 0; k < acc.size(); ++k) {
        next[k] += acc[k] * pt.lift_x();
        next[k + 1] += acc[k] * pt.lift_y();
      }
      acc = std::move(next);
    }
  }
  return BinaryForm(d, std::move(acc));
}

KPoly deriv_x_poly(const BinaryForm& f) {
  std::vector<KElement> c(static_cast<size_t>(f.d));
  for (int j = 0; j < f.d; ++j) c[static_cast<size_t>(j)] = KElement(f.d - j) * f.z[static_cast<size_t>(j)];
  return KPoly(std::move(c));
}

KPoly deriv_y_poly(const BinaryForm& f) {
  std::vector<KElement> c(static_cast<size_t>(f.d));
  for (int j = 0; j < f.d; ++j) c[static_cast<size_t>(j)] = KElement(j + 1) * f.z[static_cast<size_t>(j + 1)];
  return KPoly(std::move(c));
}

KElement discriminant(const BinaryForm& f) {
  if (f.d < 2) throw std::domain_error("discriminant: degree must be at least 2");
  return resultant_formal(deriv_x_poly(f), f.d - 1, deriv_y_poly(f), f.d - 1);
}

KElement moment_map(const BinaryForm& f, const Mat2& xi) {
  if (!xi.is_su2()) throw std::domain_error("moment_map: generator must lie in su(2)");
  std::vector<KElement> xf = inf_act(xi, f);
  KElement sum;
  Rational gram(1);  // G_j = (d-j)! j! / d!; updated multiplicatively
  for (int j = 0; j <= f.d; ++j) {
    if (j > 0) gram *= Rational(Int(j), Int(f.d - j + 1));
    if (f.z[static_cast<size_t>(j)].is_zero() || xf[static_cast<size_t>(j)].is_zero()) continue;
    sum += KElement(gram) * f.z[static_cast<size_t>(j)].conjugate() * xf[static_cast<size_t>(j)];
  }
  KElement value = KElement::i() * sum;
  if (!value.is_real()) throw std::runtime_error("moment_map: value not real");
  return value;
}

bool moment_map_zero(const BinaryForm& f) {
  for (const auto& xi : su2_basis())
    if (!moment_map(f, xi).is_zero()) return false;
  return true;
}

BinaryForm antipodal(const BinaryForm& f) {
  std::vector<KElement> out(static_cast<size_t>(f.d) + 1);
  for (int j = 0; j <= f.d; ++j) {
    KElement v = f.z[static_cast<size_t>(f.d - j)].conjugate();
    out[static_cast<size_t>(j)] = (j % 2 == 0) ? v : -v;
  }
  return BinaryForm(f.d, std::move(out));
}

std::vector<std::vector<KElement>> tangent_cone(const BinaryForm& f) {
  return {f.z, inf_act(eta_H(), f), inf_act(eta_X(), f), inf_act(eta_Y(), f)};
}

KPoly root_poly(const BinaryForm& f) {
  std::vector<KElement> c(static_cast<size_t>(f.d) + 1);
  for (int j = 0; j <= f.d; ++j)
    c[static_cast<size_t>(j)] = (j % 2 == 0) ? f.z[static_cast<size_t>(j)] : -f.z[static_cast<size_t>(j)];
  return KPoly(std::move(c));
}

int multiplicity_at_infinity(const BinaryForm& f) {
  if (f.is_zero_vector()) throw std::domain_error("multiplicity: zero form");
  return f.d - root_poly(f).degree();
}

int max_point_multiplicity(const BinaryForm& f) {
  KPoly g = root_poly(f);
  int finite = 0;
  while (g.degree() > 0) {
    g = poly_gcd(g, g.derivative());
    ++finite;
  }
  return std::max(finite, multiplicity_at_infinity(f));
}

int distinct_point_count(const BinaryForm& f) {
  KPoly g = root_poly(f);
  int finite = 0;
  if (g.degree() > 0) finite = exact_div(g, poly_gcd(g, g.derivative())).degree();
  return finite + (multiplicity_at_infinity(f) > 0 ? 1 : 0);
}

}  // namespace platonic
