#include "platonic/discs.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace platonic {

const char* flavor_name(Flavor fl) {
  switch (fl) {
    case Flavor::v: return "v";
    case Flavor::e: return "e";
    case Flavor::f: return "f";
    case Flavor::g: return "g";
  }
  return "?";
}

int flavor_order(Config c, Flavor fl) {
  switch (fl) {
    case Flavor::v: return config_data(c).r;
    case Flavor::e: return 2;
    case Flavor::f: return 3;
    case Flavor::g: return 1;
  }
  return 0;
}

namespace {

// Rotation with rational entries; the (3,4,5) element of SU(2) has an axis
// avoiding every feature of the vertex representatives below.
Mat2 generic_rotation() {
  Rational r35(Int(3), Int(5)), r45(Int(4), Int(5));
  return Mat2::group(KElement(r35), KElement(r45), KElement(-r45), KElement(r35));
}

BinaryForm generic_base(Config c) {
  BinaryForm f = act(generic_rotation(), canonical_rep(c, Pose::vertex));
  if (f.z[0].is_zero() || f.z[static_cast<size_t>(f.d)].is_zero())
    throw std::runtime_error("generic_base: rotation left a vertex on the axis");
  // no residual rotational symmetry about the vertical axis: the support must
  // not lie in a single residue class mod m for any m > 1
  int g = 0, first = -1;
  for (int j = 0; j <= f.d; ++j) {
    if (f.z[static_cast<size_t>(j)].is_zero()) continue;
    if (first < 0)
      first = j;
    else
      g = std::gcd(g, j - first);
  }
  if (g != 1) throw std::runtime_error("generic_base: residual vertical symmetry");
  return f;
}

}  // namespace

AxialCurve build_axial(Config c, Flavor fl) {
  AxialCurve u;
  u.c = c;
  u.flavor = fl;
  switch (fl) {
    case Flavor::v: u.base = canonical_rep(c, Pose::vertex); break;
    case Flavor::e: u.base = canonical_rep(c, Pose::edge); break;
    case Flavor::f: u.base = canonical_rep(c, Pose::face); break;
    case Flavor::g: u.base = generic_base(c); break;
  }
  const int d = u.base.d;
  const int s = flavor_order(c, fl);
  // w_j = (d - 2j)/(2s) + shift, the shift normalizing the minimum over the
  // support to zero; integrality on the support is part of the contract
  Rational shift;
  bool have = false;
  for (int j = 0; j <= d; ++j) {
    if (u.base.z[static_cast<size_t>(j)].is_zero()) continue;
    Rational w(Int(d - 2 * j), Int(2 * s));
    if (!have || w < shift) {
      shift = w;
      have = true;
    }
  }
  u.weights.assign(static_cast<size_t>(d) + 1, 0);
  for (int j = 0; j <= d; ++j) {
    if (u.base.z[static_cast<size_t>(j)].is_zero()) continue;
    Rational w = Rational(Int(d - 2 * j), Int(2 * s)) - shift;
    if (!w.is_integer()) throw std::runtime_error("build_axial: non-integral weight on the support");
    u.weights[static_cast<size_t>(j)] = static_cast<long>(w.num());
  }
  return u;
}

std::vector<KPoly> curve_coords(const AxialCurve& u) {
  std::vector<KPoly> out(static_cast<size_t>(u.base.d) + 1);
  for (int j = 0; j <= u.base.d; ++j) {
    const KElement& cj = u.base.z[static_cast<size_t>(j)];
    if (cj.is_zero()) continue;
    out[static_cast<size_t>(j)] =
        KPoly::monomial(cj, static_cast<int>(u.weights[static_cast<size_t>(j)]));
  }
  return out;
}

Rational vanishing_order(const AxialCurve& u) {
  const int d = u.base.d;
  std::vector<KPoly> f = curve_coords(u);
  // coefficient sequences of the two partial derivatives, as degree d-1 forms
  const int m = d - 1;
  std::vector<KPoly> px(static_cast<size_t>(m) + 1), py(static_cast<size_t>(m) + 1);
  for (int j = 0; j <= m; ++j) {
    px[static_cast<size_t>(j)] = f[static_cast<size_t>(j)].scaled(KElement(d - j));
    py[static_cast<size_t>(j)] = f[static_cast<size_t>(j + 1)].scaled(KElement(j + 1));
  }
  // full Sylvester determinant over K[z]
  const size_t size = static_cast<size_t>(2 * m);
  std::vector<std::vector<KPoly>> syl(size, std::vector<KPoly>(size));
  for (int r = 0; r < m; ++r)
    for (int j = 0; j <= m; ++j) {
      syl[static_cast<size_t>(r)][static_cast<size_t>(r + j)] = px[static_cast<size_t>(m - j)];
      syl[static_cast<size_t>(m + r)][static_cast<size_t>(r + j)] = py[static_cast<size_t>(m - j)];
    }
  KPoly det = bareiss_determinant(std::move(syl));
  if (det.is_zero())
    throw std::domain_error("vanishing_order: discriminant vanishes identically along the curve");
  // weights were already integral (rescale factor 1), so the valuation is the
  // plain z-adic valuation of the determinant
  return Rational(Int(det.valuation()));
}

long maslov_index(Config c, Flavor fl, int cover_order) {
  if (cover_order < 1) throw std::domain_error("maslov_index: cover order must be >= 1");
  Rational mu = Rational(Int(2 * cover_order)) * vanishing_order(build_axial(c, fl)) /
                Rational(Int(config_data(c).k));
  if (!mu.is_integer()) throw std::runtime_error("maslov_index: non-integral index");
  return static_cast<long>(mu.num());
}

namespace {

long flavor_index_contribution(Flavor fl) {
  switch (fl) {
    case Flavor::v: return 2;
    case Flavor::e: return 6;
    case Flavor::f: return 4;
    case Flavor::g: return 12;
  }
  return 0;
}

Flavor reflected_flavor(Config c, Flavor fl) {
  if (c == Config::octahedron || c == Config::icosahedron) return fl;
  if (c == Config::triangle) {
    if (fl == Flavor::v) return Flavor::e;
    if (fl == Flavor::e) return Flavor::v;
    return fl;
  }
  // tetrahedron: vertex opposite face, edges self-opposite
  if (fl == Flavor::v) return Flavor::f;
  if (fl == Flavor::f) return Flavor::v;
  return fl;
}

}  // namespace

DegreeControl degree_control(Config c, const std::vector<std::pair<Flavor, int>>& poles) {
  DegreeControl dc{0, 0, 0};
  for (const auto& [fl, order] : poles) {
    if ((c == Config::triangle || c == Config::tetrahedron) && fl != Flavor::v)
      throw std::domain_error("degree_control: only type-v poles supported for this configuration");
    if (order < 1) throw std::domain_error("degree_control: pole order must be positive");
    dc.mu_disc += flavor_index_contribution(fl) * order;
    dc.mu_double +=
        (flavor_index_contribution(fl) + flavor_index_contribution(reflected_flavor(c, fl))) * order;
  }
  long two_l = 2 * config_data(c).l;
  if (dc.mu_double % two_l != 0)
    throw std::runtime_error("degree_control: double index not divisible by 2 l_C");
  dc.degree_double = dc.mu_double / two_l;
  return dc;
}

Index2Data index2_data(Config c) {
  const ConfigData& cd = config_data(c);
  Index2Data out{cd.d, cd.gamma_order / (2 * cd.r)};
  if (out.covering_index != out.count_magnitude)
    throw std::runtime_error("index2_data: orbit-stabiliser identity fails");
  return out;
}

bool eta_h_identity(Config c) {
  AxialCurve u = build_axial(c, Flavor::v);
  const int d = u.base.d;
  const int r = config_data(c).r;
  // affine chart normalized on the x y^{d-1} coordinate (index d-1)
  const KElement& c_norm = u.base.z[static_cast<size_t>(d - 1)];
  if (c_norm.is_zero() || u.weights[static_cast<size_t>(d - 1)] != 0) return false;
  for (int j = 0; j <= d; ++j) {
    if (j == d - 1 || u.base.z[static_cast<size_t>(j)].is_zero()) continue;
    KPoly chart = KPoly::monomial(u.base.z[static_cast<size_t>(j)] / c_norm,
                                  static_cast<int>(u.weights[static_cast<size_t>(j)]));
    // eta_H acts on the chart coordinate b_j / b_{d-1} by 2((d-j) - 1)
    KPoly lhs = chart.scaled(KElement(2 * ((d - j) - 1)));
    KPoly rhs = chart.derivative().shifted(1).scaled(KElement(2 * r));
    if (lhs != rhs) return false;
  }
  return true;
}

Mat2 MatrixCurve::eval(const KElement& z) const {
  KElement dv = den(z);
  if (dv.is_zero()) throw std::domain_error("MatrixCurve: evaluation at a pole");
  KElement inv = dv.inv();
  return {num[0](z) * inv, num[1](z) * inv, num[2](z) * inv, num[3](z) * inv,
          Mat2::Flavor::algebra};
}

Mat2 matrix_curve_residue(const MatrixCurve& m, const KElement& a) {
  if (!m.den(a).is_zero()) throw std::domain_error("residue: not a pole");
  KElement dp = m.den.derivative()(a);
  if (dp.is_zero()) throw std::domain_error("residue: pole not simple");
  KElement inv = dp.inv();
  return {m.num[0](a) * inv, m.num[1](a) * inv, m.num[2](a) * inv, m.num[3](a) * inv,
          Mat2::Flavor::algebra};
}

namespace {

KPoly conj_coeff(const KPoly& p) {
  std::vector<KElement> c = p.coeffs();
  for (auto& x : c) x = x.conjugate();
  return KPoly(std::move(c));
}

}  // namespace

Report groupderivative_checks(const MatrixCurve& m, const std::vector<KElement>& poles) {
  Report rep;
  // trace-free sanity
  rep.add("trace-free", (m.num[0] + m.num[3]).is_zero());

  // (iii) all listed poles are simple roots of the denominator
  bool simple = true;
  for (const auto& a : poles)
    if (!m.den(a).is_zero() || m.den.derivative()(a).is_zero()) simple = false;
  rep.add("poles-simple", simple);

  // (i) M(1/t) = t^2 sigma(M)^T(t) as a rational identity
  int p_deg = m.den.degree();
  for (const auto& n : m.num) p_deg = std::max(p_deg, n.degree());
  bool refl = true;
  for (int i = 0; i < 2 && refl; ++i)
    for (int j = 0; j < 2 && refl; ++j) {
      const KPoly& nij = m.num[static_cast<size_t>(2 * i + j)];
      const KPoly& nji = m.num[static_cast<size_t>(2 * j + i)];
      KPoly lhs = nij.reversed(p_deg) * conj_coeff(m.den);
      KPoly rhs = conj_coeff(nji).shifted(2) * m.den.reversed(p_deg);
      if (lhs != rhs) refl = false;
    }
  rep.add("equator-reflection", refl, "M(1/t) = t^2 sigma(M)^T(t)");

  // (ii) residues at reflected pole pairs
  bool res_ok = true;
  for (const auto& a : poles) {
    if (a.is_zero()) continue;  // the partner of 0 is infinity, covered by (i)
    KElement b = a.conjugate().inv();
    Mat2 ra = matrix_curve_residue(m, a);
    Mat2 rb = matrix_curve_residue(m, b);
    // Res_b = -(Res_a)^dagger
    if (!(rb.a == -ra.a.conjugate() && rb.d == -ra.d.conjugate() &&
          rb.b == -ra.c.conjugate() && rb.c == -ra.b.conjugate()))
      res_ok = false;
  }
  rep.add("residue-pairs", res_ok, "Res_{1/conj a} = -(Res_a)^dagger");

  // (iv) cleared component degree n-2 (only meaningful with n >= 2 poles)
  if (poles.size() >= 2) {
    KPoly prod = KPoly::one();
    for (const auto& a : poles) {
      std::vector<KElement> lin = {-a, KElement(1)};
      prod = prod * KPoly(lin);
    }
    bool deg_ok = true;
    int maxdeg = -1;
    try {
      std::array<KPoly, 3> comp;
      const size_t idx[3] = {0, 1, 2};  // M11, M12, M21 span sl2 components
      for (int t = 0; t < 3; ++t)
        comp[static_cast<size_t>(t)] = exact_div(m.num[idx[t]] * prod, m.den);
      for (const auto& f : comp) maxdeg = std::max(maxdeg, f.degree());
      KPoly g = poly_gcd(poly_gcd(comp[0], comp[1]), comp[2]);
      deg_ok = maxdeg == static_cast<int>(poles.size()) - 2 && g.degree() == 0;
    } catch (const std::exception&) {
      deg_ok = false;
    }
    rep.add("cleared-degree", deg_ok,
            "max component degree " + std::to_string(maxdeg) + " = n-2, components coprime");
  } else {
    rep.add("cleared-degree", true, "fewer than two poles: not applicable");
  }
  return rep;
}

}  // namespace platonic
