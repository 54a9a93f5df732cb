#include "platonic/configs.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace platonic {

namespace {

KElement kq(long n, long d = 1) { return KElement(Rational(Int(n), Int(d))); }
KElement sqrt2_over(long d) { return KElement::basis(KElement::kBitSqrt2, Rational(Int(1), Int(d))); }
KElement sqrt3_over(long d) { return KElement::basis(KElement::kBitSqrt3, Rational(Int(1), Int(d))); }
KElement sqrt5_times(long n) { return KElement::basis(KElement::kBitSqrt5, Rational(Int(n))); }
KElement sqrt6_over(long d) {
  return KElement::basis(KElement::kBitSqrt2 | KElement::kBitSqrt3, Rational(Int(1), Int(d)));
}

BinaryForm form_from(std::vector<KElement> v) {
  int d = static_cast<int>(v.size()) - 1;
  return BinaryForm(d, std::move(v));
}

}  // namespace

const char* config_name(Config c) {
  switch (c) {
    case Config::triangle: return "triangle";
    case Config::tetrahedron: return "tetrahedron";
    case Config::octahedron: return "octahedron";
    case Config::icosahedron: return "icosahedron";
  }
  return "?";
}

const char* pose_name(Pose p) {
  switch (p) {
    case Pose::vertex: return "vertex";
    case Pose::edge: return "edge";
    case Pose::face: return "face";
  }
  return "?";
}

const ConfigData& config_data(Config c) {
  static const ConfigData table[4] = {
      {3, 2, 12, 2, 1, 4},
      {4, 3, 24, 4, 2, 3},
      {6, 4, 48, 8, 5, 2},
      {12, 5, 120, 20, 22, 1},
  };
  return table[static_cast<int>(c)];
}

bool config_identities_hold(Config c) {
  const ConfigData& cd = config_data(c);
  long d = cd.d, r = cd.r;
  if (cd.k * cd.gamma_order != 2 * d * (d - 1) * (d - 2)) return false;
  if (cd.l * cd.k != 2 * d - 2) return false;
  if (r * d % 2 != 0 || r * d % 3 != 0) return false;
  if (d - r * d / 2 + r * d / 3 != 2) return false;
  if (cd.f * 3 != r * d) return false;
  if (cd.gamma_order != 2 * r * d) return false;
  if (6 * (d - 2) != r * d) return false;
  return true;
}

BinaryForm canonical_rep(Config c, Pose pose) {
  const KElement s2 = KElement::sqrt2(), s3 = KElement::sqrt3(), s5 = KElement::sqrt5();
  switch (c) {
    case Config::triangle:
      switch (pose) {
        case Pose::vertex: return form_from({kq(1), kq(0), kq(-3), kq(0)});
        case Pose::edge: return form_from({kq(0), kq(-3), kq(0), kq(1)});
        case Pose::face: return form_from({kq(1), kq(0), kq(0), kq(1)});
      }
      break;
    case Config::tetrahedron:
      switch (pose) {
        case Pose::vertex: return form_from({kq(1), kq(0), kq(0), kq(2) * s2, kq(0)});
        case Pose::edge: return form_from({kq(1), kq(0), kq(2) * s3, kq(0), kq(-1)});
        case Pose::face: return form_from({kq(0), kq(2) * s2, kq(0), kq(0), kq(1)});
      }
      break;
    case Config::octahedron:
      switch (pose) {
        case Pose::vertex:
          return form_from({kq(0), kq(1), kq(0), kq(0), kq(0), kq(-1), kq(0)});
        case Pose::edge:
          return form_from({kq(1), kq(0), kq(-5), kq(0), kq(-5), kq(0), kq(1)});
        case Pose::face:
          return form_from({kq(1), kq(0), kq(0), kq(-5) * s2, kq(0), kq(0), kq(-1)});
      }
      break;
    case Config::icosahedron:
      switch (pose) {
        case Pose::vertex:
          return form_from({kq(0), kq(1), kq(0), kq(0), kq(0), kq(0), kq(-11), kq(0), kq(0),
                            kq(0), kq(0), kq(-1), kq(0)});
        case Pose::edge:
          return form_from({s5, kq(0), kq(-22), kq(0), kq(-33) * s5, kq(0), kq(44), kq(0),
                            kq(-33) * s5, kq(0), kq(-22), kq(0), s5});
        case Pose::face:
          return form_from({kq(1), kq(0), kq(0), kq(-11) * s5, kq(0), kq(0), kq(-33), kq(0),
                            kq(0), kq(11) * s5, kq(0), kq(0), kq(1)});
      }
      break;
  }
  throw std::domain_error("canonical_rep: bad arguments");
}

KElement solve_latitude(Config c) {
  // candidate values, checked exactly against a^2 (1 - 2 cos(2 pi / r)) = 1
  KElement a;
  switch (c) {
    case Config::triangle: a = sqrt3_over(3); break;
    case Config::tetrahedron: a = sqrt2_over(2); break;
    case Config::octahedron: a = kq(1); break;
    case Config::icosahedron: a = (kq(1) + KElement::sqrt5()) * kq(1, 2); break;
  }
  KElement cos2pir;
  switch (config_data(c).r) {
    case 2: cos2pir = kq(-1); break;
    case 3: cos2pir = kq(-1, 2); break;
    case 4: cos2pir = kq(0); break;
    case 5: cos2pir = (KElement::sqrt5() - kq(1)) * kq(1, 4); break;
    default: throw std::domain_error("solve_latitude: bad r");
  }
  KElement relation = a * a * (kq(1) - kq(2) * cos2pir) - kq(1);
  if (!relation.is_zero()) throw std::runtime_error("solve_latitude: candidate fails relation");
  if (a.certified_sign() <= 0) throw std::runtime_error("solve_latitude: candidate not positive");
  return a;
}

BinaryForm vertex_rep_from_latitude(Config c) {
  KElement a = solve_latitude(c);
  const int r = config_data(c).r;
  KElement ar = a.pow(r);
  std::vector<std::pair<CP1Point, int>> pts;
  // the ring of r vertices below the top contributes (-1)^{r+1} a^r x^r + y^r
  switch (c) {
    case Config::triangle: {
      // x * (-a^2 x^2 + y^2)
      std::vector<KElement> ring = {-(a * a), kq(0), kq(1)};
      BinaryForm f = form_from(ring);
      // multiply by x: shift coefficients toward lower index in y-grading
      std::vector<KElement> out(4);
      for (int j = 0; j <= 2; ++j) out[static_cast<size_t>(j)] = f.z[static_cast<size_t>(j)];
      return form_from(out);
    }
    case Config::tetrahedron: {
      std::vector<KElement> out(5);
      // x * (a^3 x^3 + y^3)
      out[0] = ar;
      out[3] = kq(1);
      return form_from(out);
    }
    case Config::octahedron: {
      // x * (-a^4 x^4 + y^4) * y
      std::vector<KElement> out(7);
      out[1] = -ar;
      out[5] = kq(1);
      return form_from(out);
    }
    case Config::icosahedron: {
      // x * (a^5 x^5 + y^5) * (-x^5/a^5 + y^5) * y
      KElement arinv = ar.inv();
      // (a^5 x^5 + y^5)(-a^{-5} x^5 + y^5) = -x^10 + (a^5 - a^{-5}) x^5 y^5 + y^10
      std::vector<KElement> out(13);
      out[1] = kq(-1);
      out[6] = ar - arinv;
      out[11] = kq(1);
      return form_from(out);
    }
  }
  throw std::domain_error("vertex_rep_from_latitude: bad config");
}

bool vertical_rotation_in_k(int s) { return s == 2 || s == 3 || s == 4; }

Mat2 vertical_rotation_lift(int s) {
  // diag(e^{i pi/s}, e^{-i pi/s})
  KElement e;
  switch (s) {
    case 2: e = KElement::i(); break;
    case 3: e = (kq(1) + KElement::sqrt3() * KElement::i()) * kq(1, 2); break;
    case 4: e = (KElement::sqrt2() + KElement::sqrt2() * KElement::i()) * kq(1, 2); break;
    default: throw std::domain_error("vertical_rotation_lift: entries outside K");
  }
  return Mat2::group(e, KElement(0), KElement(0), e.conjugate());
}

Report verify_config(Config c, Pose pose) {
  Report rep;
  BinaryForm f = canonical_rep(c, pose);
  const ConfigData& cd = config_data(c);

  bool mz = moment_map_zero(f);
  rep.add("moment-map-zero", mz);

  int s = pose == Pose::vertex ? cd.r : (pose == Pose::edge ? 2 : 3);
  // projective invariance under z_j -> zeta^{-j} z_j, zeta = e^{2 pi i/s}:
  // equivalent to the support lying in one residue class mod s
  int base = -1;
  bool residue_ok = true;
  for (int j = 0; j <= f.d; ++j) {
    if (f.z[static_cast<size_t>(j)].is_zero()) continue;
    if (base < 0) base = j % s;
    else if (j % s != base) residue_ok = false;
  }
  rep.add("rotation-invariance-support", residue_ok,
          "support residue class mod " + std::to_string(s));
  if (vertical_rotation_in_k(s)) {
    BinaryForm g = act(vertical_rotation_lift(s), f);
    rep.add("rotation-invariance-act", proj_equal(f, g),
            "explicit lift diag(e^{i pi/s}, e^{-i pi/s})");
  }
  if (pose == Pose::vertex) {
    bool div_x = f.z[static_cast<size_t>(f.d)].is_zero();
    rep.add("vertex-at-infinity", div_x, "coefficient of y^d vanishes");
  }
  return rep;
}

KElement half_angle_cos_sq(const CP1Point& w1, const CP1Point& w2) {
  KElement a1 = w1.lift_x(), b1 = w1.lift_y();
  KElement a2 = w2.lift_x(), b2 = w2.lift_y();
  if ((a1.is_zero() && b1.is_zero()) || (a2.is_zero() && b2.is_zero()))
    throw std::domain_error("half_angle_cos_sq: zero lift");
  KElement inner = a1.conjugate() * a2 + b1.conjugate() * b2;
  KElement n1 = a1.conjugate() * a1 + b1.conjugate() * b1;
  KElement n2 = a2.conjugate() * a2 + b2.conjugate() * b2;
  return inner * inner.conjugate() / (n1 * n2);
}

namespace {

void sorted_insert(std::vector<KElement>& set, const KElement& v) {
  for (const auto& x : set)
    if (x == v) return;
  set.push_back(v);
}

void sort_by_value(std::vector<KElement>& set) {
  std::sort(set.begin(), set.end(), [](const KElement& a, const KElement& b) {
    return (a - b).certified_sign() < 0;
  });
}

std::vector<KElement> angle_set(const std::vector<CP1Point>& a, const std::vector<CP1Point>& b) {
  std::vector<KElement> out;
  for (const auto& w1 : a)
    for (const auto& w2 : b) sorted_insert(out, half_angle_cos_sq(w1, w2));
  sort_by_value(out);
  return out;
}

bool sets_disjoint(const std::vector<KElement>& a, const std::vector<KElement>& b) {
  for (const auto& x : a)
    for (const auto& y : b)
      if (x == y) return false;
  return true;
}

void validate_roots(const BinaryForm& f, const std::vector<CP1Point>& roots) {
  std::vector<std::pair<CP1Point, int>> pts;
  pts.reserve(roots.size());
  for (const auto& r : roots) pts.push_back({r, 1});
  BinaryForm g = from_points(pts, f.d);
  if (!proj_equal(f, g))
    throw std::domain_error("bubbling_obstruction: root list does not match the form");
}

}  // namespace

BubblingResult bubbling_obstruction(const BinaryForm& p, const std::vector<CP1Point>& p_roots,
                                    const BinaryForm& q, const std::vector<CP1Point>& q_roots,
                                    const std::vector<CP1Point>& c_roots) {
  validate_roots(p, p_roots);
  validate_roots(q, q_roots);
  BubblingResult out;
  out.set_pq = angle_set(p_roots, q_roots);
  out.set_c = angle_set(c_roots, c_roots);
  out.disjoint = sets_disjoint(out.set_pq, out.set_c);
  return out;
}

namespace {

std::vector<CP1Point> triangle_p_roots() {
  // x^3 + y^3: the cube roots of unity
  KElement half = kq(1, 2), s3i = KElement::sqrt3() * KElement::i() * kq(1, 2);
  return {CP1Point::finite(kq(1)), CP1Point::finite(-half + s3i), CP1Point::finite(-half - s3i)};
}

std::vector<CP1Point> triangle_q_roots() {
  // x^3 - y^3: the cube roots of -1
  KElement half = kq(1, 2), s3i = KElement::sqrt3() * KElement::i() * kq(1, 2);
  return {CP1Point::finite(kq(-1)), CP1Point::finite(half + s3i), CP1Point::finite(half - s3i)};
}

std::vector<CP1Point> tetra_roots(bool rotated) {
  // a+ = (sqrt6 + sqrt2)/2, a- = (sqrt6 - sqrt2)/2 = 1/a+
  KElement aplus = (sqrt6_over(2) + sqrt2_over(2));
  KElement aminus = (sqrt6_over(2) - sqrt2_over(2));
  KElement i = KElement::i();
  if (!rotated)
    return {CP1Point::finite(aplus), CP1Point::finite(-aplus), CP1Point::finite(i * aminus),
            CP1Point::finite(-(i * aminus))};
  // multiply by i: rotation through pi/2 about the vertical axis
  return {CP1Point::finite(i * aplus), CP1Point::finite(-(i * aplus)),
          CP1Point::finite(-aminus), CP1Point::finite(aminus)};
}

BinaryForm tetra_q_form() {
  return form_from({kq(1), kq(0), kq(-2) * KElement::sqrt3(), kq(0), kq(-1)});
}

}  // namespace

IcosaBubbling icosa_bubbling() {
  IcosaBubbling out;
  // golden-ratio vertex model: (0, +-1, +-phi) and cyclic permutations
  KElement phi = (kq(1) + KElement::sqrt5()) * kq(1, 2);
  std::vector<std::array<KElement, 3>> v;
  for (int s1 : {1, -1})
    for (int s2 : {1, -1}) {
      KElement a = kq(s1), b = kq(s2) * phi;
      v.push_back({kq(0), a, b});
      v.push_back({a, b, kq(0)});
      v.push_back({b, kq(0), a});
    }
  const KElement norm2 = kq(1) + phi * phi;
  auto dot = [](const std::array<KElement, 3>& x, const std::array<KElement, 3>& y) {
    return x[0] * y[0] + x[1] * y[1] + x[2] * y[2];
  };

  // model validation: pairwise cosine spectrum of a regular icosahedron
  KElement inv_s5 = KElement::sqrt5().inv();
  bool gram_ok = true;
  for (const auto& a : v) {
    int n_self = 0, n_adj = 0, n_far = 0, n_anti = 0;
    for (const auto& b : v) {
      KElement cosv = dot(a, b) / norm2;
      if (cosv == kq(1)) ++n_self;
      else if (cosv == inv_s5) ++n_adj;
      else if (cosv == -inv_s5) ++n_far;
      else if (cosv == kq(-1)) ++n_anti;
      else gram_ok = false;
    }
    gram_ok = gram_ok && n_self == 1 && n_adj == 5 && n_far == 5 && n_anti == 1;
  }
  out.model_checks.add("vertex-model-gram-spectrum", gram_ok);

  // face axis: centroid of the mutually adjacent triple below
  std::array<KElement, 3> f1 = {kq(0), kq(1), phi}, f2 = {kq(1), phi, kq(0)},
                          f3 = {phi, kq(0), kq(1)};
  bool face_ok = dot(f1, f2) / norm2 == inv_s5 && dot(f2, f3) / norm2 == inv_s5 &&
                 dot(f1, f3) / norm2 == inv_s5;
  std::array<KElement, 3> centroid = {(f1[0] + f2[0] + f3[0]), (f1[1] + f2[1] + f3[1]),
                                      (f1[2] + f2[2] + f3[2])};
  // centroid is proportional to (1,1,1)
  face_ok = face_ok && (centroid[0] == centroid[1]) && (centroid[1] == centroid[2]);
  out.model_checks.add("face-axis", face_ok, "rotation axis through a face centroid");

  // in form coordinates the rotated pair: q = (rotation by pi about vertical) p
  BinaryForm p = canonical_rep(Config::icosahedron, Pose::face);
  BinaryForm q = act(vertical_rotation_lift(2), p);
  BinaryForm q_expected = p;
  for (int j = 1; j <= 12; j += 2) q_expected.z[static_cast<size_t>(j)] = -q_expected.z[static_cast<size_t>(j)];
  out.model_checks.add("pair-by-pi-rotation", proj_equal(q, q_expected),
                       "second configuration is the pi-rotation of the first");

  // rotation by pi about n = (1,1,1)/sqrt3: R = 2nn^T - I (rational entries)
  auto rot = [&](const std::array<KElement, 3>& x) {
    KElement s = (x[0] + x[1] + x[2]) * kq(2, 3);
    return std::array<KElement, 3>{s - x[0], s - x[1], s - x[2]};
  };

  BubblingResult res;
  for (const auto& a : v)
    for (const auto& b : v) {
      KElement t_c = (kq(1) + dot(a, b) / norm2) * kq(1, 2);
      sorted_insert(res.set_c, t_c);
      KElement t_pq = (kq(1) + dot(a, rot(b)) / norm2) * kq(1, 2);
      sorted_insert(res.set_pq, t_pq);
    }
  sort_by_value(res.set_c);
  sort_by_value(res.set_pq);
  res.disjoint = sets_disjoint(res.set_pq, res.set_c);
  out.result = res;
  return out;
}

BubblingResult bubbling_instance(Config c) {
  switch (c) {
    case Config::triangle: {
      BinaryForm p = canonical_rep(Config::triangle, Pose::face);
      BinaryForm q = form_from({kq(1), kq(0), kq(0), kq(-1)});
      return bubbling_obstruction(p, triangle_p_roots(), q, triangle_q_roots(),
                                  triangle_p_roots());
    }
    case Config::tetrahedron: {
      BinaryForm p = canonical_rep(Config::tetrahedron, Pose::edge);
      BinaryForm q = tetra_q_form();
      return bubbling_obstruction(p, tetra_roots(false), q, tetra_roots(true),
                                  tetra_roots(false));
    }
    case Config::icosahedron:
      return icosa_bubbling().result;
    default:
      throw std::domain_error("bubbling_instance: no stored instance for this configuration");
  }
}

namespace {

struct Feature {
  std::array<KElement, 3> n;
  int s;  // rotation order about this axis
  const char* kind;
};

std::vector<Feature> domain_features(Config c) {
  KElement s3_3 = sqrt3_over(3), s6_3 = sqrt6_over(3), s2_2 = sqrt2_over(2);
  std::vector<Feature> fs;
  if (c == Config::triangle) {
    KElement h = kq(1, 2), s3h = sqrt3_over(2);
    fs.push_back({{kq(0), kq(0), kq(1)}, 3, "face"});
    fs.push_back({{kq(0), kq(0), kq(-1)}, 3, "face"});
    std::array<std::array<KElement, 3>, 3> verts = {
        std::array<KElement, 3>{kq(1), kq(0), kq(0)},
        std::array<KElement, 3>{-h, s3h, kq(0)},
        std::array<KElement, 3>{-h, -s3h, kq(0)}};
    for (const auto& n : verts) fs.push_back({n, 2, "vertex"});
    for (const auto& n : verts) fs.push_back({{-n[0], -n[1], -n[2]}, 2, "edge"});
  } else if (c == Config::tetrahedron) {
    std::array<std::array<KElement, 3>, 4> verts = {
        std::array<KElement, 3>{s6_3, kq(0), s3_3}, std::array<KElement, 3>{-s6_3, kq(0), s3_3},
        std::array<KElement, 3>{kq(0), s6_3, -s3_3},
        std::array<KElement, 3>{kq(0), -s6_3, -s3_3}};
    for (const auto& n : verts) fs.push_back({n, 3, "vertex"});
    for (const auto& n : verts) fs.push_back({{-n[0], -n[1], -n[2]}, 3, "face"});
    fs.push_back({{kq(0), kq(0), kq(1)}, 2, "edge"});
    fs.push_back({{kq(0), kq(0), kq(-1)}, 2, "edge"});
    for (int s1 : {1, -1})
      for (int s2 : {1, -1})
        fs.push_back({{kq(s1) * s2_2, kq(s2) * s2_2, kq(0)}, 2, "edge"});
  } else {
    throw std::domain_error("fundamental_domain: only triangle and tetrahedron are constructed");
  }
  return fs;
}

KElement tan_quarter(int s) {
  // tan(theta/4) for theta = 2 pi / s
  switch (s) {
    case 2: return kq(1);            // tan(pi/4)
    case 3: return sqrt3_over(3);    // tan(pi/6)
    default: throw std::domain_error("tan_quarter: unsupported angle");
  }
}

bool solve3(const std::array<const Halfspace*, 3>& h, std::array<KElement, 3>& out) {
  KMatrix m(3, 3);
  for (size_t i = 0; i < 3; ++i)
    for (size_t j = 0; j < 3; ++j) m(i, j) = h[i]->normal[j];
  KElement det = determinant(m);
  if (det.is_zero()) return false;
  for (size_t j = 0; j < 3; ++j) {
    KMatrix mj = m;
    for (size_t i = 0; i < 3; ++i) mj(i, j) = h[i]->bound;
    out[j] = determinant(mj) / det;
  }
  return true;
}

}  // namespace

std::vector<std::array<KElement, 3>> polytope_vertices(const std::vector<Halfspace>& hs) {
  std::vector<std::array<KElement, 3>> verts;
  const size_t n = hs.size();
  for (size_t a = 0; a < n; ++a)
    for (size_t b = a + 1; b < n; ++b)
      for (size_t c = b + 1; c < n; ++c) {
        std::array<KElement, 3> y;
        if (!solve3({&hs[a], &hs[b], &hs[c]}, y)) continue;
        bool feasible = true;
        for (const auto& h : hs) {
          KElement slack = h.bound - (h.normal[0] * y[0] + h.normal[1] * y[1] + h.normal[2] * y[2]);
          if (slack.certified_sign() < 0) {
            feasible = false;
            break;
          }
        }
        if (!feasible) continue;
        bool seen = false;
        for (const auto& v : verts)
          if (v[0] == y[0] && v[1] == y[1] && v[2] == y[2]) {
            seen = true;
            break;
          }
        if (!seen) verts.push_back(y);
      }
  return verts;
}

FundamentalDomain fundamental_domain(Config c) {
  FundamentalDomain fd;
  for (const Feature& f : domain_features(c)) {
    Halfspace h;
    h.normal = f.n;
    h.bound = tan_quarter(f.s);
    h.source = f.kind;
    // unit normal sanity
    KElement len2 = f.n[0] * f.n[0] + f.n[1] * f.n[1] + f.n[2] * f.n[2];
    if (len2 != KElement(1)) throw std::runtime_error("fundamental_domain: non-unit axis");
    fd.halfspaces.push_back(std::move(h));
  }
  fd.vertices = polytope_vertices(fd.halfspaces);
  for (size_t drop = 0; drop < fd.halfspaces.size(); ++drop) {
    std::vector<Halfspace> rest;
    for (size_t k = 0; k < fd.halfspaces.size(); ++k)
      if (k != drop) rest.push_back(fd.halfspaces[k]);
    bool redundant = true;
    for (const auto& y : polytope_vertices(rest)) {
      const Halfspace& h = fd.halfspaces[drop];
      KElement slack = h.bound - (h.normal[0] * y[0] + h.normal[1] * y[1] + h.normal[2] * y[2]);
      if (slack.certified_sign() < 0) {
        redundant = false;
        break;
      }
    }
    if (redundant) fd.redundant.push_back(drop);
  }
  return fd;
}

}  // namespace platonic
