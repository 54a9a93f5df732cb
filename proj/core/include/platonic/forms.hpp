#pragma once

#include <vector>

#include "platonic/matrix.hpp"
#include "platonic/polynomial.hpp"

namespace platonic {

// Point of CP^1: [lambda : 1] or [1 : 0]; as a vector of V it is
// lambda*x + y, respectively x.
struct CP1Point {
  bool infinite = false;
  KElement lambda;

  static CP1Point inf() { return {true, KElement()}; }
  static CP1Point finite(KElement l) { return {false, std::move(l)}; }

  // lift to a vector (coefficients of x and y)
  KElement lift_x() const { return infinite ? KElement(1) : lambda; }
  KElement lift_y() const { return infinite ? KElement(0) : KElement(1); }
};

// 2x2 matrix over K tagged as a group element (det 1) or Lie algebra element
// (trace 0).
struct Mat2 {
  enum class Flavor { group, algebra };
  KElement a, b, c, d;  // [[a, b], [c, d]]
  Flavor flavor = Flavor::group;

  static Mat2 group(KElement a, KElement b, KElement c, KElement d);
  static Mat2 algebra(KElement a, KElement b, KElement c, KElement d);

  KElement det() const { return a * d - b * c; }
  KElement trace() const { return a + d; }
  Mat2 operator*(const Mat2& o) const;
  Mat2 operator-() const { return {-a, -b, -c, -d, flavor}; }

  // trace-free and skew-hermitian: dagger == -self
  bool is_su2() const;
};

// Standard sl(2) basis elements.
Mat2 eta_H();
Mat2 eta_X();
Mat2 eta_Y();
// su(2) basis: diag(i,-i)/2, [[0,1],[-1,0]]/2, [[0,i],[i,0]]/2.
std::vector<Mat2> su2_basis();

// Degree-d binary form; coeffs[j] is the coefficient of x^(d-j) y^j, matching
// standard coordinates [z_0 : ... : z_d].
struct BinaryForm {
  int d = 0;
  std::vector<KElement> z;

  BinaryForm() = default;
  BinaryForm(int degree, std::vector<KElement> coords);

  bool is_zero_vector() const;
  KElement coeff(int j) const { return z[static_cast<size_t>(j)]; }

  // conjugate all coordinates
  BinaryForm conjugate() const;
};

// Projective equality (rank-1 test on the stacked coefficient matrix).
bool proj_equal(const BinaryForm& f, const BinaryForm& g);
bool proj_equal(const std::vector<KElement>& f, const std::vector<KElement>& g);

// Induced action of g on S^d V: substitute x -> g.x, y -> g.y in the product
// of linear factors.  Requires det g = 1.
BinaryForm act(const Mat2& g, const BinaryForm& f);
// Unchecked substitution action (any invertible matrix; rescales the orbit
// point projectively).
BinaryForm substitute(const Mat2& g, const BinaryForm& f);

// Derivation action of a trace-free matrix; result is a plain coefficient
// vector (may be zero).
std::vector<KElement> inf_act(const Mat2& xi, const BinaryForm& f);

// Product of linear factors over the given points with multiplicity; total
// multiplicity must equal d.
BinaryForm from_points(const std::vector<std::pair<CP1Point, int>>& points, int d);

// Resultant of the two partial derivatives (degree-(d-1) forms); vanishes iff
// the configuration has a repeated point, including at infinity.
KElement discriminant(const BinaryForm& f);

// i * sum_j G_j conj(z_j) (xi.f)_j with Gram weight G_j = (d-j)! j! / d!.
// Requires xi in su(2); the value lies in i*R, returned as the real element
// (value / i).
KElement moment_map(const BinaryForm& f, const Mat2& xi);
bool moment_map_zero(const BinaryForm& f);

// [z_0 : ... : z_d] -> [conj z_d : -conj z_{d-1} : ... : (-1)^d conj z_0];
// sends each configuration point to its antipode.
BinaryForm antipodal(const BinaryForm& f);

// Affine cone over the tangent space at an orbit point:
// {f, eta_H.f, eta_X.f, eta_Y.f}.
std::vector<std::vector<KElement>> tangent_cone(const BinaryForm& f);

// f as a polynomial in T: f(T) = sum z_j (-T)^j; roots are the finite
// configuration points, with infinity of multiplicity d - deg.
KPoly root_poly(const BinaryForm& f);

// Multiplicity of infinity as a configuration point (d - deg root_poly).
int multiplicity_at_infinity(const BinaryForm& f);

// Largest multiplicity of any configuration point (via gcd chain with the
// derivative, plus the infinity bookkeeping).
int max_point_multiplicity(const BinaryForm& f);

// Number of distinct configuration points.
int distinct_point_count(const BinaryForm& f);

}  // namespace platonic
