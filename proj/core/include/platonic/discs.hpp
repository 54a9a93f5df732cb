#pragma once

#include <vector>

#include "platonic/configs.hpp"

namespace platonic {

enum class Flavor { v, e, f, g };
constexpr std::array<Flavor, 4> kAllFlavors = {Flavor::v, Flavor::e, Flavor::f, Flavor::g};
const char* flavor_name(Flavor fl);

// Rotation order s of the defining one-parameter subgroup: r_C, 2, 3, 1.
int flavor_order(Config c, Flavor fl);

// Weighted-monomial model of an axial curve: coordinate j carries c_j z^{w_j}
// with w_j = (d - 2j)/(2s) + shift, the shift making the minimum weight over
// the support zero.  Weights are integral on the support.
struct AxialCurve {
  Config c;
  Flavor flavor;
  BinaryForm base;
  std::vector<long> weights;  // per coordinate j (meaningful on the support)
};

AxialCurve build_axial(Config c, Flavor fl);

// The curve as a vector of polynomials in z.
std::vector<KPoly> curve_coords(const AxialCurve& u);

// z-adic valuation of discriminant(u(z)), computed on the full Sylvester
// determinant with monomial entries; weights are rescaled to integers by the
// substitution z -> z^s and the valuation divided back.  Throws on an
// identically-zero discriminant (curve inside the discriminant divisor).
Rational vanishing_order(const AxialCurve& u);

// 2 k (vanishing order) / k_C for the k-fold cover.
long maslov_index(Config c, Flavor fl, int cover_order);

struct DegreeControl {
  long mu_disc;
  long mu_double;
  long degree_double;
};

// Index bookkeeping for a disc with the given poles and its double.  For the
// triangle and tetrahedron only type-v poles are allowed (the disc misses the
// d-fold locus); reflected poles follow the type reflection rule.
DegreeControl degree_control(Config c, const std::vector<std::pair<Flavor, int>>& poles);

struct Index2Data {
  long count_magnitude;  // |m_0| = d
  long covering_index;   // index of <e^{2 pi xi_v}> in Gamma_C, = |Gamma|/(2 r)
};
Index2Data index2_data(Config c);

// In the affine chart normalized on the x y^{d-1} coordinate, verifies
// eta_H . u_v(z) = 2 r_C z u_v'(z) as an identity of K[z] vectors.
bool eta_h_identity(Config c);

// 2x2 trace-free matrix of rational functions in z over K, with a common
// denominator.
struct MatrixCurve {
  std::array<KPoly, 4> num;  // [[0,1],[2,3]] entries
  KPoly den;

  Mat2 eval(const KElement& z) const;
};

// Residue at a simple root a of the denominator.
Mat2 matrix_curve_residue(const MatrixCurve& m, const KElement& a);

// Exact identities for a group derivative with the given simple poles:
//  (i)  M(1/t) = t^2 sigma(M)^T(t), sigma = coefficientwise conjugation
//  (ii) Res_{1/conj(a)} = -(Res_a)^dagger for each pole pair
//  (iii) all listed poles are simple
//  (iv) after clearing denominators the maximum component degree is n-2
//       (components with respect to an sl_2 basis, gcd-free)
Report groupderivative_checks(const MatrixCurve& m, const std::vector<KElement>& poles);

}  // namespace platonic
