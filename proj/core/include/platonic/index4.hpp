#pragma once

#include "platonic/discs.hpp"
#include "platonic/qh.hpp"

namespace platonic {
namespace index4 {

// ---- triangle and tetrahedron nonexistence ---------------------------------

// Verifies, for p = [x^3+y^3] and q = [x^3-y^3]:
//  (a) the discriminant on the pencil through p, q vanishes only at members
//      that are perfect cubes (the d-fold locus),
//  (b) coplanarity of p, q, [(ax+y)^3], [(bx+y)^3] forces a = b for finite
//      nonzero a, b,
//  (c) the infinite reduction [1:0:0:0], [0:0:0:1], [0:0:1:c], [d:1:0:0]
//      has rank 4 identically in c, d.
Report triangle_nonexistence();

// Verifies, for p = [x^4+2sqrt3 x^2y^2-y^4] and its quarter-turn q:
//  the pencil leaves the orbit closure (witness [x^2y^2]), the coplanarity
//  system has only the branches {a,b} = {0,inf} and b = -a with a^4 = -1,
//  and each branch forces a degenerate reflected pole.
Report tetra_nonexistence();

// ---- icosahedron pipeline ---------------------------------------------------

// The pair p, q (face-pose icosahedra differing by a half-turn) and the five
// annihilating covectors of <T_p, T_q>.
struct IcosaFrame {
  BinaryForm p, q;
  std::vector<std::vector<Int>> covectors;  // 5 x 13 integer coordinates
};
const IcosaFrame& icosa_frame();

// Span conditions: rank of the stacked tangent cones is 8, the covectors
// annihilate them and are independent, the reflected-pole span has affine
// rank 10 (projective dimension 9), and <T_p, T_q, P, R> has affine rank 9
// at the solution pole data.
Report icosa_span_checks();

struct MinorPipeline {
  Matrix<QPoly> F;  // 5 x 4, rows f_i0..f_i3
  QPoly g1;
  QPoly g2_computed;  // gcd of the back-substituted relations (primitive)
  QPoly l_num, l_den;  // l(k) as a reduced rational function
  Report report;
};
const MinorPipeline& icosa_minor_pipeline();

// h_1 real-root count, the printed factorization of h_2, and the
// real/unit-modulus classification of each factor.
Report icosa_root_analysis();

struct ReflectionGcds {
  QPoly g3, g4, g5;
  Report report;
};
const ReflectionGcds& icosa_reflection_gcds();

struct IcosaPoleData {
  KElement kP, kQ, lP, lQ;
  std::array<Mat2, 4> residues;  // at a, -a, 1/a, -1/a
};

struct IcosaSolution {
  IcosaPoleData poles;
  KElement a;              // pole position in (0, 1)
  MatrixCurve duval;       // the assembled group derivative
  std::vector<KPoly> U;    // 13 components, degree <= 4
  std::vector<KElement> lambda;  // interpolation coefficients
  Report report;
};
const IcosaSolution& icosa_solution();

Report icosa_verify_curve();

struct CountAndSign {
  int count = 0;
  KElement sign_det;
  Report report;
};
CountAndSign icosa_count_and_sign();

// Convenience: did every stage of each pipeline pass?
bool triangle_pipeline_ok();
bool tetra_pipeline_ok();
bool icosa_pipeline_ok();
bool octa_hom_ok();

}  // namespace index4
}  // namespace platonic
