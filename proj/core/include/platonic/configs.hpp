#pragma once

#include <array>
#include <string>
#include <vector>

#include "platonic/forms.hpp"

namespace platonic {

enum class Config { triangle, tetrahedron, octahedron, icosahedron };
enum class Pose { vertex, edge, face };

constexpr std::array<Config, 4> kAllConfigs = {Config::triangle, Config::tetrahedron,
                                               Config::octahedron, Config::icosahedron};
const char* config_name(Config c);
const char* pose_name(Pose p);

// Numeric attributes of the four configurations.
struct ConfigData {
  int d;            // number of vertices (= v_C)
  int r;            // faces meeting at a vertex (= r_C)
  int gamma_order;  // |Gamma_C|
  int f;            // number of faces (= f_C)
  int k;            // k_C
  int l;            // l_C
};
const ConfigData& config_data(Config c);

// Exact integer identities: k = 2d(d-1)(d-2)/|Gamma|, l = (2d-2)/k,
// Euler d - rd/2 + rd/3 = 2, |Gamma| = 2rd, 6(d-2) = rd.
bool config_identities_hold(Config c);

// Stored standard-coordinate representative (vertex/edge/face pose).
BinaryForm canonical_rep(Config c, Pose pose);

// Latitude a of the ring of vertices below a top vertex: the positive root of
// a^2 (1 - 2 cos(2 pi / r)) = 1.
KElement solve_latitude(Config c);
// Rebuild the vertex-pose representative from the latitude value.
BinaryForm vertex_rep_from_latitude(Config c);

struct CheckItem {
  std::string name;
  bool pass;
  std::string detail;
};
struct Report {
  std::vector<CheckItem> items;
  bool all_pass() const {
    for (const auto& it : items)
      if (!it.pass) return false;
    return true;
  }
  void add(std::string name, bool pass, std::string detail = "") {
    items.push_back({std::move(name), pass, std::move(detail)});
  }
};

// Checks on a stored representative: (a) moment map vanishes on all three
// su(2) generators; (b) projective invariance under the vertical rotation by
// 2 pi / s (s = r for vertex pose, 2 for edge, 3 for face) -- as an explicit
// matrix action when the lift diag(e^{i pi/s}, e^{-i pi/s}) has K entries, and
// always as the equivalent support-residue-class test; (c) in vertex pose the
// form is divisible by x (a vertex at infinity).
Report verify_config(Config c, Pose pose);

// Lift of the rotation by angle 2 pi / s about the vertical axis, when its
// entries lie in K (s in {2, 3, 4}).
bool vertical_rotation_in_k(int s);
Mat2 vertical_rotation_lift(int s);

// cos^2(theta/2) = |<w1,w2>|^2 / (|w1|^2 |w2|^2) for the spherical angle
// theta between two points of CP^1.
KElement half_angle_cos_sq(const CP1Point& w1, const CP1Point& w2);

struct BubblingResult {
  std::vector<KElement> set_pq;  // sorted, deduplicated
  std::vector<KElement> set_c;
  bool disjoint;
};

// Bubbling obstruction from explicit K-rational vertex lists; the lists are
// validated against the forms via from_points.  Throws std::domain_error when
// a supplied list fails validation (roots outside K cannot be expressed at
// all, which is the unsupported-instance case).
BubblingResult bubbling_obstruction(const BinaryForm& p, const std::vector<CP1Point>& p_roots,
                                    const BinaryForm& q, const std::vector<CP1Point>& q_roots,
                                    const std::vector<CP1Point>& c_roots);

// The two-point instances used in the index-4 analysis.  For the triangle and
// tetrahedron the vertices are K-rational and the generic routine applies;
// the icosahedral pair has vertices outside K (their cross-ratios involve
// fifth roots of unity), so that instance is evaluated on an exact R^3 vertex
// model instead.
BubblingResult bubbling_instance(Config c);

// Sorted angle sets of the icosahedral pair computed from the golden-ratio
// vertex model, together with model validation.
struct IcosaBubbling {
  BubblingResult result;
  Report model_checks;
};
IcosaBubbling icosa_bubbling();

struct Halfspace {
  std::array<KElement, 3> normal;  // unit vector
  KElement bound;                  // tan(theta/4)
  std::string source;
};

struct FundamentalDomain {
  std::vector<Halfspace> halfspaces;
  std::vector<std::array<KElement, 3>> vertices;
  std::vector<size_t> redundant;  // indices of halfspaces implied by the rest
};

// Half-space presentation of the fundamental domain under modified
// stereographic projection; only the triangle and tetrahedron are supported.
FundamentalDomain fundamental_domain(Config c);

// Enumerate polytope vertices of a halfspace system by triple-plane
// intersection plus feasibility filtering.
std::vector<std::array<KElement, 3>> polytope_vertices(const std::vector<Halfspace>& hs);

}  // namespace platonic
