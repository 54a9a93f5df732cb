#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "platonic/configs.hpp"
#include "platonic/matrix.hpp"

namespace platonic {
namespace qh {

// Class in the quantum cohomology ring on the basis (1, H, E, HE); integer
// coordinates.
struct QHClass {
  std::array<Int, 4> c{};

  QHClass() = default;
  QHClass(Int u, Int h, Int e, Int he) : c{std::move(u), std::move(h), std::move(e), std::move(he)} {}
  static QHClass unit() { return QHClass(1, 0, 0, 0); }
  static QHClass H() { return QHClass(0, 1, 0, 0); }
  static QHClass E() { return QHClass(0, 0, 1, 0); }

  friend bool operator==(const QHClass& a, const QHClass& b) { return a.c == b.c; }
  QHClass operator+(const QHClass& o) const {
    QHClass r;
    for (int i = 0; i < 4; ++i) r.c[static_cast<size_t>(i)] = c[static_cast<size_t>(i)] + o.c[static_cast<size_t>(i)];
    return r;
  }
  QHClass scaled(const Int& s) const {
    QHClass r;
    for (int i = 0; i < 4; ++i) r.c[static_cast<size_t>(i)] = c[static_cast<size_t>(i)] * s;
    return r;
  }
};

// Test hook: corrupt the stored quantum-correction table (for the negative
// path of the verification runner).
void inject_table1_fault(bool on);
bool table1_fault_injected();

// QH*(X_C; Z) presented as Z[H, E] modulo H^2 = k_C E + R_C and E^2 = Q_C.
// Products are computed by term rewriting; the constructor checks that
// reducing H^2 E^2 in either order agrees (confluence of the two rules).
class QHRing {
public:
  explicit QHRing(Config c);

  Config config() const { return c_; }
  const QHClass& R() const { return r_; }
  const QHClass& Q() const { return q_; }

  QHClass mul(const QHClass& a, const QHClass& b) const;
  bool confluent() const { return confluent_; }

  // Matrix of quantum multiplication by a on the basis (1, H, E, HE).
  IntMatrix mult_matrix(const QHClass& a) const;

private:
  QHClass reduce_monomial(long he, long ee) const;  // H^he E^ee to normal form
  Config c_;
  QHClass r_, q_;
  bool confluent_ = false;
};

QPoly char_poly_int(const IntMatrix& m);

// Characteristic polynomials of c_1* = l_C H * and PD(N_C)* = v_C E *.
QPoly chi_c1(Config c);
QPoly chi_pdn(Config c);

enum class SignMode { both, positive_face };

// Primes p admitted by the eigenvalue constraints: p divides chi_c1(+-v_C),
// intersected (except for the icosahedron) with the primes dividing
// chi_pdn(f_C) (and chi_pdn(-f_C) in mode both).
std::set<long> eigen_sieve(Config c, SignMode mode);

struct GcdTrick {
  Int chi_plus;   // chi_c1(12)
  Int chi_minus;  // chi_c1(-12)
  Int gcd_value;
  std::set<long> primes;
};
GcdTrick icosa_gcd_trick();

std::set<long> prime_factors(Int n);

// ---- finite ring homomorphism searches -------------------------------------

// Constraint on theta: theta(l_C H) in lh_allowed and theta(v_C E) in
// ve_allowed (values in the target ring; empty set = unconstrained).
struct ZmConstraints {
  std::vector<long> lh_allowed;
  std::vector<long> ve_allowed;
};

// All unital ring homomorphisms QH*(X_C; Z) -> Z/m, determined by
// (theta(H), theta(E)), passing the constraints; sorted by image pair.
std::vector<std::pair<long, long>> hom_search_zm(Config c, long m, const ZmConstraints& cons);

// Element a + b x of Z[x]/(D, 2x, x^2 - alpha x - beta): a mod D, b mod 2.
struct ParamSolution {
  long D, alpha, beta;
  std::vector<std::array<long, 4>> images;  // (h_a, h_b, e_a, e_b)
};

// Exhaustive search for the octahedron over D in {2,4,8,16}, alpha in Z/2,
// beta in Z/D, with constraints theta(2H) = +-6 and theta(6E) = 8.
std::vector<ParamSolution> hom_search_octa_param();

}  // namespace qh
}  // namespace platonic
