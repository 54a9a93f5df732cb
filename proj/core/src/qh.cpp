#include "platonic/qh.hpp"

#include <atomic>

namespace platonic {
namespace qh {

namespace {
std::atomic<bool> g_table1_fault{false};
}

void inject_table1_fault(bool on) { g_table1_fault.store(on); }
bool table1_fault_injected() { return g_table1_fault.load(); }

QHRing::QHRing(Config c) : c_(c) {
  switch (c) {
    case Config::triangle:
      r_ = QHClass(0, 0, 0, 0);
      q_ = QHClass(1, 0, 0, 0);
      break;
    case Config::tetrahedron:
      r_ = QHClass(0, 0, 0, 0);
      q_ = QHClass::H();
      break;
    case Config::octahedron:
      r_ = QHClass(3, 0, 0, 0);
      q_ = QHClass(1, 0, 1, 0);
      break;
    case Config::icosahedron:
      r_ = QHClass(24, 2, 0, 0);
      q_ = QHClass(4, 1, 2, 0);
      break;
  }
  if (table1_fault_injected()) r_.c[0] += 1;  // deliberate corruption for tests
  // confluence: H^2 E^2 reduced H-first and E-first must agree
  QHClass a = reduce_monomial(2, 2);
  // E-first route: E^2 -> Q, then multiply by normal form of H^2
  QHClass h2 = reduce_monomial(2, 0);
  QHClass b;
  {
    // multiply h2 * Q via monomial reduction
    const QHClass& q = q_;
    for (int i = 0; i < 4; ++i) {
      if (q.c[static_cast<size_t>(i)] == 0) continue;
      long he = (i == 1 || i == 3) ? 1 : 0;
      long ee = (i == 2 || i == 3) ? 1 : 0;
      for (int j = 0; j < 4; ++j) {
        if (h2.c[static_cast<size_t>(j)] == 0) continue;
        long he2 = he + ((j == 1 || j == 3) ? 1 : 0);
        long ee2 = ee + ((j == 2 || j == 3) ? 1 : 0);
        b = b + reduce_monomial(he2, ee2).scaled(q.c[static_cast<size_t>(i)] * h2.c[static_cast<size_t>(j)]);
      }
    }
  }
  confluent_ = a == b;
}

QHClass QHRing::reduce_monomial(long he, long ee) const {
  // rewrite H^2 -> k E + R and E^2 -> Q until the exponents are 0/1
  const long k = config_data(c_).k;
  if (he >= 2) {
    QHClass lower = reduce_monomial(he - 2, ee + 1).scaled(Int(k));
    // R * H^(he-2) E^ee
    QHClass acc = lower;
    for (int i = 0; i < 4; ++i) {
      if (r_.c[static_cast<size_t>(i)] == 0) continue;
      long dh = (i == 1 || i == 3) ? 1 : 0;
      long de = (i == 2 || i == 3) ? 1 : 0;
      acc = acc + reduce_monomial(he - 2 + dh, ee + de).scaled(r_.c[static_cast<size_t>(i)]);
    }
    return acc;
  }
  if (ee >= 2) {
    QHClass acc;
    for (int i = 0; i < 4; ++i) {
      if (q_.c[static_cast<size_t>(i)] == 0) continue;
      long dh = (i == 1 || i == 3) ? 1 : 0;
      long de = (i == 2 || i == 3) ? 1 : 0;
      acc = acc + reduce_monomial(he + dh, ee - 2 + de).scaled(q_.c[static_cast<size_t>(i)]);
    }
    return acc;
  }
  QHClass out;
  int idx = (he == 1 && ee == 1) ? 3 : (ee == 1 ? 2 : (he == 1 ? 1 : 0));
  out.c[static_cast<size_t>(idx)] = 1;
  return out;
}

QHClass QHRing::mul(const QHClass& a, const QHClass& b) const {
  QHClass acc;
  for (int i = 0; i < 4; ++i) {
    if (a.c[static_cast<size_t>(i)] == 0) continue;
    long ha = (i == 1 || i == 3) ? 1 : 0, ea = (i == 2 || i == 3) ? 1 : 0;
    for (int j = 0; j < 4; ++j) {
      if (b.c[static_cast<size_t>(j)] == 0) continue;
      long hb = (j == 1 || j == 3) ? 1 : 0, eb = (j == 2 || j == 3) ? 1 : 0;
      acc = acc + reduce_monomial(ha + hb, ea + eb)
                      .scaled(a.c[static_cast<size_t>(i)] * b.c[static_cast<size_t>(j)]);
    }
  }
  return acc;
}

IntMatrix QHRing::mult_matrix(const QHClass& a) const {
  static const QHClass basis[4] = {QHClass::unit(), QHClass::H(), QHClass::E(),
                                   QHClass(0, 0, 0, 1)};
  IntMatrix m(4, 4);
  for (int j = 0; j < 4; ++j) {
    QHClass col = mul(a, basis[j]);
    for (int i = 0; i < 4; ++i) m(static_cast<size_t>(i), static_cast<size_t>(j)) = col.c[static_cast<size_t>(i)];
  }
  return m;
}

QPoly char_poly_int(const IntMatrix& m) {
  QMatrix q(m.rows(), m.cols());
  for (size_t i = 0; i < m.rows(); ++i)
    for (size_t j = 0; j < m.cols(); ++j) q(i, j) = Rational(m(i, j));
  return char_poly(q);
}

QPoly chi_c1(Config c) {
  QHRing ring(c);
  return char_poly_int(ring.mult_matrix(QHClass::H().scaled(config_data(c).l)));
}

QPoly chi_pdn(Config c) {
  QHRing ring(c);
  return char_poly_int(ring.mult_matrix(QHClass::E().scaled(config_data(c).d)));
}

std::set<long> prime_factors(Int n) {
  std::set<long> out;
  if (n < 0) n = -n;
  if (n == 0) throw std::domain_error("prime_factors: zero");
  for (long p = 2; Int(p) * p <= n; p == 2 ? p = 3 : p += 2)
    while (n % p == 0) {
      out.insert(p);
      n /= p;
    }
  if (n > 1) {
    if (n > std::numeric_limits<long>::max())
      throw std::domain_error("prime_factors: factor too large");
    out.insert(static_cast<long>(n));
  }
  return out;
}

std::set<long> eigen_sieve(Config c, SignMode mode) {
  const ConfigData& cd = config_data(c);
  QPoly c1 = chi_c1(c);
  auto eval_primes = [](const QPoly& p, long x) {
    Rational v = p(Rational(Int(x)));
    return prime_factors(v.num());
  };
  std::set<long> s1 = eval_primes(c1, cd.d);
  for (long p : eval_primes(c1, -cd.d)) s1.insert(p);
  if (c == Config::icosahedron) return s1;
  QPoly pdn = chi_pdn(c);
  std::set<long> s2 = eval_primes(pdn, cd.f);
  if (mode == SignMode::both)
    for (long p : eval_primes(pdn, -cd.f)) s2.insert(p);
  std::set<long> out;
  for (long p : s1)
    if (s2.count(p)) out.insert(p);
  return out;
}

GcdTrick icosa_gcd_trick() {
  QPoly c1 = chi_c1(Config::icosahedron);
  GcdTrick out;
  out.chi_plus = c1(Rational(Int(12))).num();
  out.chi_minus = c1(Rational(Int(-12))).num();
  Int a = out.chi_plus < 0 ? Int(-out.chi_plus) : out.chi_plus;
  Int b = out.chi_minus < 0 ? Int(-out.chi_minus) : out.chi_minus;
  out.gcd_value = boost::multiprecision::gcd(a, b);
  out.primes = prime_factors(out.gcd_value);
  return out;
}

std::vector<std::pair<long, long>> hom_search_zm(Config c, long m, const ZmConstraints& cons) {
  const ConfigData& cd = config_data(c);
  QHRing ring(c);
  auto val_mod = [&](const QHClass& cls, long h, long e) {
    // theta(cls) for theta(H) = h, theta(E) = e (cls in normal form)
    long u = static_cast<long>(cls.c[0] % m), ch = static_cast<long>(cls.c[1] % m),
         ce = static_cast<long>(cls.c[2] % m), che = static_cast<long>(cls.c[3] % m);
    long v = (u + ch * h + ce * e + che * h % m * e) % m;
    return ((v % m) + m) % m;
  };
  auto in_allowed = [&](long v, const std::vector<long>& allowed) {
    if (allowed.empty()) return true;
    for (long x : allowed)
      if (((x % m) + m) % m == v) return true;
    return false;
  };
  std::vector<std::pair<long, long>> out;
  for (long h = 0; h < m; ++h)
    for (long e = 0; e < m; ++e) {
      // defining relations: h^2 = theta(kE + R), e^2 = theta(Q)
      long lhs_h = h * h % m;
      long rhs_h = (val_mod(ring.R(), h, e) + cd.k % m * e) % m;
      if (lhs_h != rhs_h) continue;
      long lhs_e = e * e % m;
      long rhs_e = val_mod(ring.Q(), h, e);
      if (lhs_e != rhs_e) continue;
      if (!in_allowed(cd.l * h % m, cons.lh_allowed)) continue;
      if (!in_allowed(cd.d * e % m, cons.ve_allowed)) continue;
      out.push_back({h, e});
    }
  return out;  // already sorted by construction
}

namespace {

// Element a + b x of Z[x]/(D, 2x, x^2 - alpha x - beta).
struct PElem {
  long a, b;
};

struct PRing {
  long D, alpha, beta;
  PElem make(long a, long b) const { return {((a % D) + D) % D, ((b % 2) + 2) % 2}; }
  PElem add(PElem x, PElem y) const { return make(x.a + y.a, x.b + y.b); }
  PElem mul(PElem x, PElem y) const {
    // (a + bx)(c + dx) = ac + (ad + bc) x + bd x^2, x^2 = alpha x + beta,
    // and 2x = 0 collapses even x-coefficients
    long a = x.a * y.a + x.b * y.b % 2 * beta;
    long b = x.a * y.b + x.b * y.a + x.b * y.b % 2 * alpha;
    return make(a, b);
  }
  PElem scal(long s, PElem x) const { return make(s * x.a, s % 2 * x.b); }
  bool eq(PElem x, PElem y) const { return x.a == y.a && x.b == y.b; }
};

}  // namespace

std::vector<ParamSolution> hom_search_octa_param() {
  const ConfigData& cd = config_data(Config::octahedron);
  QHRing ring(Config::octahedron);
  std::vector<ParamSolution> out;
  for (long D : {2L, 4L, 8L, 16L})
    for (long alpha : {0L, 1L})
      for (long beta = 0; beta < D; ++beta) {
        PRing R{D, alpha, beta};
        ParamSolution sol{D, alpha, beta, {}};
        for (long ha = 0; ha < D; ++ha)
          for (long hb = 0; hb < 2; ++hb)
            for (long ea = 0; ea < D; ++ea)
              for (long eb = 0; eb < 2; ++eb) {
                PElem h = R.make(ha, hb), e = R.make(ea, eb);
                // relations H^2 = k E + R_C, E^2 = Q_C with table values
                PElem rel1 = R.add(R.scal(cd.k, e), R.make(ring.R().c[0].convert_to<long>(), 0));
                if (!R.eq(R.mul(h, h), rel1)) continue;
                PElem q = R.add(R.add(R.make(ring.Q().c[0].convert_to<long>(), 0),
                                      R.scal(ring.Q().c[1].convert_to<long>(), h)),
                                R.scal(ring.Q().c[2].convert_to<long>(), e));
                if (!R.eq(R.mul(e, e), q)) continue;
                // closed-open constraints: theta(2H) = +-6, theta(6E) = 8
                PElem lh = R.scal(cd.l, h);
                if (!R.eq(lh, R.make(6, 0)) && !R.eq(lh, R.make(-6, 0))) continue;
                if (!R.eq(R.scal(cd.d, e), R.make(8, 0))) continue;
                sol.images.push_back({ha, hb, ea, eb});
              }
        if (!sol.images.empty()) out.push_back(sol);
      }
  return out;
}

}  // namespace qh
}  // namespace platonic
