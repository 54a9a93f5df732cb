#include "platonic/matrix.hpp"
#include "platonic/polynomial.hpp"

namespace platonic {

Int q_content_num(const QPoly& p) {
  Int den = 1;
  for (const auto& c : p.coeffs()) den = boost::multiprecision::lcm(den, c.den());
  Int g = 0;
  for (const auto& c : p.coeffs()) {
    Int n = c.num() * (den / c.den());
    g = boost::multiprecision::gcd(g, n < 0 ? Int(-n) : n);
    if (g == 1) break;
  }
  return g;
}

QPoly q_primitive(const QPoly& p) {
  if (p.is_zero()) return p;
  Int den = 1;
  for (const auto& c : p.coeffs()) den = boost::multiprecision::lcm(den, c.den());
  std::vector<Rational> v;
  v.reserve(p.coeffs().size());
  Int g = 0;
  for (const auto& c : p.coeffs()) {
    Int n = c.num() * (den / c.den());
    g = boost::multiprecision::gcd(g, n < 0 ? Int(-n) : n);
  }
  if (p.lead().sign() < 0) g = -g;
  for (const auto& c : p.coeffs()) v.push_back(Rational(c.num() * (den / c.den()) / g));
  return QPoly(std::move(v));
}

QPoly poly_gcd(QPoly a, QPoly b) {
  if (a.is_zero()) return make_monic(b);
  if (b.is_zero()) return make_monic(a);
  a = q_primitive(a);
  b = q_primitive(b);
  while (!b.is_zero()) {
    auto [q, r] = divmod(a, b);
    (void)q;
    a = b;
    b = r.is_zero() ? r : q_primitive(r);
  }
  return make_monic(a);
}

namespace {

int sign_at(const QPoly& p, const Rational& x) { return p(x).sign(); }

int sign_at_inf(const QPoly& p, bool plus) {
  if (p.is_zero()) return 0;
  int s = p.lead().sign();
  if (!plus && p.degree() % 2 == 1) s = -s;
  return s;
}

int variations(const std::vector<int>& signs) {
  int v = 0, last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

}  // namespace

int sturm_real_roots(const QPoly& p, const SturmBound& lo, const SturmBound& hi) {
  if (p.is_zero()) throw std::domain_error("sturm_real_roots: zero polynomial");
  if (poly_gcd(p, p.derivative()).degree() > 0)
    throw std::domain_error("sturm_real_roots: polynomial not squarefree");
  std::vector<QPoly> chain;
  chain.push_back(q_primitive(p));
  chain.push_back(q_primitive(p.derivative()));
  while (!chain.back().is_zero()) {
    auto [q, r] = divmod(chain[chain.size() - 2], chain.back());
    (void)q;
    if (r.is_zero()) break;
    chain.push_back(q_primitive(-r));
  }
  auto vars_at = [&](const SturmBound& b, bool plus_inf) {
    std::vector<int> s;
    s.reserve(chain.size());
    for (const auto& f : chain)
      s.push_back(b.infinite ? sign_at_inf(f, plus_inf) : sign_at(f, b.value));
    return variations(s);
  };
  // Sturm counts roots in (lo, hi]; adjust for the requested endpoint type.
  int count = vars_at(lo, false) - vars_at(hi, true);
  if (!lo.infinite && p(lo.value).is_zero()) {
    // the count above excludes a root at lo
    if (lo.closed) ++count;
  }
  if (!hi.infinite && p(hi.value).is_zero()) {
    // the count above includes a root at hi
    if (!hi.closed) --count;
  }
  return count;
}

std::vector<Int> smith_normal_form(IntMatrix m) {
  const size_t rows = m.rows(), cols = m.cols();
  std::vector<Int> factors;
  size_t top = 0;
  while (top < rows && top < cols) {
    // find a nonzero entry in the remaining block
    size_t pi = top, pj = top;
    bool found = false;
    for (size_t i = top; i < rows && !found; ++i)
      for (size_t j = top; j < cols && !found; ++j)
        if (m(i, j) != 0) {
          pi = i;
          pj = j;
          found = true;
        }
    if (!found) break;
    if (pi != top)
      for (size_t j = 0; j < cols; ++j) std::swap(m(pi, j), m(top, j));
    if (pj != top)
      for (size_t i = 0; i < rows; ++i) std::swap(m(i, pj), m(i, top));
    // clear the pivot row and column by gcd reduction
    bool dirty = true;
    while (dirty) {
      dirty = false;
      for (size_t i = top + 1; i < rows; ++i) {
        while (m(i, top) != 0) {
          Int q = m(top, top) == 0 ? Int(0) : m(i, top) / m(top, top);
          for (size_t j = top; j < cols; ++j) m(i, j) -= q * m(top, j);
          if (m(i, top) != 0) {
            for (size_t j = top; j < cols; ++j) std::swap(m(i, j), m(top, j));
            dirty = true;
          }
        }
      }
      for (size_t j = top + 1; j < cols; ++j) {
        while (m(top, j) != 0) {
          Int q = m(top, top) == 0 ? Int(0) : m(top, j) / m(top, top);
          for (size_t i = top; i < rows; ++i) m(i, j) -= q * m(i, top);
          if (m(top, j) != 0) {
            for (size_t i = top; i < rows; ++i) std::swap(m(i, j), m(i, top));
            dirty = true;
          }
        }
      }
    }
    // enforce divisibility of later entries by the pivot
    bool again = false;
    for (size_t i = top + 1; i < rows && !again; ++i)
      for (size_t j = top + 1; j < cols && !again; ++j)
        if (m(i, j) % m(top, top) != 0) {
          for (size_t jj = top; jj < cols; ++jj) m(top, jj) += m(i, jj);
          again = true;
        }
    if (again) continue;
    Int d = m(top, top);
    factors.push_back(d < 0 ? Int(-d) : d);
    ++top;
  }
  while (factors.size() < std::min(rows, cols)) factors.push_back(Int(0));
  // strip trailing zeros: invariant factors are reported for the full rank
  return factors;
}

QPoly char_poly(const QMatrix& m) {
  if (m.rows() != m.cols()) throw std::domain_error("char_poly: not square");
  const size_t n = m.rows();
  Matrix<QPoly> lam(n, n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      QPoly e = QPoly(-m(i, j));
      if (i == j) e += QPoly::variable();
      lam(i, j) = e;
    }
  return determinant(lam);
}

size_t rank_mod_p(const IntMatrix& m, long p) {
  const size_t rows = m.rows(), cols = m.cols();
  std::vector<std::vector<long>> a(rows, std::vector<long>(cols));
  for (size_t i = 0; i < rows; ++i)
    for (size_t j = 0; j < cols; ++j) {
      Int v = m(i, j) % p;
      if (v < 0) v += p;
      a[i][j] = static_cast<long>(v);
    }
  auto inv_mod = [&](long x) {
    long t = 1, base = x % p, e = p - 2;  // p prime
    while (e) {
      if (e & 1) t = t * base % p;
      base = base * base % p;
      e >>= 1;
    }
    return t;
  };
  size_t r = 0;
  for (size_t col = 0; col < cols && r < rows; ++col) {
    size_t piv = r;
    while (piv < rows && a[piv][col] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[r]);
    long inv = inv_mod(a[r][col]);
    for (size_t j = col; j < cols; ++j) a[r][j] = a[r][j] * inv % p;
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][col] == 0) continue;
      long f = a[i][col];
      for (size_t j = col; j < cols; ++j) a[i][j] = ((a[i][j] - f * a[r][j]) % p + p) % p;
    }
    ++r;
  }
  return r;
}

}  // namespace platonic
