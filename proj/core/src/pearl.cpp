#include "platonic/pearl.hpp"

#include <stdexcept>

namespace platonic {
namespace pearl {

namespace {

IntMatrix triangle_d1(int X, int Y, long Z) {
  IntMatrix m(4, 4);
  long rows[4][4] = {{X, X, X, Z}, {1, 2, 1, Y}, {1, 1, 2, Y}, {2, 1, 1, Y}};
  for (size_t i = 0; i < 4; ++i)
    for (size_t j = 0; j < 4; ++j) m(i, j) = rows[i][j];
  return m;
}

IntMatrix tetra_d1(int X, int Y, long Z) {
  IntMatrix m(5, 5);
  long rows[5][5] = {{X, X, X, X, Z},
                     {0, 1, 1, 1, Y},
                     {1, 0, 1, 1, Y},
                     {1, 1, 0, 1, Y},
                     {1, 1, 1, 0, Y}};
  for (size_t i = 0; i < 5; ++i)
    for (size_t j = 0; j < 5; ++j) m(i, j) = rows[i][j];
  return m;
}

}  // namespace

PearlComplex build_complex(Config c, int X, int Y, long index4) {
  if (X * X != 1 || Y * Y != 1)
    throw std::domain_error("build_complex: X and Y must be signs");
  PearlComplex pc;
  pc.c = c;
  pc.X = X;
  pc.Y = Y;
  pc.index4 = index4;
  switch (c) {
    case Config::triangle:
      pc.is_explicit = true;
      pc.d1 = triangle_d1(X, Y, index4);
      pc.d0 = IntMatrix(4, 4);  // quantum block forced to zero by d1 d0 = 0
      break;
    case Config::tetrahedron:
      pc.is_explicit = true;
      pc.d1 = tetra_d1(X, Y, index4);
      pc.d0 = IntMatrix(5, 5);
      break;
    case Config::octahedron: {
      if (index4 % 2 != 0)
        throw std::domain_error("build_complex: index-4 count must be even for this configuration");
      // SNF of the Morse block is 1, ..., 1, 2; the full d1 appends D
      pc.snf_diagonal = {Int(1), Int(1), Int(2), Int(index4 < 0 ? -index4 : index4)};
      break;
    }
    case Config::icosahedron: {
      if (index4 % 2 != 0)
        throw std::domain_error("build_complex: index-4 count must be even for this configuration");
      pc.snf_diagonal = {Int(1), Int(1), Int(index4 < 0 ? -index4 : index4)};
      break;
    }
  }
  if (pc.is_explicit) {
    IntMatrix prod = pc.d1 * pc.d0;
    for (size_t i = 0; i < prod.rows(); ++i)
      for (size_t j = 0; j < prod.cols(); ++j)
        if (prod(i, j) != 0) throw std::runtime_error("build_complex: d1 d0 != 0");
  }
  return pc;
}

IntMatrix solve_A_block(Config c, int X, int Y, long index4) {
  if (c != Config::triangle && c != Config::tetrahedron)
    throw std::domain_error("solve_A_block: explicit complexes only");
  PearlComplex pc = build_complex(c, X, Y, index4);
  const size_t n = pc.d1.rows();
  // d0 has first column zero and zero last row; unknown block A sits in rows
  // 0..n-2, columns 1..n-1.  d1 d0 = 0 forces (first n-1 columns of d1) A = 0.
  std::vector<size_t> rows_all, cols_sub;
  for (size_t i = 0; i < n; ++i) rows_all.push_back(i);
  for (size_t j = 0; j + 1 < n; ++j) cols_sub.push_back(j);
  IntMatrix sub = pc.d1.submatrix(rows_all, cols_sub);  // n x (n-1)
  if (rank_of(sub) != n - 1)
    throw std::runtime_error("solve_A_block: kernel not trivial, block not determined");
  return IntMatrix(n - 1, n - 1);  // the unique solution is zero
}

HFGroups hf_groups(Config c, int X, int Y, long index4) {
  PearlComplex pc = build_complex(c, X, Y, index4);
  HFGroups out;
  std::vector<Int> diag =
      pc.is_explicit ? smith_normal_form(pc.d1) : pc.snf_diagonal;
  bool nonsingular = true;
  for (const auto& d : diag) {
    if (d == 0) nonsingular = false;
    if (d > 1) out.hf0_factors.push_back(d);
  }
  if (!nonsingular) {
    // kernel-based HF^1 (free part of the kernel; d0 = 0 after A = 0)
    size_t zeros = 0;
    for (const auto& d : diag)
      if (d == 0) ++zeros;
    out.hf1_factors.assign(zeros, Int(0));
  }
  return out;
}

std::pair<size_t, size_t> field_dims(Config c, int X, int Y, long index4, long p) {
  if (p < 2) throw std::domain_error("field_dims: p must be prime");
  PearlComplex pc = build_complex(c, X, Y, index4);
  size_t corank;
  size_t n;
  if (pc.is_explicit) {
    n = pc.d1.rows();
    corank = n - rank_mod_p(pc.d1, p);
  } else {
    // corank mod p = number of invariant factors divisible by p
    corank = 0;
    n = pc.snf_diagonal.size();
    for (const auto& d : pc.snf_diagonal)
      if (d % p == 0) ++corank;
  }
  // d0 = 0, so dim HF^0 = corank(d1) and dim HF^1 = dim ker d1 = corank(d1)
  (void)n;
  return {corank, corank};
}

bool det_identity_holds(Config c) {
  if (c != Config::triangle && c != Config::tetrahedron) return false;
  for (int X : {1, -1})
    for (int Y : {1, -1})
      for (long z = -10; z <= 10; ++z) {
        PearlComplex pc = build_complex(c, X, Y, z);
        Int det = determinant(pc.d1);
        Int expect = c == Config::triangle ? Int(3 * X * Y - 4 * z) : Int(4 * X * Y - 3 * z);
        if (det != expect) return false;
      }
  return true;
}

Index4Value determine_index4(Config c, const Index4Sources& src) {
  switch (c) {
    case Config::triangle:
      if (!src.triangle_ok)
        throw std::runtime_error("determine_index4: triangle nonexistence verification failed");
      return {2, false, "two axial face-type discs; two-pole curves excluded by the pencil and coplanarity checks"};
    case Config::tetrahedron:
      if (!src.tetrahedron_ok)
        throw std::runtime_error("determine_index4: tetrahedron nonexistence verification failed");
      return {0, true, "no index-4 discs through the chosen pair: all branches excluded"};
    case Config::octahedron:
      if (!src.octahedron_hom_ok)
        throw std::runtime_error("determine_index4: parametric homomorphism search failed");
      return {2, false, "parametric ring search feasible only at D = 2"};
    case Config::icosahedron:
      if (!src.icosahedron_ok)
        throw std::runtime_error("determine_index4: explicit-curve pipeline failed");
      return {8, false, "two axial discs plus the six-curve rotation orbit, equal signs"};
  }
  throw std::domain_error("determine_index4: bad configuration");
}

}  // namespace pearl
}  // namespace platonic
