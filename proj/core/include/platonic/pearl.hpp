#pragma once

#include <optional>
#include <string>
#include <vector>

#include "platonic/configs.hpp"
#include "platonic/matrix.hpp"

namespace platonic {
namespace pearl {

// Pearl-complex data: explicit integer differentials for the triangle and
// tetrahedron, invariant-factor descriptions for the octahedron and
// icosahedron (whose Morse blocks are not pinned down individually).
struct PearlComplex {
  Config c;
  int X = 1, Y = 1;   // index-2 trajectory signs
  long index4 = 0;    // Z-hat, Z or D depending on c
  bool is_explicit = false;
  IntMatrix d0, d1;               // explicit structure
  std::vector<Int> snf_diagonal;  // abstract structure: SNF diagonal of d1
};

PearlComplex build_complex(Config c, int X, int Y, long index4);

// Solve d1 d0 = 0 for the unknown quantum-correction block A of d0 (triangle
// and tetrahedron).  Returns the forced block; throws on non-uniqueness.
IntMatrix solve_A_block(Config c, int X, int Y, long index4);

struct HFGroups {
  std::vector<Int> hf0_factors;  // invariant factors > 1 of coker d1
  std::vector<Int> hf1_factors;  // zero when det d1 != 0
};
HFGroups hf_groups(Config c, int X, int Y, long index4);

// (dim HF^0, dim HF^1) over the prime field F_p.
std::pair<size_t, size_t> field_dims(Config c, int X, int Y, long index4, long p);

// Symbolic determinant identities det d1 = 3XY - 4Z (triangle) and
// 4XY - 3Z (tetrahedron), checked over all sign choices and an index4 range.
bool det_identity_holds(Config c);

struct Index4Sources {
  bool triangle_ok = false;      // pencil/coplanarity nonexistence report
  bool tetrahedron_ok = false;   // pencil/coplanarity nonexistence report
  bool octahedron_hom_ok = false;  // parametric homomorphism search outcome
  bool icosahedron_ok = false;   // explicit-curve pipeline outcome
};

struct Index4Value {
  long magnitude;  // |Z-hat|, |Z|, |D|
  bool signed_known;
  std::string provenance;
};

// The index-4 disc counts, each tied to the verification that produced it;
// throws when the corresponding upstream verification failed.
Index4Value determine_index4(Config c, const Index4Sources& src);

}  // namespace pearl
}  // namespace platonic
