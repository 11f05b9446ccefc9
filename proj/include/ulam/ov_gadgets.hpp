#pragma once

#include <cstdint>

#include "ulam/perm.hpp"
#include "ulam/vectors.hpp"

namespace ulam {

enum class Side { a, b };

// Bit gadgets over {1,2,3}. LCS across sides is 2 - x*y, so exactly the pair
// (1,1) drops to 1.
PermString coordinate_gadget(Side side, int bit);

// Concatenation of shifted bit gadgets, one per coordinate; length 3d.
// LCS(vector_gadget(a, .), vector_gadget(b, .)) = 2d - <a,b> across sides.
PermString vector_gadget(Side side, const BinaryVector& v);

// Vector gadget guarded by a shared run of 2d-1 high symbols (prefix on side a,
// suffix on side b); length 5d-1. Cross-side LCS is 2d when orthogonal, 2d-1
// otherwise.
PermString normalized_gadget(Side side, const BinaryVector& v);

// Big disjunction over an m-tuple: an m x m grid of shifted normalized gadgets,
// row-major. Side a fills rows with one tuple entry each; side b fills columns.
// Length (5d-1)m^2; cross-side Ulam distance is 3dm^2 - #{orthogonal pairs}.
PermString or_gadget_f(const VectorSet& tuple);
PermString or_gadget_g(const VectorSet& tuple);

}  // namespace ulam
