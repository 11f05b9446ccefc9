#pragma once

#include <cstdint>
#include <vector>

#include "ulam/graph.hpp"
#include "ulam/perm.hpp"
#include "ulam/vectors.hpp"

namespace ulam {

// Exists (a,b,c,e) with a.b.c.e = 0 coordinate-wise product summed to zero.
bool ov4_bruteforce(const VectorSet& a, const VectorSet& b, const VectorSet& c,
                    const VectorSet& e);

// Exists a in A, for all b in B, exists (c,e) with <a.c, b.e> = 0.
bool qov_eaee_bruteforce(const VectorSet& a, const VectorSet& b, const VectorSet& c,
                         const VectorSet& e);

// Maximum cut over all 2^n sides; too_large above 24 vertices.
std::uint64_t maxcut_bruteforce(const Graph& g);

struct TwoPermMedianResult {
  std::uint64_t cost = 0;
  std::vector<PermString> optima;  // lexicographic order
};

// All continuous medians of {a, b} by full enumeration of the shared alphabet;
// guard_exceeded above 7 symbols.
TwoPermMedianResult two_perm_median_exhaustive(const PermString& a, const PermString& b);

}  // namespace ulam
