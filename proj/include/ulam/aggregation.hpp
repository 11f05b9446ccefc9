#pragma once

#include <cstdint>
#include <vector>

#include "ulam/metric.hpp"
#include "ulam/perm.hpp"

namespace ulam {

struct UlamInstance {
  std::vector<PermString> perms;
  std::size_t length = 0;  // common member length
  std::uint64_t tau = 0;
  bool multiset = false;  // repeated members allowed
};

struct BichromaticInstance {
  std::vector<PermString> xs, ys;
  std::size_t length = 0;
  std::uint64_t tau = 0;
};

struct SolveResult {
  std::size_t index = static_cast<std::size_t>(-1);  // member index where applicable
  PermString perm;
  std::uint64_t cost = 0;
};

// Best member under sum (median) or max (center) of distances to all members.
// Ties go to the lowest index.
SolveResult discrete_median(const std::vector<PermString>& members,
                            DistanceMode mode = DistanceMode::fast);
SolveResult discrete_center(const std::vector<PermString>& members,
                            DistanceMode mode = DistanceMode::fast);

// Candidates drawn from xs, objective over ys.
SolveResult bichromatic_median(const std::vector<PermString>& xs,
                               const std::vector<PermString>& ys,
                               DistanceMode mode = DistanceMode::fast);
SolveResult bichromatic_center(const std::vector<PermString>& xs,
                               const std::vector<PermString>& ys,
                               DistanceMode mode = DistanceMode::fast);

// Optimum over every permutation of the shared alphabet; guard_exceeded above
// `guard` symbols. Ties go to the lexicographically smallest permutation.
SolveResult continuous_median_exhaustive(const std::vector<PermString>& members,
                                         std::size_t guard = 9);
SolveResult continuous_center_exhaustive(const std::vector<PermString>& members,
                                         std::size_t guard = 9);

struct Certificate;

// Median search over the 2^n cut-shaped candidates of a max-cut reduction
// certificate. `index` is the winning side mask (lowest mask on ties); the cost
// counts the reference rows with their stored multiplicity.
SolveResult restricted_median_search(const Certificate& cert);

}  // namespace ulam
