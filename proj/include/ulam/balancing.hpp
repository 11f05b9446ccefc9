#pragma once

#include <cstdint>
#include <vector>

#include "ulam/perm.hpp"

namespace ulam {

// Output of a distance-balancing stage. For every i:
//   |k_i + sum_{j != i} d_U(perms[i], perms[j]) - d| <= deviation bound of the stage
// and d_U(perms[i], tau) == tau_distance exactly.
struct BalanceOutput {
  std::vector<PermString> perms;
  PermString tau;
  std::uint64_t d = 0;             // common load target, permutation side
  std::uint64_t tau_distance = 0;  // shared exact distance to tau
  std::uint64_t hamming_target = 0;  // load target before the final embedding
};

// Deviation <= n. Requires n % 4 == 0 and k_i in [1, n_cap].
BalanceOutput balance_coarse(const std::vector<std::uint64_t>& k, std::uint64_t n_cap);

// Deviation <= 1. Requires n >= 3 and k_i in [1, n_cap].
BalanceOutput balance_fine(const std::vector<std::uint64_t>& k, std::uint64_t n_cap);

// Coarse stage then fine stage on the residuals; deviation <= 1 against the
// original k. Requires n % 4 == 0; k_i >= 0 arbitrary.
BalanceOutput balance_full(const std::vector<std::uint64_t>& k);

}  // namespace ulam
