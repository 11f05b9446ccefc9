#pragma once

#include <algorithm>
#include <cstdint>
#include <string_view>
#include <vector>

#include "ulam/perm.hpp"
#include "ulam/vectors.hpp"

namespace ulam {

// Reference LCS: two-row quadratic DP, no assumptions about repeats. Kept as an
// independent check on the patience-sorting path; do not "optimize" it.
template <typename Seq>
std::uint64_t lcs_oracle(const Seq& a, const Seq& b) {
  const std::size_t n = a.size(), m = b.size();
  std::vector<std::uint64_t> prev(m + 1, 0), cur(m + 1, 0);
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= m; ++j) {
      if (a[i - 1] == b[j - 1])
        cur[j] = prev[j - 1] + 1;
      else
        cur[j] = std::max(prev[j], cur[j - 1]);
    }
    std::swap(prev, cur);
  }
  return prev[m];
}

inline std::uint64_t lcs_oracle_str(std::string_view a, std::string_view b) {
  return lcs_oracle(a, b);
}

// |a| - LCS(a, b). Requires a and b to be valid permutation strings over the same
// alphabet; O(L log L) via longest increasing subsequence of positions.
std::uint64_t ulam_distance(const PermString& a, const PermString& b);

// Same value through the quadratic DP (plus an explicit alphabet check).
std::uint64_t ulam_distance_oracle(const PermString& a, const PermString& b);

std::uint64_t hamming_distance(std::string_view a, std::string_view b);
std::uint64_t hamming_distance(const std::vector<Sym>& a, const std::vector<Sym>& b);

// Distance between `copies`-fold concatenations of the big disjunction gadgets of
// two equally-shaped vector tuples: copies * m * sum_i d_H(t_i, t_i').
std::uint64_t structured_f_distance(const VectorSet& t, const VectorSet& t2, unsigned copies);

enum class DistanceMode { fast, oracle };

// Full symmetric matrix of pairwise Ulam distances. Honors ULAM_THREADS (default:
// hardware concurrency); output does not depend on the thread count.
std::vector<std::vector<std::uint64_t>> pairwise_matrix(const std::vector<PermString>& members,
                                                        DistanceMode mode = DistanceMode::fast);

}  // namespace ulam
