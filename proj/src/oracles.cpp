#include "ulam/oracles.hpp"

#include <algorithm>
#include <string>

#include "ulam/metric.hpp"

namespace ulam {

namespace {

void require_same_dim(const VectorSet& a, const VectorSet& b, const VectorSet& c,
                      const VectorSet& e, const char* what) {
  require_vector_set(a, what);
  require_vector_set(b, what);
  require_vector_set(c, what);
  require_vector_set(e, what);
  if (a.dim != b.dim || a.dim != c.dim || a.dim != e.dim)
    fail(Errc::shape_mismatch, std::string(what) + ": sets disagree on dimension");
}

bool quad_orthogonal(const BinaryVector& a, const BinaryVector& b, const BinaryVector& c,
                     const BinaryVector& e) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] == '1' && b[i] == '1' && c[i] == '1' && e[i] == '1') return false;
  return true;
}

}  // namespace

bool ov4_bruteforce(const VectorSet& a, const VectorSet& b, const VectorSet& c,
                    const VectorSet& e) {
  require_same_dim(a, b, c, e, "ov4_bruteforce");
  for (const auto& va : a.vecs)
    for (const auto& vb : b.vecs)
      for (const auto& vc : c.vecs)
        for (const auto& ve : e.vecs)
          if (quad_orthogonal(va, vb, vc, ve)) return true;
  return false;
}

bool qov_eaee_bruteforce(const VectorSet& a, const VectorSet& b, const VectorSet& c,
                         const VectorSet& e) {
  require_same_dim(a, b, c, e, "qov_eaee_bruteforce");
  for (const auto& va : a.vecs) {
    bool all_b = true;
    for (const auto& vb : b.vecs) {
      bool found = false;
      for (const auto& vc : c.vecs) {
        for (const auto& ve : e.vecs) {
          if (quad_orthogonal(va, vb, vc, ve)) {
            found = true;
            break;
          }
        }
        if (found) break;
      }
      if (!found) {
        all_b = false;
        break;
      }
    }
    if (all_b) return true;
  }
  return false;
}

std::uint64_t maxcut_bruteforce(const Graph& g) {
  if (g.n > 24) fail(Errc::too_large, "maxcut_bruteforce beyond 24 vertices");
  std::uint64_t best = 0;
  for (std::uint64_t mask = 0; mask < (1ull << g.n); ++mask)
    best = std::max(best, cut_value(g, mask));
  return best;
}

TwoPermMedianResult two_perm_median_exhaustive(const PermString& a, const PermString& b) {
  require_valid(a, "two_perm_median_exhaustive first argument");
  require_valid(b, "two_perm_median_exhaustive second argument");
  if (a.size() > 7) fail(Errc::guard_exceeded, "two_perm_median_exhaustive beyond 7 symbols");

  PermString cand(a);
  std::sort(cand.begin(), cand.end());
  {
    PermString sb(b);
    std::sort(sb.begin(), sb.end());
    if (cand != sb) fail(Errc::alphabet_mismatch, "inputs over different alphabets");
  }

  TwoPermMedianResult r;
  r.cost = UINT64_MAX;
  do {
    std::uint64_t c = ulam_distance(cand, a) + ulam_distance(cand, b);
    if (c < r.cost) {
      r.cost = c;
      r.optima.clear();
    }
    if (c == r.cost) r.optima.push_back(cand);
  } while (std::next_permutation(cand.begin(), cand.end()));
  return r;
}

}  // namespace ulam
