#include "ulam/aggregation.hpp"

#include <algorithm>
#include <string>

#include "ulam/reductions.hpp"

namespace ulam {

namespace {

SolveResult best_row(const std::vector<std::vector<std::uint64_t>>& m, bool center) {
  SolveResult r;
  r.cost = UINT64_MAX;
  for (std::size_t i = 0; i < m.size(); ++i) {
    std::uint64_t c = 0;
    for (std::uint64_t d : m[i]) c = center ? std::max(c, d) : c + d;
    if (c < r.cost) {
      r.cost = c;
      r.index = i;
    }
  }
  return r;
}

SolveResult discrete_best(const std::vector<PermString>& members, DistanceMode mode, bool center) {
  if (members.empty()) fail(Errc::empty_instance, "discrete objective over zero members");
  SolveResult r = best_row(pairwise_matrix(members, mode), center);
  r.perm = members[r.index];
  return r;
}

SolveResult bichromatic_best(const std::vector<PermString>& xs, const std::vector<PermString>& ys,
                             DistanceMode mode, bool center) {
  if (xs.empty() || ys.empty()) fail(Errc::empty_instance, "bichromatic objective needs both sides");
  auto dist = [mode](const PermString& a, const PermString& b) {
    return mode == DistanceMode::fast ? ulam_distance(a, b) : ulam_distance_oracle(a, b);
  };
  SolveResult r;
  r.cost = UINT64_MAX;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    std::uint64_t c = 0;
    for (const PermString& y : ys) {
      std::uint64_t d = dist(xs[i], y);
      c = center ? std::max(c, d) : c + d;
    }
    if (c < r.cost) {
      r.cost = c;
      r.index = i;
    }
  }
  r.perm = xs[r.index];
  return r;
}

SolveResult continuous_best(const std::vector<PermString>& members, std::size_t guard,
                            bool center) {
  if (members.empty()) fail(Errc::empty_instance, "continuous objective over zero members");
  PermString cand(members[0]);
  std::sort(cand.begin(), cand.end());
  if (cand.size() > guard)
    fail(Errc::guard_exceeded, "alphabet of " + std::to_string(cand.size()) +
                                   " symbols exceeds enumeration guard " + std::to_string(guard));
  SolveResult r;
  r.cost = UINT64_MAX;
  do {
    std::uint64_t c = 0;
    for (const PermString& s : members) {
      std::uint64_t d = ulam_distance(cand, s);
      c = center ? std::max(c, d) : c + d;
    }
    // strict improvement keeps the first optimum, which is lexicographically
    // smallest because enumeration starts from the sorted alphabet
    if (c < r.cost) {
      r.cost = c;
      r.perm = cand;
    }
  } while (std::next_permutation(cand.begin(), cand.end()));
  return r;
}

}  // namespace

SolveResult discrete_median(const std::vector<PermString>& members, DistanceMode mode) {
  return discrete_best(members, mode, false);
}

SolveResult discrete_center(const std::vector<PermString>& members, DistanceMode mode) {
  return discrete_best(members, mode, true);
}

SolveResult bichromatic_median(const std::vector<PermString>& xs, const std::vector<PermString>& ys,
                               DistanceMode mode) {
  return bichromatic_best(xs, ys, mode, false);
}

SolveResult bichromatic_center(const std::vector<PermString>& xs, const std::vector<PermString>& ys,
                               DistanceMode mode) {
  return bichromatic_best(xs, ys, mode, true);
}

SolveResult continuous_median_exhaustive(const std::vector<PermString>& members, std::size_t guard) {
  return continuous_best(members, guard, false);
}

SolveResult continuous_center_exhaustive(const std::vector<PermString>& members, std::size_t guard) {
  return continuous_best(members, guard, true);
}

SolveResult restricted_median_search(const Certificate& cert) {
  if (cert.kind != "maxcut-median")
    fail(Errc::not_a_maxcut_instance, "certificate kind '" + cert.kind + "'");
  const Graph& g = cert.graph;
  if (g.n < 2 || g.edges.empty()) fail(Errc::not_a_maxcut_instance, "degenerate graph");
  if (g.n > 24) fail(Errc::guard_exceeded, "restricted search beyond 24 vertices");

  MaxcutGadgets gad = maxcut_gadgets(g);
  if (cert.t != gad.t)
    fail(Errc::not_a_maxcut_instance, "stored multiplicity t=" + std::to_string(cert.t) +
                                          ", rebuilt t=" + std::to_string(gad.t));

  SolveResult r;
  r.cost = UINT64_MAX;
  for (std::uint64_t mask = 0; mask < (1ull << g.n); ++mask) {
    PermString cand = maxcut_side_perm(g.n, mask);
    std::uint64_t c = gad.t * (ulam_distance(cand, gad.pi_left) + ulam_distance(cand, gad.pi_right));
    for (const auto& [e1, e2] : gad.edge_perms)
      c += ulam_distance(cand, e1) + ulam_distance(cand, e2);
    if (c < r.cost) {
      r.cost = c;
      r.index = mask;
      r.perm = std::move(cand);
    }
  }
  return r;
}

}  // namespace ulam
