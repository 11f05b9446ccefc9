#include "ulam/verify.hpp"

#include <algorithm>
#include <random>

#include "ulam/metric.hpp"
#include "ulam/ov_gadgets.hpp"

namespace ulam {

namespace {

VerifyReport bad(std::string check, std::string detail) {
  VerifyReport r;
  r.ok = false;
  r.check = std::move(check);
  r.detail = std::move(detail);
  return r;
}

const VerifyReport kPass{};

std::string first_mismatch(const std::vector<PermString>& got,
                           const std::vector<PermString>& want) {
  if (got.size() != want.size())
    return "member count " + std::to_string(got.size()) + " != " + std::to_string(want.size());
  for (std::size_t i = 0; i < got.size(); ++i) {
    if (got[i] == want[i]) continue;
    std::size_t p = 0;
    while (p < std::min(got[i].size(), want[i].size()) && got[i][p] == want[i][p]) ++p;
    return "member " + std::to_string(i + 1) + " differs at position " + std::to_string(p + 1);
  }
  return {};
}

// cross-side distance the disjunction gadgets must realize: 3dm^2 minus the
// number of orthogonal masked pairs
std::uint64_t expected_cross(const BinaryVector& va, const BinaryVector& vb, const VectorSet& c,
                             const VectorSet& e, std::uint64_t m, std::uint64_t d) {
  std::uint64_t orth = 0;
  for (const BinaryVector& vc : c.vecs)
    for (const BinaryVector& ve : e.vecs) {
      bool hit = false;
      for (std::size_t t = 0; t < va.size(); ++t)
        if (va[t] == '1' && vb[t] == '1' && vc[t] == '1' && ve[t] == '1') {
          hit = true;
          break;
        }
      if (!hit) ++orth;
    }
  return 3 * d * m * m - orth;
}

VerifyReport verify_maxcut(const InstanceFileData& file, const Certificate& cert) {
  if (file.bichromatic) return bad("file-kind", "max-cut certificates describe mono instances");
  MonoReduction want = maxcut_to_median(cert.graph, cert.cut_target);
  if (cert.t != want.cert.t)
    return bad("multiplicity", "stored t=" + std::to_string(cert.t) + ", rebuilt t=" +
                                   std::to_string(want.cert.t));
  if (cert.tau != want.instance.tau || file.mono.tau != want.instance.tau)
    return bad("threshold-mismatch", "cost map gives " + std::to_string(want.instance.tau));
  if (file.mono.length != want.instance.length)
    return bad("shape-mismatch", "member length " + std::to_string(file.mono.length) +
                                     " != " + std::to_string(want.instance.length));
  if (std::string diff = first_mismatch(file.mono.perms, want.instance.perms); !diff.empty())
    return bad("member-mismatch", diff);

  const Graph& g = cert.graph;
  const std::uint32_t n = g.n;
  MaxcutGadgets gad = maxcut_gadgets(g);

  std::vector<std::uint64_t> masks;
  if (n <= 12) {
    for (std::uint64_t msk = 0; msk < (1ull << n); ++msk) masks.push_back(msk);
  } else {
    std::mt19937_64 rng(0x5eed1234u);
    for (int i = 0; i < 256; ++i) masks.push_back(rng() & ((1ull << n) - 1));
  }

  for (std::uint64_t msk : masks) {
    PermString cand = maxcut_side_perm(n, msk);
    std::uint64_t pair_sum =
        ulam_distance(cand, gad.pi_left) + ulam_distance(cand, gad.pi_right);
    if (pair_sum != n)
      return bad("pair-sum-identity", "mask " + std::to_string(msk) + " gives " +
                                          std::to_string(pair_sum) + " != " + std::to_string(n));
    for (std::size_t ei = 0; ei < g.edges.size(); ++ei) {
      auto [u, v] = g.edges[ei];
      bool cut = (((msk >> (u - 1)) ^ (msk >> (v - 1))) & 1) != 0;
      std::uint64_t want_sum = cut ? 2 * n - 2 : 2 * n - 1;
      std::uint64_t got_sum = ulam_distance(cand, gad.edge_perms[ei].first) +
                              ulam_distance(cand, gad.edge_perms[ei].second);
      if (got_sum != want_sum)
        return bad("edge-gadget-sum", "mask " + std::to_string(msk) + " edge " +
                                          std::to_string(ei + 1) + " gives " +
                                          std::to_string(got_sum) + " != " +
                                          std::to_string(want_sum));
    }
  }
  return kPass;
}

VerifyReport verify_multiset(const InstanceFileData& file, const Certificate& cert) {
  if (file.bichromatic) return bad("file-kind", "distinct-suffix certificates describe mono instances");
  if (cert.source_perms.empty()) return bad("shape-mismatch", "certificate lists no source members");
  UlamInstance src;
  src.perms = cert.source_perms;
  src.length = cert.source_perms[0].size();
  src.tau = cert.tau;
  src.multiset = true;
  MonoReduction want = multiset_to_set(src);
  if (cert.m != want.cert.m)
    return bad("shape-mismatch", "stored m=" + std::to_string(cert.m) + ", source has " +
                                     std::to_string(want.cert.m));
  if (file.mono.tau != want.instance.tau)
    return bad("threshold-mismatch", "shifted threshold should be " +
                                         std::to_string(want.instance.tau));
  if (file.mono.length != want.instance.length)
    return bad("shape-mismatch", "member length " + std::to_string(file.mono.length) +
                                     " != " + std::to_string(want.instance.length));
  if (std::string diff = first_mismatch(file.mono.perms, want.instance.perms); !diff.empty())
    return bad("member-mismatch", diff);
  for (std::size_t i = 0; i < file.mono.perms.size(); ++i)
    for (std::size_t j = i + 1; j < file.mono.perms.size(); ++j)
      if (file.mono.perms[i] == file.mono.perms[j])
        return bad("distinctness", "members " + std::to_string(i + 1) + " and " +
                                       std::to_string(j + 1) + " coincide");
  return kPass;
}

VerifyReport verify_qov(const InstanceFileData& file, const Certificate& cert) {
  if (file.bichromatic) return bad("file-kind", "center certificates describe mono instances");
  OvInput in{cert.a, cert.b, cert.c, cert.e};
  MonoReduction want = qov_to_discrete_center(in);
  if (cert.n != in.a.size() || cert.m != in.c.size() || cert.d != in.a.dim)
    return bad("shape-mismatch", "stored n/m/d disagree with the vector sets");
  if (cert.len_l != want.cert.len_l)
    return bad("shape-mismatch", "stored L=" + std::to_string(cert.len_l) + ", expected " +
                                     std::to_string(want.cert.len_l));
  if (cert.tau != want.cert.tau || cert.tau_prime != want.instance.tau ||
      file.mono.tau != want.instance.tau)
    return bad("threshold-mismatch", "thresholds should be tau=" + std::to_string(want.cert.tau) +
                                         ", tau_prime=" + std::to_string(want.instance.tau));
  if (file.mono.length != want.instance.length)
    return bad("shape-mismatch", "member length " + std::to_string(file.mono.length) +
                                     " != " + std::to_string(want.instance.length));
  if (std::string diff = first_mismatch(file.mono.perms, want.instance.perms); !diff.empty())
    return bad("member-mismatch", diff);

  const std::size_t n = in.a.size();
  const std::uint64_t len = cert.len_l;
  const auto& rows = file.mono.perms;
  const PermString& far = rows[2 * n];

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::uint64_t got = ulam_distance(rows[i], rows[n + j]);
      std::uint64_t core = expected_cross(in.a.vecs[i], in.b.vecs[j], in.c, in.e, cert.m, cert.d);
      if (got != 2 * len - 1 + core)
        return bad("cross-distance", "rows " + std::to_string(i + 1) + "/" + std::to_string(j + 1) +
                                         " give " + std::to_string(got) + " != " +
                                         std::to_string(2 * len - 1 + core));
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (ulam_distance(rows[i], rows[j]) > len - 1)
        return bad("x-row-proximity", "rows " + std::to_string(i + 1) + "/" + std::to_string(j + 1));
  for (std::size_t i = 0; i < n; ++i) {
    if (ulam_distance(rows[i], far) > 2 * len - 2)
      return bad("far-row-bounds", "first-color row " + std::to_string(i + 1) + " is too far");
    if (ulam_distance(rows[n + i], far) < 3 * len - 2)
      return bad("far-row-bounds", "second-color row " + std::to_string(i + 1) + " is too close");
  }
  return kPass;
}

VerifyReport verify_ov4(const InstanceFileData& file, const Certificate& cert) {
  if (!file.bichromatic) return bad("file-kind", "bichromatic certificates describe bi instances");
  OvInput in{cert.a, cert.b, cert.c, cert.e};
  BiReduction want = ov4_to_bichromatic_median(in);
  if (cert.n != in.a.size() || cert.m != in.c.size() || cert.d != in.a.dim)
    return bad("shape-mismatch", "stored n/m/d disagree with the vector sets");
  if (cert.len_l != want.cert.len_l || file.bi.length != want.instance.length)
    return bad("shape-mismatch", "member length should be " + std::to_string(want.instance.length));
  if (cert.tau != want.instance.tau || file.bi.tau != want.instance.tau)
    return bad("threshold-mismatch", "threshold should be " + std::to_string(want.instance.tau));
  if (std::string diff = first_mismatch(file.bi.xs, want.instance.xs); !diff.empty())
    return bad("member-mismatch", "first color: " + diff);
  if (std::string diff = first_mismatch(file.bi.ys, want.instance.ys); !diff.empty())
    return bad("member-mismatch", "second color: " + diff);

  for (std::size_t i = 0; i < file.bi.xs.size(); ++i)
    for (std::size_t j = 0; j < file.bi.ys.size(); ++j) {
      std::uint64_t got = ulam_distance(file.bi.xs[i], file.bi.ys[j]);
      std::uint64_t core = expected_cross(in.a.vecs[i], in.b.vecs[j], in.c, in.e, cert.m, cert.d);
      if (got != core)
        return bad("cross-distance", "pair " + std::to_string(i + 1) + "/" + std::to_string(j + 1) +
                                         " gives " + std::to_string(got) + " != " +
                                         std::to_string(core));
    }
  return kPass;
}

VerifyReport verify_mono(const InstanceFileData& file, const Certificate& cert) {
  if (file.bichromatic) return bad("file-kind", "median certificates describe mono instances");
  Certificate inner;
  inner.kind = "ov4-bimedian";
  inner.a = cert.a;
  inner.b = cert.b;
  inner.c = cert.c;
  inner.e = cert.e;
  inner.n = cert.n;
  inner.m = cert.m;
  inner.d = cert.d;
  inner.len_l = cert.len_l;
  inner.tau = cert.tau;
  MonoReduction want = bichromatic_to_monochromatic_median(inner);

  if (cert.len_l2 != want.cert.len_l2 || cert.big_k != want.cert.big_k ||
      cert.big_m != want.cert.big_m || cert.big_d != want.cert.big_d ||
      cert.k_sums != want.cert.k_sums)
    return bad("derived-mismatch", "stored pipeline constants disagree with the rebuild");
  if (cert.tau_mono != want.instance.tau || file.mono.tau != want.instance.tau)
    return bad("threshold-mismatch", "threshold should be " + std::to_string(want.instance.tau));
  if (file.mono.length != want.instance.length)
    return bad("shape-mismatch", "member length " + std::to_string(file.mono.length) +
                                     " != " + std::to_string(want.instance.length));
  if (std::string diff = first_mismatch(file.mono.perms, want.instance.perms); !diff.empty())
    return bad("member-mismatch", diff);

  const std::size_t n = cert.n;
  auto matrix = pairwise_matrix(file.mono.perms);
  std::vector<std::uint64_t> cost(2 * n, 0);
  for (std::size_t i = 0; i < 2 * n; ++i)
    for (std::size_t j = 0; j < 2 * n; ++j) cost[i] += matrix[i][j];

  std::uint64_t max_x = *std::max_element(cost.begin(), cost.begin() + n);
  std::uint64_t min_y = *std::min_element(cost.begin() + n, cost.end());
  if (min_y < 2 * n * cert.big_k)
    return bad("y-domination-floor", "second-color cost " + std::to_string(min_y) +
                                         " < " + std::to_string(2 * n * cert.big_k));
  if (max_x >= min_y)
    return bad("x-domination", "first-color cost " + std::to_string(max_x) +
                                   " reaches second-color cost " + std::to_string(min_y));

  // per-row cost structure: triple the bichromatic sum plus the shared constants,
  // off by at most one from the balancing stage
  std::vector<PermString> xs, ys;
  for (const BinaryVector& va : cert.a.vecs) xs.push_back(or_gadget_f(masked_tuple(va, cert.c)));
  for (const BinaryVector& vb : cert.b.vecs) ys.push_back(or_gadget_g(masked_tuple(vb, cert.e)));
  for (std::size_t i = 0; i < n; ++i) {
    std::uint64_t bi_sum = 0;
    for (std::size_t j = 0; j < n; ++j) bi_sum += ulam_distance(xs[i], ys[j]);
    std::uint64_t base = 3 * bi_sum + n * cert.big_m + n * cert.big_k + cert.big_d;
    std::uint64_t dev = cost[i] > base ? cost[i] - base : base - cost[i];
    if (dev > 1)
      return bad("x-cost-structure", "row " + std::to_string(i + 1) + " costs " +
                                         std::to_string(cost[i]) + ", expected " +
                                         std::to_string(base) + " within 1");
  }
  return kPass;
}

}  // namespace

VerifyReport verify_certificate(const InstanceFileData& file, const Certificate& cert) {
  if (cert.kind == "maxcut-median") return verify_maxcut(file, cert);
  if (cert.kind == "multiset-set") return verify_multiset(file, cert);
  if (cert.kind == "qov-center") return verify_qov(file, cert);
  if (cert.kind == "ov4-bimedian") return verify_ov4(file, cert);
  if (cert.kind == "bi-monomedian") return verify_mono(file, cert);
  return bad("kind", "unknown certificate kind '" + cert.kind + "'");
}

}  // namespace ulam
