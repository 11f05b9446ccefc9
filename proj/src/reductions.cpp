#include "ulam/reductions.hpp"

#include <algorithm>
#include <set>

#include "ulam/balancing.hpp"
#include "ulam/embeddings.hpp"
#include "ulam/metric.hpp"
#include "ulam/ov_gadgets.hpp"

namespace ulam {

namespace {

// separator runs shared by every member of a max-cut instance
PermString sep_run_1(std::uint32_t n) {
  PermString s;
  for (std::uint32_t v = n + 1; v <= 2 * n + 1; ++v) s.push_back(v);
  return s;
}

PermString sep_run_2(std::uint32_t n) {
  PermString s;
  for (std::uint32_t v = 2 * n + 2; v <= 3 * n + 2; ++v) s.push_back(v);
  return s;
}

void append(PermString& out, const PermString& part) {
  out.insert(out.end(), part.begin(), part.end());
}

bool has_duplicates(const std::vector<PermString>& perms) {
  std::set<PermString> seen;
  for (const PermString& p : perms)
    if (!seen.insert(p).second) return true;
  return false;
}

}  // namespace

MaxcutGadgets maxcut_gadgets(const Graph& g) {
  const std::uint32_t n = g.n;
  const PermString x1 = sep_run_1(n), x2 = sep_run_2(n);

  MaxcutGadgets gad;
  gad.t = static_cast<std::uint64_t>(g.edges.size()) * (2 * n - 1);

  append(gad.pi_left, iota_perm(n));
  append(gad.pi_left, x1);
  append(gad.pi_left, x2);

  append(gad.pi_right, x1);
  append(gad.pi_right, reversed(iota_perm(n)));
  append(gad.pi_right, x2);

  for (auto [i, j] : g.edges) {
    PermString rest;
    for (std::uint32_t v = 1; v <= n; ++v)
      if (v != i && v != j) rest.push_back(v);

    // first form pulls the edge pair (heavy end first) ahead of everything
    PermString e1;
    e1.push_back(j);
    e1.push_back(i);
    append(e1, x1);
    append(e1, x2);
    append(e1, rest);

    // second form tucks the pair (ascending) between the separator runs
    PermString e2;
    append(e2, x1);
    e2.push_back(i);
    e2.push_back(j);
    append(e2, x2);
    append(e2, rest);

    gad.edge_perms.emplace_back(std::move(e1), std::move(e2));
  }
  return gad;
}

PermString maxcut_side_perm(std::uint32_t n, std::uint64_t mask) {
  PermString p;
  p.reserve(3 * n + 2);
  for (std::uint32_t v = 1; v <= n; ++v)
    if ((mask >> (v - 1)) & 1) p.push_back(v);
  append(p, sep_run_1(n));
  for (std::uint32_t v = n; v >= 1; --v)
    if (!((mask >> (v - 1)) & 1)) p.push_back(v);
  append(p, sep_run_2(n));
  return p;
}

std::uint64_t maxcut_threshold(const Graph& g, std::uint64_t cut_target) {
  const std::uint64_t t = static_cast<std::uint64_t>(g.edges.size()) * (2 * g.n - 1);
  return static_cast<std::uint64_t>(g.edges.size()) * (2 * g.n - 1) - cut_target + t * g.n;
}

MonoReduction maxcut_to_median(const Graph& g, std::uint64_t cut_target) {
  if (g.edges.empty()) fail(Errc::no_edges, "max-cut reduction needs at least one edge");
  if (g.n < 2) fail(Errc::no_edges, "max-cut reduction needs at least two vertices");
  if (cut_target > g.edges.size())
    fail(Errc::out_of_range, "cut target " + std::to_string(cut_target) + " exceeds edge count");

  MaxcutGadgets gad = maxcut_gadgets(g);

  MonoReduction r;
  r.instance.length = 3 * static_cast<std::size_t>(g.n) + 2;
  for (auto& [e1, e2] : gad.edge_perms) {
    r.instance.perms.push_back(e1);
    r.instance.perms.push_back(e2);
  }
  for (std::uint64_t c = 0; c < gad.t; ++c) r.instance.perms.push_back(gad.pi_left);
  for (std::uint64_t c = 0; c < gad.t; ++c) r.instance.perms.push_back(gad.pi_right);
  r.instance.tau = maxcut_threshold(g, cut_target);
  r.instance.multiset = true;

  r.cert.kind = "maxcut-median";
  r.cert.graph = g;
  r.cert.t = gad.t;
  r.cert.cut_target = cut_target;
  r.cert.tau = r.instance.tau;
  return r;
}

MonoReduction multiset_to_set(const UlamInstance& in) {
  if (in.perms.empty()) fail(Errc::empty_instance, "distinct-suffix transform of zero members");
  const std::size_t m = in.perms.size();
  const std::size_t n = in.length;
  for (const PermString& p : in.perms) {
    if (p.size() != n) fail(Errc::length_mismatch, "member length differs from instance length");
    if (!is_contiguous_perm(p))
      fail(Errc::bad_alphabet, "members must use exactly 1.." + std::to_string(n));
  }

  MonoReduction r;
  r.instance.length = n + 2 * m;
  r.instance.tau = in.tau + m;
  r.instance.multiset = false;
  for (std::size_t i = 0; i < m; ++i) {
    // fresh tail: ascending run with one adjacent transposition at slot i
    PermString tail = iota_perm(2 * m);
    std::swap(tail[2 * i], tail[2 * i + 1]);
    PermString member(in.perms[i]);
    append(member, offset_shift(tail, static_cast<Sym>(n)));
    r.instance.perms.push_back(std::move(member));
  }
  if (has_duplicates(r.instance.perms))
    fail(Errc::internal_error, "distinct-suffix transform produced duplicates");

  r.cert.kind = "multiset-set";
  r.cert.source_perms = in.perms;
  r.cert.m = m;
  r.cert.tau = in.tau;
  return r;
}

VectorSet masked_tuple(const BinaryVector& v, const VectorSet& base) {
  VectorSet out;
  out.dim = base.dim;
  out.vecs.reserve(base.size());
  for (const BinaryVector& u : base.vecs) out.vecs.push_back(pointwise_and(v, u));
  return out;
}

namespace {

void require_ov_shapes(const OvInput& in, const char* what) {
  require_vector_set(in.a, what);
  require_vector_set(in.b, what);
  require_vector_set(in.c, what);
  require_vector_set(in.e, what);
  if (in.a.dim != in.b.dim || in.a.dim != in.c.dim || in.a.dim != in.e.dim)
    fail(Errc::shape_mismatch, std::string(what) + ": sets disagree on dimension");
  if (in.a.size() != in.b.size())
    fail(Errc::shape_mismatch, std::string(what) + ": first two sets differ in size");
  if (in.c.size() != in.e.size())
    fail(Errc::shape_mismatch, std::string(what) + ": last two sets differ in size");
  if (in.a.size() == 0 || in.c.size() == 0 || in.a.dim == 0)
    fail(Errc::shape_mismatch, std::string(what) + ": empty set or zero dimension");
}

std::vector<PermString> build_x_cores(const OvInput& in) {
  std::vector<PermString> xs;
  xs.reserve(in.a.size());
  for (const BinaryVector& va : in.a.vecs) xs.push_back(or_gadget_f(masked_tuple(va, in.c)));
  return xs;
}

std::vector<PermString> build_y_cores(const OvInput& in) {
  std::vector<PermString> ys;
  ys.reserve(in.b.size());
  for (const BinaryVector& vb : in.b.vecs) ys.push_back(or_gadget_g(masked_tuple(vb, in.e)));
  return ys;
}

void fill_ov_cert(Certificate& cert, const OvInput& in, std::uint64_t len_l) {
  cert.a = in.a;
  cert.b = in.b;
  cert.c = in.c;
  cert.e = in.e;
  cert.n = in.a.size();
  cert.m = in.c.size();
  cert.d = in.a.dim;
  cert.len_l = len_l;
}

}  // namespace

MonoReduction qov_to_discrete_center(const OvInput& in) {
  require_ov_shapes(in, "quantified reduction");
  const std::uint64_t m = in.c.size(), d = in.a.dim;
  const std::size_t len = (5 * d - 1) * m * m;

  std::vector<PermString> xs = build_x_cores(in);
  std::vector<PermString> ys = build_y_cores(in);

  const PermString p1 = offset_shift(iota_perm(len), static_cast<Sym>(len));
  const PermString p2 = offset_shift(iota_perm(2 * len), static_cast<Sym>(2 * len));
  const PermString p3 = iota_perm(len);
  const PermString p1r = reversed(p1), p2r = reversed(p2);

  MonoReduction r;
  r.instance.length = 4 * len;
  for (const PermString& x : xs) {
    PermString row(p2r);
    append(row, p1);
    append(row, x);
    r.instance.perms.push_back(std::move(row));
  }
  for (const PermString& y : ys) {
    PermString row(p2);
    append(row, p1);
    append(row, y);
    r.instance.perms.push_back(std::move(row));
  }
  {
    PermString far(p2r);
    append(far, p1r);
    append(far, p3);
    r.instance.perms.push_back(std::move(far));
  }

  const std::uint64_t tau = 3 * m * m * d - 1;
  r.instance.tau = 2 * len - 1 + tau;
  r.instance.multiset = has_duplicates(r.instance.perms);

  fill_ov_cert(r.cert, in, len);
  r.cert.kind = "qov-center";
  r.cert.tau = tau;
  r.cert.tau_prime = r.instance.tau;
  return r;
}

BiReduction ov4_to_bichromatic_median(const OvInput& in) {
  require_ov_shapes(in, "bichromatic reduction");
  const std::uint64_t n = in.a.size(), m = in.c.size(), d = in.a.dim;
  const std::size_t len = (5 * d - 1) * m * m;

  BiReduction r;
  r.instance.xs = build_x_cores(in);
  r.instance.ys = build_y_cores(in);
  r.instance.length = len;
  r.instance.tau = 3 * m * m * n * d - 1;

  fill_ov_cert(r.cert, in, len);
  r.cert.kind = "ov4-bimedian";
  r.cert.tau = r.instance.tau;
  return r;
}

MonoReduction bichromatic_to_monochromatic_median(const Certificate& bi_cert) {
  if (bi_cert.kind != "ov4-bimedian")
    fail(Errc::missing_certificate,
         "expected an ov4-bimedian certificate, got '" + bi_cert.kind + "'");
  OvInput in{bi_cert.a, bi_cert.b, bi_cert.c, bi_cert.e};
  require_ov_shapes(in, "monochromatic reduction");
  const std::size_t n = in.a.size();
  if (n % 4 != 0)
    fail(Errc::not_divisible_by_4, "set size " + std::to_string(n) + " is not a multiple of 4");

  const std::uint64_t m = in.c.size(), d = in.a.dim;
  const std::size_t len = (5 * d - 1) * m * m;
  if (bi_cert.len_l != len || bi_cert.tau != 3 * m * m * n * d - 1)
    fail(Errc::missing_certificate, "certificate fields disagree with its vector sets");

  std::vector<PermString> xs = build_x_cores(in);
  std::vector<PermString> ys = build_y_cores(in);

  auto triplicate = [len](const PermString& p) {
    PermString out(p);
    append(out, offset_shift(p, static_cast<Sym>(len)));
    append(out, offset_shift(p, static_cast<Sym>(2 * len)));
    return out;
  };

  // pairwise loads of the triplicated first-color rows, through the structured
  // shortcut rather than an LCS run per pair
  std::vector<VectorSet> tuples;
  tuples.reserve(n);
  for (const BinaryVector& va : in.a.vecs) tuples.push_back(masked_tuple(va, in.c));
  std::vector<std::uint64_t> loads(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (j != i) loads[i] += structured_f_distance(tuples[i], tuples[j], 3);

  BalanceOutput bal = balance_full(loads);
  const std::size_t len2 = bal.perms[0].size();
  const std::uint64_t big_k = 10 * (3 * static_cast<std::uint64_t>(len) + len2);

  std::vector<std::string> markers = {
      std::string(2 * big_k, '0'),
      std::string(big_k, '0') + std::string(big_k, '1'),
      std::string(big_k, '1') + std::string(big_k, '0'),
  };
  EmbeddingOutput emb = embed_ternary(markers);
  const PermString& mu = emb.perms[0];

  MonoReduction r;
  r.instance.length = 3 * len + len2 + 6 * big_k;
  const Sym off_bal = static_cast<Sym>(3 * len);
  const Sym off_marker = static_cast<Sym>(3 * len + len2);
  for (std::size_t i = 0; i < n; ++i) {
    PermString row = triplicate(xs[i]);
    append(row, offset_shift(bal.perms[i], off_bal));
    append(row, offset_shift(mu, off_marker));
    r.instance.perms.push_back(std::move(row));
  }
  for (std::size_t i = 0; i < n; ++i) {
    PermString row = triplicate(ys[i]);
    append(row, offset_shift(bal.tau, off_bal));
    append(row, offset_shift(emb.perms[i < n / 2 ? 1 : 2], off_marker));
    r.instance.perms.push_back(std::move(row));
  }
  r.instance.tau = 3 * bi_cert.tau + n * bal.tau_distance + n * big_k + bal.d + 1;
  r.instance.multiset = has_duplicates(r.instance.perms);

  fill_ov_cert(r.cert, in, len);
  r.cert.kind = "bi-monomedian";
  r.cert.tau = bi_cert.tau;
  r.cert.len_l2 = len2;
  r.cert.big_k = big_k;
  r.cert.big_m = bal.tau_distance;
  r.cert.big_d = bal.d;
  r.cert.k_sums = loads;
  r.cert.tau_mono = r.instance.tau;
  return r;
}

OvInput pad_ov_for_divisibility(OvInput in) {
  require_ov_shapes(in, "divisibility padding");
  while (in.a.size() % 4 != 0) {
    in.a.vecs.push_back(in.a.vecs[0]);
    in.b.vecs.push_back(in.b.vecs[0]);
  }
  return in;
}

}  // namespace ulam
