#include "ulam/balancing.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "ulam/embeddings.hpp"
#include "ulam/metric.hpp"

namespace ulam {

namespace {

void require_loads(const std::vector<std::uint64_t>& k, std::uint64_t n_cap, const char* what) {
  for (std::size_t i = 0; i < k.size(); ++i)
    if (k[i] < 1 || k[i] > n_cap)
      fail(Errc::out_of_range, std::string(what) + ": k[" + std::to_string(i + 1) + "]=" +
                                   std::to_string(k[i]) + " outside 1.." + std::to_string(n_cap));
}

std::uint64_t spread(const std::vector<std::uint64_t>& v) {
  auto [mn, mx] = std::minmax_element(v.begin(), v.end());
  return *mx - *mn;
}

}  // namespace

BalanceOutput balance_coarse(const std::vector<std::uint64_t>& k, std::uint64_t n_cap) {
  const std::size_t n = k.size();
  if (n == 0) fail(Errc::too_few_strings, "coarse balancing of zero loads");
  if (n % 4 != 0) fail(Errc::not_divisible_by_4, "coarse balancing needs n % 4 == 0, n=" + std::to_string(n));
  require_loads(k, n_cap, "balance_coarse");

  std::vector<std::string> a(n);
  std::vector<std::uint64_t> ell(k);

  const std::uint64_t cap = 8 * (n_cap / n + 2) + 16;
  std::uint64_t iters = 0;
  while (spread(ell) > n) {
    if (++iters > cap) fail(Errc::internal_error, "coarse balancing exceeded its iteration cap");

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t x, std::size_t y) { return ell[x] < ell[y]; });

    // lightest quarter, next quarter, heaviest half
    static const char* kBlocks[3] = {"01", "10", "00"};
    std::vector<const char*> block(n);
    for (std::size_t r = 0; r < n; ++r) {
      int g = r < n / 4 ? 0 : (r < n / 2 ? 1 : 2);
      block[order[r]] = kBlocks[g];
    }

    // the appended pair must raise pairwise sums by exactly n for the light half
    // and n/2 for the heavy half; recompute from the actual blocks
    for (std::size_t i = 0; i < n; ++i) {
      std::uint64_t delta = 0;
      for (std::size_t j = 0; j < n; ++j) {
        if (j == i) continue;
        delta += (block[i][0] != block[j][0]) + (block[i][1] != block[j][1]);
      }
      std::uint64_t expected = block[i] == kBlocks[2] ? n / 2 : n;
      if (delta != expected)
        fail(Errc::internal_error, "coarse balancing delta " + std::to_string(delta) +
                                       " != expected " + std::to_string(expected));
      ell[i] += delta;
      a[i] += block[i];
    }
  }

  const std::uint64_t total = std::accumulate(ell.begin(), ell.end(), std::uint64_t{0});
  const std::uint64_t d = (total + n / 2) / n;
  for (std::uint64_t e : ell) {
    std::uint64_t dev = e > d ? e - d : d - e;
    if (dev > n) fail(Errc::internal_error, "coarse deviation " + std::to_string(dev) + " > n");
  }

  const std::size_t alen = a[0].size();
  std::vector<std::string> with_ref(a);
  with_ref.emplace_back(alen, '2');  // differs from every {0,1} string everywhere
  EmbeddingOutput emb = embed_ternary(with_ref);

  BalanceOutput out;
  out.tau = std::move(emb.perms.back());
  emb.perms.pop_back();
  out.perms = std::move(emb.perms);
  out.d = d;
  out.hamming_target = d;
  out.tau_distance = alen;
  for (const PermString& p : out.perms)
    if (ulam_distance(p, out.tau) != alen)
      fail(Errc::internal_error, "coarse reference distance drifted");
  return out;
}

BalanceOutput balance_fine(const std::vector<std::uint64_t>& k, std::uint64_t n_cap) {
  const std::size_t n = k.size();
  if (n < 3) fail(Errc::too_few_strings, "fine balancing needs at least 3 loads");
  require_loads(k, n_cap, "balance_fine");

  const Sym sigma_size = static_cast<Sym>(6 * n_cap + n + 1);
  const std::size_t steps = static_cast<std::size_t>(3 * n_cap);

  std::vector<std::vector<Sym>> a(n);
  std::vector<std::vector<char>> in_a(n, std::vector<char>(sigma_size + 1, 0));
  std::vector<std::uint64_t> ell(k);

  for (std::size_t step = 0; step < steps; ++step) {
    const std::uint64_t mn = *std::min_element(ell.begin(), ell.end());
    std::vector<std::size_t> over;
    for (std::size_t i = 0; i < n; ++i)
      if (ell[i] > mn) over.push_back(i);

    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    if (over.size() == 1) {
      std::size_t i = over[0];
      std::size_t j = i == 0 ? 1 : 0;  // smallest index other than i
      pairs.emplace_back(i, j);
    } else {
      if (over.size() % 2 == 1) {
        // drop a smallest-index minimizer: every maximum must stay paired, or a
        // lone peak is excluded forever and the gap never closes
        std::size_t drop = over[0];
        for (std::size_t i : over)
          if (ell[i] < ell[drop]) drop = i;
        over.erase(std::find(over.begin(), over.end(), drop));
      }
      for (std::size_t t = 0; t + 1 < over.size(); t += 2) pairs.emplace_back(over[t], over[t + 1]);
    }

    std::vector<char> paired(n, 0);
    std::vector<Sym> chosen(n, 0);
    std::vector<char> used(sigma_size + 1, 0);

    for (auto [i, j] : pairs) {
      Sym c = 0;
      for (Sym x = 1; x <= sigma_size; ++x)
        if (!in_a[i][x] && !in_a[j][x] && !used[x]) {
          c = x;
          break;
        }
      if (c == 0) fail(Errc::internal_error, "fine balancing ran out of shared symbols");
      chosen[i] = chosen[j] = c;
      used[c] = 1;
      paired[i] = paired[j] = 1;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (paired[i]) continue;
      Sym c = 0;
      for (Sym x = 1; x <= sigma_size; ++x)
        if (!in_a[i][x] && !used[x]) {
          c = x;
          break;
        }
      if (c == 0) fail(Errc::internal_error, "fine balancing ran out of solo symbols");
      chosen[i] = c;
      used[c] = 1;
    }

    for (std::size_t i = 0; i < n; ++i) {
      std::uint64_t gained = 0;
      for (std::size_t j = 0; j < n; ++j)
        if (j != i && chosen[j] != chosen[i]) ++gained;
      std::uint64_t expected = paired[i] ? n - 2 : n - 1;
      if (gained != expected)
        fail(Errc::internal_error, "fine balancing delta " + std::to_string(gained) +
                                       " != expected " + std::to_string(expected));
      ell[i] += gained;
      a[i].push_back(chosen[i]);
      in_a[i][chosen[i]] = 1;
    }
  }

  if (spread(ell) > 1) fail(Errc::internal_error, "fine balancing finished with gap > 1");
  const std::uint64_t target = *std::min_element(ell.begin(), ell.end());

  // reference string over its own fresh symbols: Hamming distance 3*n_cap to
  // every a_i by construction
  std::vector<Sym> ref(steps);
  for (std::size_t t = 0; t < steps; ++t) ref[t] = static_cast<Sym>(sigma_size + 1 + t);

  std::vector<PermString> family;
  family.reserve(n + 1);
  for (auto& s : a) family.emplace_back(s.begin(), s.end());
  family.emplace_back(ref.begin(), ref.end());

  std::vector<Sym> sigma_full(sigma_size + steps);
  std::iota(sigma_full.begin(), sigma_full.end(), Sym{1});
  EmbeddingOutput emb = embed_norepeat(family, sigma_full);

  BalanceOutput out;
  out.tau = std::move(emb.perms.back());
  emb.perms.pop_back();
  out.perms = std::move(emb.perms);
  out.hamming_target = target;
  out.d = target + static_cast<std::uint64_t>(n - 1) * emb.offset_k;
  out.tau_distance = 3 * n_cap + emb.offset_k;
  for (const PermString& p : out.perms)
    if (ulam_distance(p, out.tau) != out.tau_distance)
      fail(Errc::internal_error, "fine reference distance drifted");
  return out;
}

BalanceOutput balance_full(const std::vector<std::uint64_t>& k) {
  const std::size_t n = k.size();
  if (n == 0) fail(Errc::too_few_strings, "full balancing of zero loads");
  if (n % 4 != 0) fail(Errc::not_divisible_by_4, "full balancing needs n % 4 == 0, n=" + std::to_string(n));

  // both stages see only differences of loads, so shifting into a small window
  // first changes nothing except the final d, which shifts straight back
  const std::int64_t c1 = static_cast<std::int64_t>(*std::min_element(k.begin(), k.end())) - 1;
  std::vector<std::uint64_t> k1(n);
  for (std::size_t i = 0; i < n; ++i)
    k1[i] = static_cast<std::uint64_t>(static_cast<std::int64_t>(k[i]) - c1);

  BalanceOutput coarse = balance_coarse(k1, *std::max_element(k1.begin(), k1.end()));

  auto m = pairwise_matrix(coarse.perms);
  std::vector<std::uint64_t> ell(n);
  for (std::size_t i = 0; i < n; ++i) {
    ell[i] = k1[i];
    for (std::size_t j = 0; j < n; ++j) ell[i] += m[i][j];
  }

  const std::int64_t c2 = static_cast<std::int64_t>(*std::min_element(ell.begin(), ell.end())) - 1;
  std::vector<std::uint64_t> k2(n);
  for (std::size_t i = 0; i < n; ++i)
    k2[i] = static_cast<std::uint64_t>(static_cast<std::int64_t>(ell[i]) - c2);

  BalanceOutput fine = balance_fine(k2, *std::max_element(k2.begin(), k2.end()));

  const Sym off = static_cast<Sym>(coarse.perms[0].size());
  BalanceOutput out;
  out.perms.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    PermString p(coarse.perms[i]);
    PermString shifted = offset_shift(fine.perms[i], off);
    p.insert(p.end(), shifted.begin(), shifted.end());
    out.perms.push_back(std::move(p));
  }
  out.tau = coarse.tau;
  {
    PermString shifted = offset_shift(fine.tau, off);
    out.tau.insert(out.tau.end(), shifted.begin(), shifted.end());
  }
  out.d = static_cast<std::uint64_t>(static_cast<std::int64_t>(fine.d) + c1 + c2);
  out.tau_distance = coarse.tau_distance + fine.tau_distance;
  out.hamming_target =
      static_cast<std::uint64_t>(static_cast<std::int64_t>(fine.hamming_target) + c1 + c2);
  return out;
}

}  // namespace ulam
