#include "ulam/metric.hpp"

#include <cstdlib>
#include <mutex>
#include <string>
#include <thread>
#include <unordered_map>

namespace ulam {

namespace {

constexpr std::uint32_t kNoPos = 0xffffffffu;

// Position-of-symbol lookup for one permutation string. Dense vector when the
// symbol range is close to the length, hash map otherwise.
struct PosMap {
  std::vector<std::uint32_t> dense;
  std::unordered_map<Sym, std::uint32_t> sparse;
  bool use_dense = false;

  void build(const PermString& a) {
    Sym maxs = 0;
    for (Sym x : a) maxs = std::max(maxs, x);
    use_dense = maxs <= 8 * a.size() + 1024;
    if (use_dense) {
      dense.assign(maxs + 1, kNoPos);
      for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) fail(Errc::non_positive_symbol, "ulam_distance first argument");
        if (dense[a[i]] != kNoPos) fail(Errc::duplicate_symbol, "ulam_distance first argument");
        dense[a[i]] = static_cast<std::uint32_t>(i);
      }
    } else {
      sparse.reserve(a.size() * 2);
      for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) fail(Errc::non_positive_symbol, "ulam_distance first argument");
        if (!sparse.emplace(a[i], static_cast<std::uint32_t>(i)).second)
          fail(Errc::duplicate_symbol, "ulam_distance first argument");
      }
    }
  }

  // Looks up and consumes; a second occurrence of the same symbol reads as missing.
  std::uint32_t take(Sym x) {
    if (use_dense) {
      if (x >= dense.size()) return kNoPos;
      std::uint32_t p = dense[x];
      dense[x] = kNoPos;
      return p;
    }
    auto it = sparse.find(x);
    if (it == sparse.end()) return kNoPos;
    std::uint32_t p = it->second;
    sparse.erase(it);
    return p;
  }
};

unsigned thread_count() {
  if (const char* env = std::getenv("ULAM_THREADS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end && *end == '\0' && v >= 1 && v <= 1024) return static_cast<unsigned>(v);
    return 1;
  }
  unsigned hc = std::thread::hardware_concurrency();
  return hc ? hc : 1;
}

}  // namespace

std::uint64_t ulam_distance(const PermString& a, const PermString& b) {
  if (a.size() != b.size())
    fail(Errc::alphabet_mismatch, "lengths " + std::to_string(a.size()) + " and " + std::to_string(b.size()));
  const std::size_t L = a.size();
  if (L == 0) return 0;

  PosMap pos;
  pos.build(a);

  // LIS of b's symbols mapped through a's positions; consuming lookups make a
  // repeated symbol in b surface as an alphabet mismatch.
  std::vector<std::uint32_t> tails;
  tails.reserve(L);
  for (Sym x : b) {
    std::uint32_t p = pos.take(x);
    if (p == kNoPos) fail(Errc::alphabet_mismatch, "symbol " + std::to_string(x) + " not shared");
    auto it = std::lower_bound(tails.begin(), tails.end(), p);
    if (it == tails.end())
      tails.push_back(p);
    else
      *it = p;
  }
  return L - tails.size();
}

std::uint64_t ulam_distance_oracle(const PermString& a, const PermString& b) {
  require_valid(a, "ulam_distance_oracle first argument");
  require_valid(b, "ulam_distance_oracle second argument");
  PermString sa(a), sb(b);
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  if (sa != sb) fail(Errc::alphabet_mismatch, "alphabets differ");
  return a.size() - lcs_oracle(a, b);
}

std::uint64_t hamming_distance(std::string_view a, std::string_view b) {
  if (a.size() != b.size())
    fail(Errc::length_mismatch, "lengths " + std::to_string(a.size()) + " and " + std::to_string(b.size()));
  std::uint64_t d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) d += a[i] != b[i];
  return d;
}

std::uint64_t hamming_distance(const std::vector<Sym>& a, const std::vector<Sym>& b) {
  if (a.size() != b.size())
    fail(Errc::length_mismatch, "lengths " + std::to_string(a.size()) + " and " + std::to_string(b.size()));
  std::uint64_t d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) d += a[i] != b[i];
  return d;
}

std::uint64_t structured_f_distance(const VectorSet& t, const VectorSet& t2, unsigned copies) {
  if (t.dim != t2.dim || t.size() != t2.size())
    fail(Errc::shape_mismatch, "tuples must share count and dimension");
  require_vector_set(t, "structured_f_distance");
  require_vector_set(t2, "structured_f_distance");
  std::uint64_t acc = 0;
  for (std::size_t i = 0; i < t.size(); ++i) acc += hamming_distance(t.vecs[i], t2.vecs[i]);
  return static_cast<std::uint64_t>(copies) * t.size() * acc;
}

std::vector<std::vector<std::uint64_t>> pairwise_matrix(const std::vector<PermString>& members,
                                                        DistanceMode mode) {
  const std::size_t n = members.size();
  std::vector<std::vector<std::uint64_t>> m(n, std::vector<std::uint64_t>(n, 0));

  std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
  pairs.reserve(n * (n - 1) / 2);
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);

  auto dist = [mode](const PermString& a, const PermString& b) {
    return mode == DistanceMode::fast ? ulam_distance(a, b) : ulam_distance_oracle(a, b);
  };

  unsigned workers = std::min<std::size_t>(thread_count(), pairs.size());
  if (workers <= 1 || pairs.size() < 64) {
    for (auto [i, j] : pairs) m[i][j] = m[j][i] = dist(members[i], members[j]);
    return m;
  }

  // Static round-robin split; each pair is written by exactly one worker, so the
  // result is identical for any worker count.
  std::vector<std::thread> threads;
  std::exception_ptr first_error;
  std::mutex err_mu;
  for (unsigned w = 0; w < workers; ++w) {
    threads.emplace_back([&, w]() {
      try {
        for (std::size_t k = w; k < pairs.size(); k += workers) {
          auto [i, j] = pairs[k];
          m[i][j] = m[j][i] = dist(members[i], members[j]);
        }
      } catch (...) {
        std::lock_guard<std::mutex> lk(err_mu);
        if (!first_error) first_error = std::current_exception();
      }
    });
  }
  for (auto& t : threads) t.join();
  if (first_error) std::rethrow_exception(first_error);
  return m;
}

}  // namespace ulam
