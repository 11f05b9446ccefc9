#include "ulam/embeddings.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

namespace ulam {

EmbeddingOutput embed_ternary(const std::vector<std::string>& strs) {
  EmbeddingOutput out;
  if (strs.empty()) return out;
  const std::size_t len = strs[0].size();
  for (const std::string& s : strs) {
    if (s.size() != len)
      fail(Errc::length_mismatch, "ternary embedding input lengths " + std::to_string(len) +
                                      " and " + std::to_string(s.size()));
    for (char c : s)
      if (c < '0' || c > '2')
        fail(Errc::bad_alphabet, std::string("ternary embedding character '") + c + "'");
  }

  // the three rotations of (1,2,3); any two agree on no aligned symbol pair that
  // could extend a common subsequence past length 2
  static const Sym rot[3][3] = {{1, 2, 3}, {2, 3, 1}, {3, 1, 2}};
  out.perms.reserve(strs.size());
  for (const std::string& s : strs) {
    PermString p;
    p.reserve(3 * len);
    for (std::size_t j = 0; j < len; ++j) {
      Sym off = static_cast<Sym>(3 * j);
      const Sym* r = rot[s[j] - '0'];
      p.push_back(r[0] + off);
      p.push_back(r[1] + off);
      p.push_back(r[2] + off);
    }
    out.perms.push_back(std::move(p));
  }
  return out;
}

EmbeddingOutput embed_interleave(const std::vector<PermString>& perms) {
  EmbeddingOutput out;
  if (perms.empty()) return out;
  const std::size_t len = perms[0].size();
  for (const PermString& p : perms) {
    if (p.size() != len)
      fail(Errc::length_mismatch, "interleave inputs of lengths " + std::to_string(len) + " and " +
                                      std::to_string(p.size()));
    if (!is_contiguous_perm(p))
      fail(Errc::not_a_permutation, "interleave input is not a permutation of 1.." +
                                        std::to_string(len));
  }

  out.perms.reserve(perms.size());
  for (const PermString& p : perms) {
    PermString q;
    q.reserve(2 * len);
    for (std::size_t j = 0; j < len; ++j) {
      q.push_back(p[j]);
      q.push_back(static_cast<Sym>(len + j + 1));
    }
    out.perms.push_back(std::move(q));
  }
  return out;
}

namespace {

struct NodeResult {
  std::vector<Sym> phi;                   // ascending by allocation
  std::vector<std::vector<Sym>> strings;  // pairwise different in every position
};

// `sets` are sorted, equal-sized, and count is 1 or a power of two with
// size >= count/2. Fresh symbols come from the shared counter so sibling calls
// never collide.
NodeResult complete_rec(std::vector<std::vector<Sym>> sets, Sym& next_fresh) {
  const std::size_t count = sets.size();
  const std::size_t s = sets[0].size();

  if (count == 1) return NodeResult{{}, {std::move(sets[0])}};

  if (s > count) {
    // peel one pairwise-distinct pick per set (smallest available), recurse on
    // the rest, and append the pick: the new last position already differs
    // everywhere
    std::unordered_set<Sym> picked;
    std::vector<Sym> picks(count);
    for (std::size_t i = 0; i < count; ++i) {
      Sym chosen = 0;
      for (Sym x : sets[i])
        if (!picked.count(x)) {
          chosen = x;
          break;
        }
      if (chosen == 0) fail(Errc::internal_error, "completion greedy pick exhausted");
      picked.insert(chosen);
      picks[i] = chosen;
      sets[i].erase(std::find(sets[i].begin(), sets[i].end(), chosen));
    }
    NodeResult sub = complete_rec(std::move(sets), next_fresh);
    for (std::size_t i = 0; i < count; ++i) sub.strings[i].push_back(picks[i]);
    return sub;
  }

  // halve, identify the two fresh pools, and separate the halves by rotations of
  // a new pool: cross pairs then differ everywhere because the rotation alphabet
  // is disjoint from both remainder alphabets
  const std::size_t k = count / 2;
  NodeResult left = complete_rec({sets.begin(), sets.begin() + static_cast<std::ptrdiff_t>(k)},
                                 next_fresh);
  NodeResult right = complete_rec({sets.begin() + static_cast<std::ptrdiff_t>(k), sets.end()},
                                  next_fresh);
  if (left.phi.size() != right.phi.size() ||
      left.strings[0].size() != right.strings[0].size())
    fail(Errc::internal_error, "completion halves disagree in shape");

  // both pools are ascending by allocation; identify them index-by-index
  std::unordered_map<Sym, Sym> remap;
  remap.reserve(right.phi.size() * 2);
  for (std::size_t i = 0; i < right.phi.size(); ++i) remap[right.phi[i]] = left.phi[i];
  for (auto& str : right.strings)
    for (Sym& x : str) {
      auto it = remap.find(x);
      if (it != remap.end()) x = it->second;
    }

  const std::size_t pool = s + left.phi.size();
  std::vector<Sym> psi(pool);
  for (std::size_t i = 0; i < pool; ++i) psi[i] = next_fresh++;

  NodeResult out;
  out.phi = std::move(left.phi);
  out.phi.insert(out.phi.end(), psi.begin(), psi.end());
  out.strings.resize(count);
  for (std::size_t i = 0; i < k; ++i) {
    // distinct rotations of one pool differ in every position; pool size >= k
    // because s >= count/2 holds at every halving node
    std::vector<Sym> rot(pool);
    for (std::size_t t = 0; t < pool; ++t) rot[t] = psi[(t + i) % pool];
    out.strings[i] = std::move(left.strings[i]);
    out.strings[i].insert(out.strings[i].end(), rot.begin(), rot.end());
    out.strings[k + i] = std::move(rot);
    out.strings[k + i].insert(out.strings[k + i].end(), right.strings[i].begin(),
                              right.strings[i].end());
  }
  return out;
}

}  // namespace

CompletionOutput max_hamming_completion(const std::vector<std::vector<Sym>>& sets,
                                        Sym min_fresh) {
  if (sets.empty()) fail(Errc::empty_instance, "completion of zero sets");
  const std::size_t n = sets.size();
  const std::size_t s = sets[0].size();
  Sym max_sym = 0;
  for (const auto& set : sets) {
    if (set.size() != s)
      fail(Errc::unequal_sizes, "set sizes " + std::to_string(s) + " and " +
                                    std::to_string(set.size()));
    PermString as_perm(set.begin(), set.end());
    require_valid(as_perm, "completion set");
    for (Sym x : set) max_sym = std::max(max_sym, x);
  }

  Sym next_fresh = std::max(max_sym + 1, min_fresh);

  std::size_t n2 = 1;
  while (n2 < n) n2 *= 2;
  // grow sets only to n2/2 so the fresh pool total stays within
  // 2n*ceil(log2 n) + n; n2/2 suffices for every rotation pool down the recursion
  const std::size_t s0 = std::max(s, n2 / 2);

  std::vector<std::vector<Sym>> work;
  work.reserve(n2);
  for (const auto& set : sets) {
    std::vector<Sym> sorted(set);
    std::sort(sorted.begin(), sorted.end());
    work.push_back(std::move(sorted));
  }
  for (std::size_t i = n; i < n2; ++i) {
    std::vector<Sym> filler(s);
    for (std::size_t t = 0; t < s; ++t) filler[t] = next_fresh++;
    work.push_back(std::move(filler));
  }

  std::vector<Sym> shared_pad;
  for (std::size_t t = s; t < s0; ++t) shared_pad.push_back(next_fresh++);
  for (auto& set : work) {
    set.insert(set.end(), shared_pad.begin(), shared_pad.end());
    std::sort(set.begin(), set.end());
  }

  NodeResult rec = complete_rec(std::move(work), next_fresh);

  CompletionOutput out;
  out.phi = shared_pad;
  out.phi.insert(out.phi.end(), rec.phi.begin(), rec.phi.end());
  std::sort(out.phi.begin(), out.phi.end());
  out.strings.assign(rec.strings.begin(), rec.strings.begin() + static_cast<std::ptrdiff_t>(n));
  return out;
}

EmbeddingOutput embed_norepeat(const std::vector<PermString>& strs, const std::vector<Sym>& sigma) {
  if (strs.empty()) fail(Errc::empty_instance, "no-repeat embedding of zero strings");
  {
    PermString sig(sigma);
    require_valid(sig, "no-repeat embedding alphabet");
  }
  std::vector<Sym> sigma_sorted(sigma);
  std::sort(sigma_sorted.begin(), sigma_sorted.end());

  const std::size_t len = strs[0].size();
  std::vector<std::vector<Sym>> leftovers;
  leftovers.reserve(strs.size());
  for (const PermString& a : strs) {
    if (a.size() != len)
      fail(Errc::length_mismatch, "no-repeat embedding inputs of lengths " + std::to_string(len) +
                                      " and " + std::to_string(a.size()));
    if (auto issue = validate(a)) {
      if (issue->code == Errc::duplicate_symbol)
        fail(Errc::repeated_symbol, "symbol repeats at position " + std::to_string(issue->pos + 1));
      fail(issue->code, "no-repeat embedding input");
    }
    std::unordered_set<Sym> present(a.begin(), a.end());
    for (Sym x : a)
      if (!std::binary_search(sigma_sorted.begin(), sigma_sorted.end(), x))
        fail(Errc::bad_alphabet, "symbol " + std::to_string(x) + " outside the given alphabet");
    std::vector<Sym> rest;
    rest.reserve(sigma_sorted.size() - len);
    for (Sym x : sigma_sorted)
      if (!present.count(x)) rest.push_back(x);
    leftovers.push_back(std::move(rest));
  }

  // the fresh pool must clear all of sigma, not just the leftover symbols: the
  // top of sigma can be missing from every leftover set
  const Sym above_sigma = sigma_sorted.empty() ? 1 : sigma_sorted.back() + 1;
  CompletionOutput comp = max_hamming_completion(leftovers, above_sigma);

  std::vector<PermString> full;
  full.reserve(strs.size());
  for (std::size_t i = 0; i < strs.size(); ++i) {
    PermString p(strs[i]);
    p.insert(p.end(), comp.strings[i].begin(), comp.strings[i].end());
    full.push_back(std::move(p));
  }

  // every full string arranges sigma + phi, so one shared relabeling makes them
  // contiguous without touching any pairwise Hamming distance
  std::vector<PermString> relabeled = renormalize_family(full);
  EmbeddingOutput out = embed_interleave(relabeled);
  out.offset_k = static_cast<std::uint64_t>(sigma_sorted.size() - len) + comp.phi.size();
  return out;
}

}  // namespace ulam
