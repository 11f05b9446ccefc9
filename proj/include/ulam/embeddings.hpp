#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ulam/perm.hpp"

namespace ulam {

struct EmbeddingOutput {
  std::vector<PermString> perms;
  // constant such that source Hamming distance == output Ulam distance - offset_k
  // for every pair
  std::uint64_t offset_k = 0;
};

// Strings over {0,1,2} -> permutations of [3L]; position j becomes a 3-cycle
// rotation over the fresh triple {3j+1,3j+2,3j+3}. Distances preserved exactly
// (offset_k = 0).
EmbeddingOutput embed_ternary(const std::vector<std::string>& strs);

// Permutations of [L] -> permutations of [2L] by interleaving a fixed ascending
// run: p[1] L+1 p[2] L+2 ... Hamming distance becomes Ulam distance exactly
// (offset_k = 0).
EmbeddingOutput embed_interleave(const std::vector<PermString>& perms);

struct CompletionOutput {
  std::vector<Sym> phi;                   // shared fresh symbols, ascending
  std::vector<std::vector<Sym>> strings;  // string i uses sets[i] + phi, each once
};

// For equal-size-s sets, arranges set i plus a shared fresh pool phi into a
// string b_i such that every pair b_i, b_j differs in every position. phi stays
// within 2n*ceil(log2 n) + n symbols, all of them >= min_fresh and above every
// input symbol.
CompletionOutput max_hamming_completion(const std::vector<std::vector<Sym>>& sets,
                                        Sym min_fresh = 1);

// Repeat-free strings over a common alphabet sigma -> permutations, preserving
// Hamming distance up to the additive constant offset_k = (|sigma| - L) + |phi|.
EmbeddingOutput embed_norepeat(const std::vector<PermString>& strs, const std::vector<Sym>& sigma);

}  // namespace ulam
