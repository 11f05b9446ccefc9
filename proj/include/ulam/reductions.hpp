#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ulam/aggregation.hpp"
#include "ulam/graph.hpp"
#include "ulam/perm.hpp"
#include "ulam/vectors.hpp"

namespace ulam {

// Everything needed to rebuild a reduction output deterministically, plus the
// derived quantities a verifier replays. Field use depends on `kind`:
//   maxcut-median:  graph, t, cut_target, tau
//   multiset-set:   source_perms, m, tau (input threshold)
//   qov-center:     a,b,c,e, n, m, d, len_l, tau, tau_prime
//   ov4-bimedian:   a,b,c,e, n, m, d, len_l, tau
//   bi-monomedian:  a,b,c,e, n, m, d, len_l, tau, len_l2, big_k, big_m, big_d,
//                   k_sums, tau_mono
struct Certificate {
  std::string kind;

  Graph graph;
  std::uint64_t t = 0;
  std::uint64_t cut_target = 0;

  std::vector<PermString> source_perms;

  VectorSet a, b, c, e;
  std::uint64_t n = 0, m = 0, d = 0;
  std::uint64_t len_l = 0;   // core gadget length L
  std::uint64_t len_l2 = 0;  // balanced block length L'
  std::uint64_t big_k = 0;   // marker block scale K
  std::uint64_t big_m = 0;   // shared reference distance M
  std::uint64_t big_d = 0;   // balanced load target D
  std::vector<std::uint64_t> k_sums;

  std::uint64_t tau = 0;
  std::uint64_t tau_prime = 0;
  std::uint64_t tau_mono = 0;
};

struct MonoReduction {
  UlamInstance instance;
  Certificate cert;
};

struct BiReduction {
  BichromaticInstance instance;
  Certificate cert;
};

struct MaxcutGadgets {
  PermString pi_left, pi_right;
  // one (first, second) pair per graph edge, in edge order
  std::vector<std::pair<PermString, PermString>> edge_perms;
  std::uint64_t t = 0;  // multiplicity of the two reference rows
};

MaxcutGadgets maxcut_gadgets(const Graph& g);

// Candidate encoding a vertex side assignment: side-A vertices ascending, the
// first separator run, side-B vertices descending, the second separator run.
PermString maxcut_side_perm(std::uint32_t n, std::uint64_t mask);

// Median cost threshold equivalent to "some cut has at least cut_target edges".
std::uint64_t maxcut_threshold(const Graph& g, std::uint64_t cut_target);

MonoReduction maxcut_to_median(const Graph& g, std::uint64_t cut_target);

// Distinct-suffix transform: appends a fresh 2m-symbol block with one adjacent
// swap per member, making members distinct while shifting every continuous
// objective value by exactly m.
MonoReduction multiset_to_set(const UlamInstance& in);

struct OvInput {
  VectorSet a, b, c, e;
};

// {v masked with each member of base, in order}
VectorSet masked_tuple(const BinaryVector& v, const VectorSet& base);

MonoReduction qov_to_discrete_center(const OvInput& in);

BiReduction ov4_to_bichromatic_median(const OvInput& in);

// Input is the certificate of ov4_to_bichromatic_median. Requires n % 4 == 0.
MonoReduction bichromatic_to_monochromatic_median(const Certificate& bi_cert);

// Duplicates the leading vectors of A and B until their count is a multiple of
// four; preserves the quantified truth value.
OvInput pad_ov_for_divisibility(OvInput in);

}  // namespace ulam
