#include <cstdlib>
#include <random>

#include "doctest.h"
#include "test_util.hpp"
#include "ulam/balancing.hpp"
#include "ulam/metric.hpp"

using namespace ulam;

namespace {

// recompute the balanced loads from scratch and check them against out.d
void check_balance(const std::vector<std::uint64_t>& k, const BalanceOutput& out,
                   std::uint64_t slack) {
  const std::size_t n = k.size();
  REQUIRE(out.perms.size() == n);
  for (const PermString& p : out.perms) {
    REQUIRE(p.size() == out.perms[0].size());
    CHECK(is_contiguous_perm(p));
    CHECK(ulam_distance(p, out.tau) == out.tau_distance);
  }
  for (std::size_t i = 0; i < n; ++i) {
    std::uint64_t load = k[i];
    for (std::size_t j = 0; j < n; ++j)
      if (j != i) load += ulam_distance(out.perms[i], out.perms[j]);
    std::uint64_t dev = load > out.d ? load - out.d : out.d - load;
    CHECK(dev <= slack);
  }
}

}  // namespace

TEST_CASE("coarse balancing reaches deviation at most n") {
  {
    std::vector<std::uint64_t> k = {5, 5, 5, 5};
    auto out = balance_coarse(k, 8);
    CHECK(out.d == 5);
    CHECK(out.perms[0].empty());  // already within n, no rounds run
    check_balance(k, out, 4);
  }
  {
    std::vector<std::uint64_t> k = {1, 2, 3, 4};
    auto out = balance_coarse(k, 4);
    CHECK(out.d == 3);
    check_balance(k, out, 4);
  }
  {
    std::vector<std::uint64_t> k = {1, 8, 1, 8};
    auto out = balance_coarse(k, 8);
    CHECK(out.d == 11);
    CHECK(out.perms[0].size() == 12);  // two rounds of three ternary blocks
    check_balance(k, out, 4);
  }

  std::mt19937_64 rng(611);
  for (int it = 0; it < 20; ++it) {
    std::size_t n = 4 * (1 + rng() % 3);
    std::uint64_t cap = 4 + rng() % 97;
    std::vector<std::uint64_t> k;
    for (std::size_t i = 0; i < n; ++i) k.push_back(1 + rng() % cap);
    auto out = balance_coarse(k, cap);
    check_balance(k, out, n);
  }

  CHECK_THROWS_AS(balance_coarse({1, 2, 3}, 4), Error);
  CHECK_THROWS_AS(balance_coarse({}, 4), Error);
  CHECK_THROWS_AS(balance_coarse({0, 1, 1, 1}, 4), Error);
  CHECK_THROWS_AS(balance_coarse({1, 1, 1, 9}, 8), Error);
}

TEST_CASE("fine balancing reaches deviation at most one") {
  {
    std::vector<std::uint64_t> k = {5, 5, 5};
    auto out = balance_fine(k, 5);
    CHECK(out.hamming_target == 35);
    check_balance(k, out, 1);
  }
  {
    std::vector<std::uint64_t> k = {1, 2, 2};
    auto out = balance_fine(k, 2);
    CHECK(out.hamming_target == 13);
    check_balance(k, out, 1);
  }

  std::mt19937_64 rng(613);
  for (int it = 0; it < 10; ++it) {
    std::size_t n = 3 + rng() % 6;
    std::uint64_t cap = 1 + rng() % 8;
    std::vector<std::uint64_t> k;
    for (std::size_t i = 0; i < n; ++i) k.push_back(1 + rng() % cap);
    auto out = balance_fine(k, cap);
    check_balance(k, out, 1);
  }

  CHECK_THROWS_AS(balance_fine({3, 3}, 3), Error);
  CHECK_THROWS_AS(balance_fine({0, 1, 1}, 2), Error);
}

TEST_CASE("full balancing handles arbitrary loads") {
  {
    std::vector<std::uint64_t> k = {7, 7, 7, 7};
    auto out = balance_full(k);
    check_balance(k, out, 1);
  }
  {
    std::vector<std::uint64_t> k = {1, 30, 2, 19};
    auto out = balance_full(k);
    check_balance(k, out, 1);
  }
  {
    std::vector<std::uint64_t> k = {0, 0, 0, 0};
    auto out = balance_full(k);
    check_balance(k, out, 1);
  }

  std::mt19937_64 rng(617);
  for (int it = 0; it < 8; ++it) {
    std::size_t n = 4 * (1 + rng() % 2);
    std::vector<std::uint64_t> k;
    for (std::size_t i = 0; i < n; ++i) k.push_back(rng() % 300);
    auto out = balance_full(k);
    check_balance(k, out, 1);
  }

  CHECK_THROWS_AS(balance_full({1, 2, 3, 4, 5, 6}), Error);
}
