#include <random>

#include "doctest.h"
#include "test_util.hpp"
#include "ulam/aggregation.hpp"
#include "ulam/oracles.hpp"

using namespace ulam;
using test_util::P;
using test_util::random_perm;

namespace {

// reference implementation: quadratic scan with the slow distance
SolveResult reference_median(const std::vector<PermString>& members) {
  SolveResult best;
  for (std::size_t i = 0; i < members.size(); ++i) {
    std::uint64_t cost = 0;
    for (std::size_t j = 0; j < members.size(); ++j)
      cost += ulam_distance_oracle(members[i], members[j]);
    if (i == 0 || cost < best.cost) best = {i, members[i], cost};
  }
  return best;
}

}  // namespace

TEST_CASE("discrete median and center on pinned families") {
  std::vector<PermString> cyc = {P("123"), P("231"), P("312")};
  auto med = discrete_median(cyc);
  CHECK(med.index == 0);
  CHECK(med.cost == 2);
  auto cen = discrete_center(cyc);
  CHECK(cen.index == 0);
  CHECK(cen.cost == 1);

  std::vector<PermString> s = {P("123"), P("132"), P("321")};
  med = discrete_median(s);
  CHECK(med.index == 1);
  CHECK(med.perm == P("132"));
  CHECK(med.cost == 2);
  cen = discrete_center(s);
  CHECK(cen.index == 1);
  CHECK(cen.cost == 1);

  auto solo = discrete_median({P("4231")});
  CHECK(solo.index == 0);
  CHECK(solo.cost == 0);

  CHECK_THROWS_AS(discrete_median({}), Error);
  CHECK_THROWS_AS(discrete_center({}), Error);
}

TEST_CASE("discrete solvers agree with the quadratic reference") {
  std::mt19937_64 rng(331);
  for (int it = 0; it < 12; ++it) {
    std::size_t n = 2 + rng() % 6;
    std::size_t len = 3 + rng() % 10;
    std::vector<PermString> members;
    for (std::size_t i = 0; i < n; ++i) members.push_back(random_perm(len, rng));
    auto got = discrete_median(members);
    auto want = reference_median(members);
    CHECK(got.index == want.index);
    CHECK(got.cost == want.cost);
  }
}

TEST_CASE("bichromatic solvers pick candidates from the first color") {
  std::vector<PermString> xs = {P("12"), P("21")};
  std::vector<PermString> ys = {P("12"), P("12")};
  auto med = bichromatic_median(xs, ys);
  CHECK(med.index == 0);
  CHECK(med.cost == 0);
  auto cen = bichromatic_center(xs, ys);
  CHECK(cen.index == 0);
  CHECK(cen.cost == 0);

  ys = {P("21"), P("12"), P("21")};
  med = bichromatic_median(xs, ys);
  CHECK(med.index == 1);
  CHECK(med.cost == 1);
  cen = bichromatic_center(xs, ys);
  CHECK(cen.index == 0);  // both maxima are 1, lowest index wins
  CHECK(cen.cost == 1);

  CHECK_THROWS_AS(bichromatic_median({}, ys), Error);
  CHECK_THROWS_AS(bichromatic_median(xs, {}), Error);
}

TEST_CASE("continuous optima over the whole symmetric group") {
  auto single = continuous_median_exhaustive({P("231")});
  CHECK(single.perm == P("231"));
  CHECK(single.cost == 0);

  auto med = continuous_median_exhaustive({P("123"), P("231")});
  CHECK(med.cost == 1);
  CHECK(med.perm == P("123"));  // lexicographically least optimum

  auto cen = continuous_center_exhaustive({P("123"), P("231")});
  CHECK(cen.cost == 1);
  CHECK(cen.perm == P("123"));

  CHECK_THROWS_AS(continuous_median_exhaustive({iota_perm(10)}), Error);
  CHECK(continuous_median_exhaustive({iota_perm(4)}, 4).cost == 0);
  CHECK_THROWS_AS(continuous_center_exhaustive({iota_perm(5)}, 4), Error);
}

TEST_CASE("continuous never loses to discrete") {
  std::mt19937_64 rng(337);
  for (int it = 0; it < 10; ++it) {
    std::size_t n = 2 + rng() % 4;
    std::size_t len = 3 + rng() % 4;
    std::vector<PermString> members;
    for (std::size_t i = 0; i < n; ++i) members.push_back(random_perm(len, rng));
    auto cont = continuous_median_exhaustive(members);
    auto disc = discrete_median(members);
    CHECK(cont.cost <= disc.cost);
    std::uint64_t check = 0;
    for (const PermString& m : members) check += ulam_distance(cont.perm, m);
    CHECK(check == cont.cost);
  }
}

TEST_CASE("continuous two-member optima match the enumeration oracle") {
  std::mt19937_64 rng(347);
  for (int it = 0; it < 8; ++it) {
    std::size_t len = 2 + rng() % 5;
    PermString a = random_perm(len, rng), b = random_perm(len, rng);
    auto r = two_perm_median_exhaustive(a, b);
    auto med = continuous_median_exhaustive({a, b});
    CHECK(med.cost == r.cost);
    CHECK(med.perm == r.optima.front());
  }
}
