#include <random>

#include "doctest.h"
#include "test_util.hpp"
#include "ulam/metric.hpp"
#include "ulam/ov_gadgets.hpp"

using namespace ulam;
using test_util::P;
using test_util::random_bits;

TEST_CASE("coordinate gadget tables") {
  CHECK(coordinate_gadget(Side::a, 0) == P("123"));
  CHECK(coordinate_gadget(Side::a, 1) == P("312"));
  CHECK(coordinate_gadget(Side::b, 0) == P("132"));
  CHECK(coordinate_gadget(Side::b, 1) == P("213"));
  for (int x = 0; x <= 1; ++x)
    for (int y = 0; y <= 1; ++y) {
      std::size_t want = (x == 1 && y == 1) ? 1 : 2;
      CHECK(lcs_oracle(coordinate_gadget(Side::a, x), coordinate_gadget(Side::b, y)) == want);
    }
}

TEST_CASE("vector gadget inner product identity") {
  CHECK(vector_gadget(Side::a, "01") == P("123645"));
  CHECK(vector_gadget(Side::b, "01") == P("132546"));

  for (std::size_t d = 1; d <= 3; ++d) {
    for (std::uint32_t xm = 0; xm < (1u << d); ++xm)
      for (std::uint32_t ym = 0; ym < (1u << d); ++ym) {
        BinaryVector x, y;
        for (std::size_t i = 0; i < d; ++i) {
          x.push_back((xm >> i & 1) ? '1' : '0');
          y.push_back((ym >> i & 1) ? '1' : '0');
        }
        PermString va = vector_gadget(Side::a, x);
        PermString vb = vector_gadget(Side::b, y);
        CHECK(va.size() == 3 * d);
        CHECK(lcs_oracle(va, vb) == 2 * d - inner_product(x, y));
        CHECK(ulam_distance(va, vb) == d + inner_product(x, y));
      }
  }

  CHECK_THROWS_AS(vector_gadget(Side::a, ""), Error);
  CHECK_THROWS_AS(vector_gadget(Side::a, "0a1"), Error);
}

TEST_CASE("normalized gadget collapses to a two-value dichotomy") {
  CHECK(normalized_gadget(Side::a, "0") == P("4123"));
  CHECK(normalized_gadget(Side::b, "1") == P("2134"));

  for (std::size_t d = 1; d <= 3; ++d) {
    for (std::uint32_t xm = 0; xm < (1u << d); ++xm)
      for (std::uint32_t ym = 0; ym < (1u << d); ++ym) {
        BinaryVector x, y;
        for (std::size_t i = 0; i < d; ++i) {
          x.push_back((xm >> i & 1) ? '1' : '0');
          y.push_back((ym >> i & 1) ? '1' : '0');
        }
        PermString na = normalized_gadget(Side::a, x);
        PermString nb = normalized_gadget(Side::b, y);
        CHECK(na.size() == 5 * d - 1);
        CHECK(nb.size() == 5 * d - 1);
        std::size_t want = orthogonal(x, y) ? 2 * d : 2 * d - 1;
        CHECK(lcs_oracle(na, nb) == want);
      }
  }
}

TEST_CASE("tuple gadget counts orthogonal pairs") {
  CHECK(ulam_distance(or_gadget_f({1, {"0"}}), or_gadget_g({1, {"1"}})) == 2);
  CHECK(ulam_distance(or_gadget_f({1, {"1"}}), or_gadget_g({1, {"1"}})) == 3);

  {
    VectorSet ta{2, {"10", "01"}}, tb{2, {"11", "10"}};
    PermString f = or_gadget_f(ta), g = or_gadget_g(tb);
    CHECK(f.size() == (5 * 2 - 1) * 4);
    CHECK(ulam_distance(f, g) == 3 * 2 * 4 - 1);  // one orthogonal pair
  }

  std::mt19937_64 rng(411);
  for (int it = 0; it < 40; ++it) {
    std::size_t m = 1 + rng() % 3;
    std::size_t d = 1 + rng() % 3;
    VectorSet ta{d, {}}, tb{d, {}};
    for (std::size_t i = 0; i < m; ++i) {
      ta.vecs.push_back(random_bits(d, rng));
      tb.vecs.push_back(random_bits(d, rng));
    }
    std::size_t orth = 0;
    for (const auto& x : ta.vecs)
      for (const auto& y : tb.vecs)
        if (orthogonal(x, y)) ++orth;
    PermString f = or_gadget_f(ta), g = or_gadget_g(tb);
    std::size_t want = 3 * d * m * m - orth;
    CHECK(ulam_distance(f, g) == want);
    CHECK(f.size() - lcs_oracle(f, g) == want);
  }

  CHECK_THROWS_AS(or_gadget_f(VectorSet{0, {}}), Error);
  CHECK_THROWS_AS(or_gadget_f(VectorSet{2, {"01", "0"}}), Error);
}
