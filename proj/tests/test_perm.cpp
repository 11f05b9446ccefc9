#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "test_util.hpp"
#include "ulam/perm.hpp"

using namespace ulam;
using test_util::P;
using test_util::random_perm;

TEST_CASE("validate accepts valid strings and locates the first problem") {
  CHECK(!validate(P("312")));
  CHECK(!validate(PermString{}));
  CHECK(!validate(PermString{7, 2, 900}));

  auto dup = validate(PermString{3, 1, 3});
  REQUIRE(dup.has_value());
  CHECK(dup->code == Errc::duplicate_symbol);
  CHECK(dup->pos == 2);

  auto zero = validate(PermString{2, 0, 1});
  REQUIRE(zero.has_value());
  CHECK(zero->code == Errc::non_positive_symbol);
  CHECK(zero->pos == 1);

  CHECK_THROWS_AS(require_valid(PermString{1, 1}, "x"), Error);
}

TEST_CASE("validate agrees with a set-based recheck on random near-permutations") {
  std::mt19937_64 rng(7);
  for (int it = 0; it < 200; ++it) {
    std::size_t len = 1 + rng() % 12;
    PermString s;
    for (std::size_t i = 0; i < len; ++i) s.push_back(static_cast<Sym>(rng() % 6));  // zeros and repeats likely
    std::set<Sym> seen;
    bool ok = true;
    for (Sym x : s)
      if (x == 0 || !seen.insert(x).second) {
        ok = false;
        break;
      }
    CHECK(validate(s).has_value() == !ok);
  }
}

TEST_CASE("offset_shift moves every symbol") {
  CHECK(offset_shift(P("123"), 3) == P("456"));
  CHECK(offset_shift(P("2134"), 2) == PermString{4, 3, 5, 6});
  CHECK(offset_shift(P("1"), 0) == P("1"));

  std::mt19937_64 rng(11);
  for (int it = 0; it < 50; ++it) {
    PermString p = random_perm(1 + rng() % 20, rng);
    Sym k = static_cast<Sym>(rng() % 100);
    PermString q = offset_shift(p, k);
    REQUIRE(q.size() == p.size());
    for (std::size_t i = 0; i < p.size(); ++i) CHECK(q[i] == p[i] + k);
  }
}

TEST_CASE("restrict_to keeps order and drops the rest") {
  CHECK(restrict_to(P("31425"), {1, 2, 3}) == P("312"));
  CHECK(restrict_to(P("31425"), {1, 2, 3, 4, 5}) == P("31425"));
  CHECK(restrict_to(P("31425"), {}) == PermString{});
  CHECK(restrict_to(P("31425"), {9}) == PermString{});
}

TEST_CASE("concat_fresh keeps blocks on disjoint symbols and records offsets") {
  {
    ConcatResult r = concat_fresh({P("123"), P("123")});
    CHECK(r.joined == P("123456"));
    CHECK(r.offsets == std::vector<Sym>{0, 3});
  }
  {
    ConcatResult r = concat_fresh({P("12"), P("21")});
    CHECK(r.joined == P("1243"));
    CHECK(r.offsets == std::vector<Sym>{0, 2});
  }
  CHECK(concat_fresh({}).joined.empty());

  // blocks are recoverable from their recorded offsets
  std::mt19937_64 rng(23);
  for (int it = 0; it < 40; ++it) {
    std::vector<PermString> blocks;
    std::size_t count = 1 + rng() % 4;
    for (std::size_t b = 0; b < count; ++b) blocks.push_back(random_perm(1 + rng() % 6, rng));
    ConcatResult r = concat_fresh(blocks);
    REQUIRE(!validate(r.joined));
    std::size_t at = 0;
    for (std::size_t b = 0; b < count; ++b) {
      for (std::size_t i = 0; i < blocks[b].size(); ++i, ++at)
        CHECK(r.joined[at] == blocks[b][i] + r.offsets[b]);
    }
    CHECK(at == r.joined.size());
  }
}

TEST_CASE("renormalize_alphabet compresses to 1..L preserving order structure") {
  CHECK(renormalize_alphabet(PermString{10, 3, 7}) == P("312"));
  CHECK(renormalize_alphabet(P("21")) == P("21"));
  CHECK(renormalize_alphabet(PermString{}) == PermString{});

  std::mt19937_64 rng(31);
  for (int it = 0; it < 40; ++it) {
    PermString p = random_perm(1 + rng() % 15, rng);
    PermString sparse = offset_shift(p, static_cast<Sym>(1 + rng() % 50));
    PermString back = renormalize_alphabet(sparse);
    CHECK(back == p);
    CHECK(is_contiguous_perm(back));
  }
}

TEST_CASE("renormalize_family applies one map across all strings") {
  std::vector<PermString> fam = {PermString{10, 40}, PermString{40, 99}};
  auto out = renormalize_family(fam);
  CHECK(out[0] == PermString{1, 2});
  CHECK(out[1] == PermString{2, 3});
}

TEST_CASE("fresh symbol ledger never reuses a block") {
  FreshSymbolLedger ledger(5);
  CHECK(ledger.take_block(3) == 5);
  CHECK(ledger.take_block(1) == 8);
  CHECK(ledger.shift_for(4) == 8);
  CHECK(ledger.next_free() == 13);
}

TEST_CASE("perm_from_digits and helpers") {
  CHECK(P("4312") == PermString{4, 3, 1, 2});
  CHECK_THROWS_AS(perm_from_digits("102"), Error);
  CHECK(iota_perm(4) == P("1234"));
  CHECK(reversed(P("123")) == P("321"));
  CHECK(is_contiguous_perm(P("231")));
  CHECK(!is_contiguous_perm(PermString{2, 3}));
}
