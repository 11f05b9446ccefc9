#include <random>

#include "doctest.h"
#include "test_util.hpp"
#include "ulam/io.hpp"
#include "ulam/metric.hpp"

using namespace ulam;
using test_util::P;

TEST_CASE("instance text round trips byte for byte") {
  std::string text =
      "ULAM v1 mono\n"
      "3 4 7\n"
      "1 2 3 4\n"
      "4 3 2 1\n"
      "2 1 4 3\n";
  auto data = parse_instance_text(text);
  REQUIRE(!data.bichromatic);
  CHECK(data.mono.perms.size() == 3);
  CHECK(data.mono.length == 4);
  CHECK(data.mono.tau == 7);
  CHECK(!data.mono.multiset);
  CHECK(serialize_instance(data.mono) == text);

  std::string bi =
      "ULAM v1 bi\n"
      "1 2 3 5\n"
      "1 2 3\n"
      "3 2 1\n"
      "2 1 3\n";
  auto bdata = parse_instance_text(bi);
  REQUIRE(bdata.bichromatic);
  CHECK(bdata.bi.xs.size() == 1);
  CHECK(bdata.bi.ys.size() == 2);
  CHECK(bdata.bi.tau == 5);
  CHECK(serialize_instance(bdata.bi) == bi);
}

TEST_CASE("duplicate members flag a multiset") {
  std::string text =
      "ULAM v1 mono\n"
      "2 2 0\n"
      "1 2\n"
      "1 2\n";
  CHECK(parse_instance_text(text).mono.multiset);
}

TEST_CASE("malformed instance text is rejected") {
  CHECK_THROWS_AS(parse_instance_text(""), Error);
  CHECK_THROWS_AS(parse_instance_text("ULAM v2 mono\n1 1 0\n1\n"), Error);
  CHECK_THROWS_AS(parse_instance_text("ULAM v1 mono\n1 1\n1\n"), Error);
  CHECK_THROWS_AS(parse_instance_text("ULAM v1 mono\n2 2 0\n1 2\n"), Error);
  CHECK_THROWS_AS(parse_instance_text("ULAM v1 mono\n1 2 0\n1 2 3\n"), Error);
  CHECK_THROWS_AS(parse_instance_text("ULAM v1 mono\n1 2 0\n1 3\n"), Error);
  CHECK_THROWS_AS(parse_instance_text("ULAM v1 mono\n1 2 0\n0 1\n"), Error);
  CHECK_THROWS_AS(parse_instance_text("ULAM v1 mono\n1 2 0\n1 2\nx\n"), Error);
  CHECK_THROWS_AS(parse_instance_text("ULAM v1 mono\n99999999 99999999 0\n"), Error);
}

TEST_CASE("vector set files round trip") {
  std::string text =
      "OV v1 eeee\n"
      "2 3\n"
      "010\n"
      "110\n"
      "1 3\n"
      "001\n"
      "2 3\n"
      "111\n"
      "000\n"
      "1 3\n"
      "010\n";
  OvFile f = parse_ov_text(text);
  CHECK(f.pattern == "eeee");
  CHECK(f.sets.a.vecs.size() == 2);
  CHECK(f.sets.b.vecs.size() == 1);
  CHECK(f.sets.c.dim == 3);
  CHECK(serialize_ov(f) == text);

  CHECK_THROWS_AS(parse_ov_text("OV v1 eeaa\n1 1\n0\n1 1\n0\n1 1\n0\n1 1\n0\n"), Error);
  CHECK_THROWS_AS(parse_ov_text("OV v1 eeee\n1 1\n0\n1 2\n00\n1 1\n0\n1 1\n0\n"), Error);
  CHECK_THROWS_AS(parse_ov_text("OV v1 eeee\n1 1\n2\n1 1\n0\n1 1\n0\n1 1\n0\n"), Error);
  CHECK_THROWS_AS(parse_ov_text("OV v1 eeee\n1 1\n0\n1 1\n0\n1 1\n0\n1 1\n0\nextra\n"), Error);
}

TEST_CASE("graph files round trip") {
  std::string text =
      "GRAPH v1\n"
      "4 3\n"
      "1 2\n"
      "2 3\n"
      "1 4\n";
  Graph g = parse_graph_text(text);
  CHECK(g.n == 4);
  CHECK(g.edges.size() == 3);
  CHECK(serialize_graph(g) == text);

  CHECK_THROWS_AS(parse_graph_text("GRAPH v1\n2 1\n1 1\n"), Error);
  CHECK_THROWS_AS(parse_graph_text("GRAPH v1\n2 2\n1 2\n2 1\n"), Error);
  CHECK_THROWS_AS(parse_graph_text("GRAPH v1\n2 1\n1 3\n"), Error);
  CHECK_THROWS_AS(parse_graph_text("GRAPH v1\n2 2\n1 2\n"), Error);
}

TEST_CASE("certificates survive a JSON round trip") {
  {
    Graph g = make_graph(3, {{1, 2}, {2, 3}});
    auto red = maxcut_to_median(g, 2);
    Certificate back = parse_certificate_text(serialize_certificate(red.cert));
    CHECK(back.kind == "maxcut-median");
    CHECK(back.graph.n == red.cert.graph.n);
    CHECK(back.graph.edges == red.cert.graph.edges);
    CHECK(back.t == red.cert.t);
    CHECK(back.cut_target == red.cert.cut_target);
    CHECK(back.tau == red.cert.tau);
  }
  {
    UlamInstance in;
    in.perms = {P("12"), P("12"), P("21")};
    in.length = 2;
    in.tau = 3;
    in.multiset = true;
    auto red = multiset_to_set(in);
    Certificate back = parse_certificate_text(serialize_certificate(red.cert));
    CHECK(back.kind == "multiset-set");
    CHECK(back.source_perms == in.perms);
    CHECK(back.m == 3);
    CHECK(back.tau == 3);
  }
  {
    VectorSet z{2, {"01", "10"}};
    auto red = qov_to_discrete_center({z, z, z, z});
    Certificate back = parse_certificate_text(serialize_certificate(red.cert));
    CHECK(back.kind == "qov-center");
    CHECK(back.a.vecs == z.vecs);
    CHECK(back.e.dim == 2);
    CHECK(back.n == 2);
    CHECK(back.len_l == red.cert.len_l);
    CHECK(back.tau_prime == red.cert.tau_prime);
  }
  {
    VectorSet z{1, {"0", "0", "1", "0"}};
    auto bi = ov4_to_bichromatic_median({z, z, z, z});
    auto mono = bichromatic_to_monochromatic_median(bi.cert);
    Certificate back = parse_certificate_text(serialize_certificate(mono.cert));
    CHECK(back.kind == "bi-monomedian");
    CHECK(back.len_l2 == mono.cert.len_l2);
    CHECK(back.big_k == mono.cert.big_k);
    CHECK(back.big_m == mono.cert.big_m);
    CHECK(back.big_d == mono.cert.big_d);
    CHECK(back.k_sums == mono.cert.k_sums);
    CHECK(back.tau_mono == mono.cert.tau_mono);
  }

  CHECK_THROWS_AS(parse_certificate_text("not json"), Error);
  CHECK_THROWS_AS(parse_certificate_text("{\"kind\": \"bogus\"}"), Error);
}

TEST_CASE("random instance generation is deterministic") {
  auto a = generate_random_instance(5, 12, 42);
  auto b = generate_random_instance(5, 12, 42);
  CHECK(a.perms == b.perms);
  CHECK(a.length == 12);
  CHECK(a.tau == 0);
  for (const auto& p : a.perms) CHECK(is_contiguous_perm(p));
  auto c = generate_random_instance(5, 12, 43);
  CHECK(a.perms != c.perms);
  CHECK_THROWS_AS(generate_random_instance(0, 3, 1), Error);
}

TEST_CASE("file helpers report missing paths") {
  CHECK_THROWS_AS(read_file("/nonexistent/definitely/missing.txt"), Error);
  std::string path = "/tmp/ulam_io_test_roundtrip.txt";
  write_file(path, "payload\n");
  CHECK(read_file(path) == "payload\n");
}
