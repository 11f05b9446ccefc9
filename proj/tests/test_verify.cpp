#include <random>

#include "doctest.h"
#include "test_util.hpp"
#include "ulam/io.hpp"
#include "ulam/verify.hpp"

using namespace ulam;
using test_util::P;

namespace {

InstanceFileData file_of(const UlamInstance& in) {
  InstanceFileData f;
  f.mono = in;
  return f;
}

InstanceFileData file_of(const BichromaticInstance& in) {
  InstanceFileData f;
  f.bichromatic = true;
  f.bi = in;
  return f;
}

}  // namespace

TEST_CASE("verification accepts faithful reduction outputs") {
  Graph g = make_graph(3, {{1, 2}, {1, 3}, {2, 3}});
  auto mc = maxcut_to_median(g, 2);
  CHECK(verify_certificate(file_of(mc.instance), mc.cert).ok);

  UlamInstance src;
  src.perms = {P("132"), P("132"), P("213")};
  src.length = 3;
  src.tau = 5;
  src.multiset = true;
  auto ms = multiset_to_set(src);
  CHECK(verify_certificate(file_of(ms.instance), ms.cert).ok);

  VectorSet a{2, {"01", "11"}}, b{2, {"10", "00"}}, c{2, {"11"}}, e{2, {"01"}};
  auto qov = qov_to_discrete_center({a, b, c, e});
  CHECK(verify_certificate(file_of(qov.instance), qov.cert).ok);

  VectorSet a4{1, {"0", "1", "0", "1"}}, c4{1, {"1", "0"}};
  auto bi = ov4_to_bichromatic_median({a4, a4, c4, c4});
  CHECK(verify_certificate(file_of(bi.instance), bi.cert).ok);

  auto mono = bichromatic_to_monochromatic_median(bi.cert);
  CHECK(verify_certificate(file_of(mono.instance), mono.cert).ok);
}

TEST_CASE("a single transposed pair of symbols is caught") {
  Graph g = make_graph(3, {{1, 2}, {2, 3}});
  auto mc = maxcut_to_median(g, 1);
  auto broken = mc.instance;
  std::swap(broken.perms[4][0], broken.perms[4][5]);
  auto rep = verify_certificate(file_of(broken), mc.cert);
  CHECK(!rep.ok);
  CHECK(rep.check == "member-mismatch");

  VectorSet a{2, {"01", "11"}}, c{2, {"11"}};
  auto qov = qov_to_discrete_center({a, a, c, c});
  auto qbroken = qov.instance;
  std::swap(qbroken.perms[2][1], qbroken.perms[2][7]);
  rep = verify_certificate(file_of(qbroken), qov.cert);
  CHECK(!rep.ok);
  CHECK(rep.check == "member-mismatch");
}

TEST_CASE("tampered certificate fields are caught") {
  Graph g = make_graph(3, {{1, 2}, {2, 3}});
  auto mc = maxcut_to_median(g, 2);

  auto cert = mc.cert;
  cert.tau += 1;
  auto rep = verify_certificate(file_of(mc.instance), cert);
  CHECK(!rep.ok);
  CHECK(rep.check == "threshold-mismatch");

  cert = mc.cert;
  cert.t += 1;
  CHECK(!verify_certificate(file_of(mc.instance), cert).ok);

  cert = mc.cert;
  cert.kind = "unheard-of";
  rep = verify_certificate(file_of(mc.instance), cert);
  CHECK(!rep.ok);
  CHECK(rep.check == "kind");
}

TEST_CASE("instance and certificate kinds must match") {
  VectorSet a4{1, {"0", "1", "0", "1"}}, c{1, {"0"}};
  auto bi = ov4_to_bichromatic_median({a4, a4, c, c});
  Graph g = make_graph(2, {{1, 2}});
  auto mc = maxcut_to_median(g, 1);
  auto rep = verify_certificate(file_of(bi.instance), mc.cert);
  CHECK(!rep.ok);
  CHECK(rep.check == "file-kind");
}

TEST_CASE("verification survives a serialization round trip") {
  VectorSet a{2, {"10", "01"}}, c{2, {"00"}};
  auto qov = qov_to_discrete_center({a, a, c, c});
  auto file = parse_instance_text(serialize_instance(qov.instance));
  auto cert = parse_certificate_text(serialize_certificate(qov.cert));
  CHECK(verify_certificate(file, cert).ok);
}
