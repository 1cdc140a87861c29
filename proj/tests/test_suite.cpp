#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tiedbraid/suite.hpp"

using namespace tiedbraid;

TEST_CASE("relation suite") {
  auto const r = check_relations(Context::parse("g=2 n=4 M=hb"));
  CHECK(r.ok());
  CHECK(r.checked > 50);
  CHECK(r.text.find("relation=fixedtie.comm") != std::string::npos);
  CHECK(r.text.find("failures=0 undecided=0\n") != std::string::npos);

  auto const s3 = check_identities(Context::parse("g=0 n=4 M=s3"));
  CHECK(s3.ok());
}

TEST_CASE("band suite") {
  auto const r = check_band(Context::parse("g=1 n=3 M=lens p=3"));
  CHECK(r.ok());
  CHECK(r.text.find("band sign=+") != std::string::npos);
  CHECK(r.text.find("band sign=-") != std::string::npos);
  CHECK_THROWS_AS(check_band(Context::parse("g=1 n=3 M=st")), Error);
}

TEST_CASE("fuzz reports depend only on the options") {
  FuzzOptions o;
  o.seed  = 17;
  o.cases = 150;
  auto const a = fuzz(o);
  auto const b = fuzz(o);
  CHECK(a.text == b.text);
  CHECK(a.ok());
  CHECK(a.text.starts_with("fuzz seed=17 cases=150\n"));
  CHECK(a.text.ends_with("result=PASS\n"));

  o.seed = 18;
  CHECK(fuzz(o).text != a.text);

  o.ctx = Context::parse("g=1 n=3 M=lens p=2");
  CHECK(fuzz(o).ok());
}

TEST_CASE("random instances are legal") {
  Rng rng(2);
  // One strand and no fixed strands: nothing to rewrite.
  CHECK_FALSE(random_instance(Context::parse("g=0 n=1 M=s3"), rng).has_value());
  for (auto const* h : {"g=1 n=1 M=st", "g=0 n=4 M=s3", "g=3 n=2 M=unlink"}) {
    auto const c = Context::parse(h);
    for (int k = 0; k < 50; ++k) {
      auto const inst = random_instance(c, rng);
      REQUIRE(inst.has_value());
      CHECK(is_legal(*inst->relation, inst->args, c));
    }
  }
}
