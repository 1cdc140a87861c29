#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracle/burau.hpp"
#include "tiedbraid/equivalence.hpp"
#include "tiedbraid/random.hpp"

using namespace tiedbraid;

namespace {
  Context ctx(char const* header) {
    return Context::parse(header);
  }
  TiedWord word(char const* text, char const* header) {
    return parse(text, ctx(header));
  }
  ErrorCode code_of(auto&& f) {
    try {
      f();
    } catch (Error const& e) {
      return e.code();
    }
    FAIL("no error thrown");
    return ErrorCode::InvalidContext;
  }
  BraidWord braid(int strands, char const* text) {
    BraidWord b{strands, {}};
    if (*text) {
      auto const w = parse(text, Context::make(0, strands, Flavor::S3));
      for (auto const& t : w.letters()) {
        b.letters.push_back({t.first, t.exponent});
      }
    }
    return b;
  }
  BraidWord random_braid(Rng& rng, int strands, int length) {
    BraidWord b{strands, {}};
    for (int k = 0; k < length; ++k) {
      b.letters.push_back({rng.between(1, strands - 1), rng.sign()});
    }
    return b;
  }
  // Inserts relators and cancelling pairs into the empty word.
  BraidWord constructed_trivial(Rng& rng, int strands, int max_length) {
    BraidWord b{strands, {}};
    while (static_cast<int>(b.letters.size()) + 6 <= max_length) {
      BraidWord piece;
      int const i = rng.between(1, strands - 1);
      switch (rng.between(0, 2)) {
        case 0:
          if (i + 1 < strands) {
            piece.letters = {{i, 1}, {i + 1, 1}, {i, 1}, {i + 1, -1}, {i, -1}, {i + 1, -1}};
            break;
          }
          [[fallthrough]];
        case 1:
          piece.letters = {{i, 1}, {i, -1}};
          break;
        default: {
          auto const u = random_braid(rng, strands, rng.between(1, 2));
          piece        = concat(concat(u, b), inverse(u));
          b.letters.clear();
        }
      }
      auto const at = rng.between(0, static_cast<int>(b.letters.size()));
      b.letters.insert(b.letters.begin() + at, piece.letters.begin(), piece.letters.end());
      if (rng.between(0, 3) == 0) {
        break;
      }
    }
    return b;
  }
}  // namespace

TEST_CASE("handle reduction") {
  CHECK(handle_reduce(braid(3, "")).verdict == Verdict::Trivial);
  CHECK(handle_reduce(braid(3, "s1 S1")).verdict == Verdict::Trivial);
  CHECK(handle_reduce(braid(3, "s1 s2 s1 S2 S1 S2")).verdict == Verdict::Trivial);
  CHECK(handle_reduce(braid(4, "s1 s3 S1 S3")).verdict == Verdict::Trivial);
  CHECK(handle_reduce(braid(3, "s1")).verdict == Verdict::Nontrivial);
  CHECK(handle_reduce(braid(3, "s1 s2 S1 S2")).verdict == Verdict::Nontrivial);

  auto const r = handle_reduce(braid(3, "s1 s2 s1 S2 S1 S2"));
  CHECK(r.reduced.letters.empty());
  CHECK(r.steps > 0);

  // A budget of zero stops before the first handle.
  auto const stopped = handle_reduce(braid(3, "s1 s2 S1"), 0);
  CHECK(stopped.verdict == Verdict::BudgetExhausted);
  CHECK(handle_reduce(braid(3, "s1 s2"), 0).verdict == Verdict::Nontrivial);
}

TEST_CASE("handle reduction agrees with the Burau matrix on three strands") {
  Rng rng(31);
  int trivial = 0;
  for (int k = 0; k < 1500; ++k) {
    BraidWord b;
    switch (k % 3) {
      case 0: b = random_braid(rng, 3, rng.between(0, 16)); break;
      case 1: b = constructed_trivial(rng, 3, 40); break;
      default: {
        b = constructed_trivial(rng, 3, 40);
        auto const at = rng.between(0, static_cast<int>(b.letters.size()));
        b.letters.insert(b.letters.begin() + at, {rng.between(1, 2), rng.sign()});
      }
    }
    auto const h = handle_reduce(b);
    REQUIRE(h.verdict != Verdict::BudgetExhausted);
    CAPTURE(render(b));
    CHECK((h.verdict == Verdict::Trivial) == oracle::burau_trivial(b));
    trivial += h.verdict == Verdict::Trivial;
  }
  CHECK(trivial > 400);
}

TEST_CASE("constructed trivial words reduce to nothing on more strands") {
  Rng rng(8);
  for (int k = 0; k < 500; ++k) {
    auto const b = constructed_trivial(rng, rng.between(2, 6), 60);
    CHECK(handle_reduce(b).verdict == Verdict::Trivial);
  }
}

TEST_CASE("braid equality") {
  auto const st = "g=1 n=2 M=st";
  CHECK(braid_equal(word("a1 s1 a1 s1", st), word("s1 a1 s1 a1", st)).equal());
  auto const loops = braid_equal(word("a1", st), word("a1 a1", st));
  CHECK(loops.outcome == Equality::Differ);
  CHECK(loops.witness == "exponent-sum(a1)");
  CHECK(braid_equal(word("s1", st), word("S1", st)).witness == "exponent-sum(s)");
  CHECK(braid_equal(word("s1", st), word("", st)).witness == "permutation");
  CHECK(braid_equal(word("s1 s1", st), word("", st)).witness == "exponent-sum(s)");
  // a1 commutes with s1 a1 s1 but not with s1 a1 S1.
  CHECK(braid_equal(word("a1 s1 a1 S1", st), word("s1 a1 S1 a1", st)).witness == "braid");
  auto const nc = braid_equal(word("s1 a1 s1 a1 S1 A1 S1 A1", "g=1 n=2 M=lens p=2"),
                              word("s1 s1 S1 S1", "g=1 n=2 M=lens p=2"));
  CHECK(nc.equal());
  auto const comm = braid_equal(word("a1 s2 s1 S2 S1", "g=1 n=3 M=st"),
                                word("s2 s1 S2 S1 a1", "g=1 n=3 M=st"));
  CHECK(comm.outcome == Equality::Differ);
  CHECK(comm.witness == "braid");

  CHECK(code_of([] { braid_equal(word("t1", "g=0 n=2 M=s3"), word("", "g=0 n=2 M=s3")); })
        == ErrorCode::TieTokenPresent);
  CHECK(code_of([] { braid_equal(word("", "g=0 n=2 M=s3"), word("", "g=0 n=3 M=s3")); })
        == ErrorCode::ContextMismatch);
  auto const undecided = braid_equal(word("s1 s2 s1", "g=0 n=3 M=s3"),
                                     word("s2 s1 s2", "g=0 n=3 M=s3"), 0);
  CHECK(undecided.outcome == Equality::Undecided);
  CHECK(undecided.witness == "budget");
}

TEST_CASE("monoid equality") {
  auto const st = "g=1 n=2 M=st";
  CHECK(monoid_equal(word("p1 t1", st), word("p1 s1 p1 S1", st)).equal());
  auto const part = monoid_equal(word("t1", "g=0 n=3 M=s3"), word("t2", "g=0 n=3 M=s3"));
  CHECK(part.outcome == Equality::Differ);
  CHECK(part.witness == "partition");
  CHECK(monoid_equal(word("t(1,3)", "g=0 n=3 M=s3"), word("s1 t2 S1", "g=0 n=3 M=s3")).equal());
  CHECK(monoid_equal(word("s1 t1", "g=0 n=2 M=s3"), word("t1 s1", "g=0 n=2 M=s3")).equal());
  CHECK(monoid_equal(word("t1 t1", "g=0 n=2 M=s3"), word("t1", "g=0 n=2 M=s3")).equal());
  CHECK(monoid_equal(word("a1", st), word("a1 a1", st)).witness == "exponent-sum(a1)");
  CHECK(code_of([] { monoid_equal(word("", "g=0 n=2 M=s3"), word("", "g=1 n=2 M=st")); })
        == ErrorCode::ContextMismatch);
}

TEST_CASE("monoid equality is an equivalence on random words") {
  Rng rng(3);
  constexpr Flavor flavors[] = {Flavor::S3, Flavor::SolidTorus, Flavor::Lens, Flavor::Handlebody,
                                Flavor::UnlinkComplement};
  WordShape shape;
  shape.max_length = 8;
  for (int k = 0; k < 500; ++k) {
    auto const c = random_context(flavors[k % 5], rng, 2, 1, 3);
    auto const u = random_word(c, rng, shape);
    auto const v = random_word(c, rng, shape);
    auto const w = random_word(c, rng, shape);
    CHECK(monoid_equal(u, u).equal());
    auto const uv = monoid_equal(u, v), vu = monoid_equal(v, u);
    REQUIRE(uv.outcome != Equality::Undecided);
    CHECK(uv.outcome == vu.outcome);
    if (uv.equal() && monoid_equal(v, w).equal()) {
      CHECK(monoid_equal(u, w).equal());
    }
    // Equal words share the quick invariants; differing invariants force Differ.
    if (quick_invariants(u) != quick_invariants(v)) {
      CHECK(uv.outcome == Equality::Differ);
    }
    // Composition is compatible with equality.
    if (uv.equal()) {
      CHECK(monoid_equal(compose(u, w), compose(v, w)).equal());
    }
  }
}

TEST_CASE("quick invariants") {
  auto const q = quick_invariants(word("s1 a1 t1 A1 a1", "g=1 n=2 M=st"));
  CHECK(q.sigma_sum == 1);
  CHECK(q.loop_sums == std::vector<std::int64_t>{1});
  CHECK(q.partition == "{F1},{M1,M2}");
  CHECK(q.perm.images() == std::vector<int>{2, 1});
  CHECK(quick_invariants(word("s1 s2 s1", "g=0 n=3 M=s3"))
        == quick_invariants(word("s2 s1 s2", "g=0 n=3 M=s3")));
}
