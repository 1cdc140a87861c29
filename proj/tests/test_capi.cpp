#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <memory>
#include <string>

#include "tiedbraid/tiedbraid.h"

namespace {
  struct Free {
    void operator()(tb_context* c) const { tb_context_free(c); }
    void operator()(tb_word* w) const { tb_word_free(w); }
    void operator()(tb_document* d) const { tb_document_free(d); }
  };
  using Ctx  = std::unique_ptr<tb_context, Free>;
  using Word = std::unique_ptr<tb_word, Free>;
  using Doc  = std::unique_ptr<tb_document, Free>;

  std::string take(char* s) {
    std::string out = s ? s : "";
    tb_string_free(s);
    return out;
  }
  Ctx context(char const* header) {
    tb_context* c = nullptr;
    REQUIRE(tb_context_parse(header, &c) == TB_OK);
    return Ctx(c);
  }
  Word word(char const* text, tb_context const* c) {
    tb_word* w = nullptr;
    REQUIRE(tb_word_parse(text, c, &w) == TB_OK);
    return Word(w);
  }
  std::string rendered(tb_word const* w) {
    char* s = nullptr;
    REQUIRE(tb_word_render(w, &s) == TB_OK);
    return take(s);
  }
}  // namespace

TEST_CASE("contexts and errors") {
  auto const c = context("%ctx g=1 n=3 M=lens p=2");
  CHECK(tb_context_n(c.get()) == 3);
  CHECK(tb_context_g(c.get()) == 1);
  char* h = nullptr;
  REQUIRE(tb_context_header(c.get(), &h) == TB_OK);
  CHECK(take(h) == "%ctx g=1 n=3 M=lens p=2");

  tb_context* bad = nullptr;
  CHECK(tb_context_parse("g=1 n=2 M=s3", &bad) == TB_INVALID_CONTEXT);
  CHECK(bad == nullptr);
  CHECK(std::string(tb_last_error()).find("InvalidContext") != std::string::npos);
  CHECK(tb_context_parse(nullptr, &bad) == TB_INVALID_ARGUMENT);
  CHECK(tb_context_n(nullptr) == 0);
  CHECK(std::string(tb_status_string(TB_FLAVOR_FORBIDDEN)) == "FlavorForbidden");
  CHECK(std::string(tb_status_string(TB_OK)) == "Ok");
  CHECK(std::string(tb_status_string(static_cast<tb_status>(999))) == "Unknown");
}

TEST_CASE("words") {
  auto const c = context("g=0 n=3 M=s3");
  auto const w = word("t(1,3) s1", c.get());
  CHECK(rendered(w.get()) == "t(1,3) s1");

  tb_word* out = nullptr;
  CHECK(tb_word_parse("q1", c.get(), &out) == TB_UNKNOWN_TOKEN);
  CHECK(tb_word_parse("s3", c.get(), &out) == TB_INDEX_OUT_OF_RANGE);
  CHECK(out == nullptr);

  REQUIRE(tb_word_expand(w.get(), &out) == TB_OK);
  Word x(out);
  CHECK(rendered(x.get()) == "s1 t2 S1 s1");

  REQUIRE(tb_word_compose(w.get(), x.get(), &out) == TB_OK);
  Word y(out);
  CHECK(rendered(y.get()) == "t(1,3) s1 s1 t2 S1 s1");

  auto const other = context("g=0 n=2 M=s3");
  auto const z     = word("s1", other.get());
  CHECK(tb_word_compose(w.get(), z.get(), &out) == TB_CONTEXT_MISMATCH);

  char*  violations = nullptr;
  size_t count      = 7;
  REQUIRE(tb_word_validate(w.get(), &violations, &count) == TB_OK);
  CHECK(count == 0);
  CHECK(take(violations).empty());

  tb_context* wc = nullptr;
  REQUIRE(tb_word_context(w.get(), &wc) == TB_OK);
  Ctx owned(wc);
  CHECK(tb_context_n(wc) == 3);
}

TEST_CASE("semantics, closure and normal form") {
  auto const c = context("g=0 n=3 M=s3");
  auto const w = word("t2 s1", c.get());
  char*      s = nullptr;
  REQUIRE(tb_normal_form(w.get(), &s) == TB_OK);
  CHECK(take(s) == "braid=s1\nties={M1,M3},{M2}\nreconstruction=s1 t(1,3)\n");

  REQUIRE(tb_closure_report(word("t1", context("g=0 n=2 M=s3").get()).get(), &s) == TB_OK);
  CHECK(take(s).starts_with("components=2 tieClasses=1"));

  REQUIRE(tb_closure_record(w.get(), &s) == TB_OK);
  CHECK(take(s).starts_with("closure g=0 n=3"));

  REQUIRE(tb_semantics(w.get(), &s) == TB_OK);
  CHECK(take(s).find("partition=") != std::string::npos);

  int essential = -1;
  REQUIRE(tb_essential(w.get(), 1, &essential) == TB_OK);
  CHECK(essential == 1);
  CHECK(tb_essential(w.get(), 2, &essential) == TB_NOT_A_TIE);
}

TEST_CASE("equality") {
  auto const c = context("g=0 n=3 M=s3");
  tb_verdict v = TB_UNDECIDED;
  char*      witness = nullptr;
  REQUIRE(tb_braid_equal(word("s1 s2 s1", c.get()).get(), word("s2 s1 s2", c.get()).get(),
                         1000000, &v, &witness)
          == TB_OK);
  CHECK(v == TB_EQUAL);
  CHECK(take(witness).empty());

  REQUIRE(tb_monoid_equal(word("t1", c.get()).get(), word("t2", c.get()).get(), 1000000, &v,
                          &witness)
          == TB_OK);
  CHECK(v == TB_DIFFER);
  CHECK(take(witness) == "partition");

  REQUIRE(tb_braid_equal(word("s1 s2 s1", c.get()).get(), word("s2 s1 s2", c.get()).get(), 0,
                         &v, nullptr)
          == TB_OK);
  CHECK(v == TB_UNDECIDED);
  CHECK(tb_braid_equal(word("t1", c.get()).get(), word("", c.get()).get(), 10, &v, nullptr)
        == TB_TIE_TOKEN_PRESENT);
}

TEST_CASE("documents") {
  tb_document* d = nullptr;
  REQUIRE(tb_document_load("%ctx g=1 n=2 M=st\ns1 a1\ne\n", nullptr, &d) == TB_OK);
  Doc doc(d);
  CHECK(tb_document_size(d) == 2);
  tb_word* w = nullptr;
  REQUIRE(tb_document_word(d, 0, &w) == TB_OK);
  Word first(w);
  CHECK(rendered(w) == "s1 a1");
  CHECK(tb_document_word(d, 2, &w) == TB_INVALID_ARGUMENT);
  CHECK(tb_document_load("s1\n", nullptr, &d) == TB_INVALID_CONTEXT);
}

TEST_CASE("moves") {
  auto const c     = context("g=1 n=1 M=lens p=2");
  auto const w     = word("a1", c.get());
  tb_word const* words[] = {w.get()};
  int const      args[]  = {1};
  tb_word*       out     = nullptr;
  char*          report  = nullptr;
  size_t         diffs   = 9;
  REQUIRE(tb_move_apply("tbbm", words, 1, args, 1, &out, &report, &diffs) == TB_OK);
  Word after(out);
  CHECK(rendered(out) == "s1 s1 a1 s1 a1 S1 s1 a1 S1 s1");
  CHECK(diffs == 0);
  auto const text = take(report);
  CHECK(text.starts_with("move="));
  CHECK(text.find("diff=0") != std::string::npos);

  auto const hb     = context("g=2 n=2 M=hb");
  auto const h      = word("t1", hb.get());
  tb_word const* hw[] = {h.get()};
  int const      la[] = {1, 1};
  CHECK(tb_move_apply("loop-conjugate", hw, 1, la, 2, &out, &report, &diffs)
        == TB_FLAVOR_FORBIDDEN);
  CHECK(tb_move_apply("twist", hw, 1, la, 2, &out, &report, &diffs) == TB_BAD_INSTANTIATION);
  CHECK(tb_move_apply(nullptr, hw, 1, la, 2, &out, &report, &diffs) == TB_INVALID_ARGUMENT);
}

TEST_CASE("catalog, suites and drawings") {
  auto const c = context("g=1 n=2 M=st");
  char*      s = nullptr;
  REQUIRE(tb_relations(c.get(), 0, &s) == TB_OK);
  CHECK(take(s).find("loop.comm.fixedtie") != std::string::npos);

  tb_verdict v = TB_UNDECIDED;
  REQUIRE(tb_check(c.get(), "relations", 1000000, &s, &v) == TB_OK);
  CHECK(v == TB_EQUAL);
  CHECK(take(s).find("failures=0") != std::string::npos);
  CHECK(tb_check(c.get(), "tbbm", 1000000, &s, &v) == TB_FLAVOR_FORBIDDEN);
  CHECK(tb_check(c.get(), "bogus", 1000000, &s, &v) == TB_INVALID_ARGUMENT);

  char* a = nullptr;
  char* b = nullptr;
  REQUIRE(tb_fuzz(5, 40, 12, 1000000, nullptr, &a, &v) == TB_OK);
  CHECK(v == TB_EQUAL);
  REQUIRE(tb_fuzz(5, 40, 12, 1000000, nullptr, &b, &v) == TB_OK);
  CHECK(take(a) == take(b));

  auto const w = word("s1 t1 a1", c.get());
  REQUIRE(tb_draw(w.get(), TB_SVG, &s) == TB_OK);
  CHECK(take(s).starts_with("<svg"));
  REQUIRE(tb_draw(w.get(), TB_ASCII, &s) == TB_OK);
  CHECK_FALSE(take(s).empty());
  CHECK(tb_draw(w.get(), static_cast<tb_format>(5), &s) == TB_INVALID_ARGUMENT);
}
