// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "oracle/burau.hpp"
#include "oracle/closure_oracle.hpp"
#include "tiedbraid/suite.hpp"

using namespace tiedbraid;

namespace {

  constexpr Flavor kFlavors[] = {Flavor::S3, Flavor::SolidTorus, Flavor::Lens, Flavor::Handlebody,
                                 Flavor::UnlinkComplement};

  // Runtime bounds in seconds.
  constexpr double kBoundAC1 = 30;
  constexpr double kBoundAC2 = 60;
  constexpr double kBoundAC3 = 60;
  constexpr double kBoundAC4 = 120;
  constexpr double kBoundAC5 = 120;
  constexpr double kBoundAC6 = 120;
  constexpr double kBoundAC7 = 5;

  constexpr int kSamples = 1000;

  struct Tally {
    std::uint64_t checked  = 0;
    std::uint64_t failures = 0;
    std::string   first;  // first failure, for the report

    void fail(std::string what) {
      if (failures++ == 0) {
        first = std::move(what);
      }
    }
  };

  // Every context with g <= 3, n <= 5; lens spaces for p = 1..3.
  std::vector<Context> all_contexts() {
    std::vector<Context> out;
    for (auto f : kFlavors) {
      for (int g = 0; g <= 3; ++g) {
        for (int n = 1; n <= 5; ++n) {
          for (int p = 1; p <= (f == Flavor::Lens ? 3 : 1); ++p) {
            try {
              out.push_back(f == Flavor::Lens ? Context::make(g, n, f, p) : Context::make(g, n, f));
            } catch (Error const&) {
            }
          }
        }
      }
    }
    return out;
  }

  bool run(char const* id, char const* title, double bound, std::function<std::string(Tally&)> body) {
    Tally      t;
    auto const start   = std::chrono::steady_clock::now();
    std::string detail = body(t);
    double const secs  = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool const ok      = t.failures == 0 && secs < bound;
    std::printf("%s %s %s: %s checked=%llu failures=%llu time=%.2fs bound=%.0fs%s%s\n", id,
                ok ? "PASS" : "FAIL", title, detail.c_str(),
                static_cast<unsigned long long>(t.checked),
                static_cast<unsigned long long>(t.failures), secs, bound,
                t.first.empty() ? "" : " first=", t.first.c_str());
    std::fflush(stdout);
    return ok;
  }

  BraidWord braid_of(TiedWord const& w) {
    BraidWord b{w.context().n(), {}};
    for (auto const& t : w.letters()) {
      b.letters.push_back({t.first, t.exponent});
    }
    return b;
  }

  // Both sides of an instance agree under the closure oracle.
  void oracle_sides(Instance const& inst, Context const& c, Tally& t) {
    auto const l = oracle::closure(inst.lhs(c)), r = oracle::closure(inst.rhs(c));
    ++t.checked;
    if (l.components != r.components || l.shape != r.shape) {
      t.fail("oracle:" + inst.render() + "@" + c.header());
    }
  }

  std::string suite_pass(Tally& t, SuiteReport (*suite)(Context const&, std::uint64_t),
                         std::vector<Relation const*> (*list)(Context const&)) {
    auto const contexts = all_contexts();
    for (auto const& c : contexts) {
      auto const r = suite(c, kDefaultBudget);
      t.checked += r.checked;
      if (!r.ok()) {
        t.failures += r.failures + r.undecided;
        if (t.first.empty()) {
          t.first = c.header();
        }
      }
      for (auto const* rel : list(c)) {
        for (auto const& inst : instances(*rel, c)) {
          oracle_sides(inst, c, t);
        }
      }
    }
    return "contexts=" + std::to_string(contexts.size());
  }

  // Tie-free relators lhs . rhs^-1 of the catalog for c.
  std::vector<TiedWord> relators(Context const& c) {
    std::vector<TiedWord> out;
    for (auto const* rel : relation_catalog(c)) {
      for (auto const& inst : instances(*rel, c)) {
        auto const l = inst.lhs(c), r = inst.rhs(c);
        if (!l.has_ties() && !r.has_ties()) {
          out.push_back(compose(l, inverse(r)));
        }
      }
    }
    return out;
  }

  TiedWord random_braid_word(Context const& c, Rng& rng, int max_length) {
    WordShape shape;
    shape.max_length = max_length;
    shape.ties       = false;
    return random_word(c, rng, shape);
  }

  // Grows the empty word by relator insertions and conjugations, staying
  // within max_length letters.
  TiedWord constructed_trivial(Context const& c, std::vector<TiedWord> const& rel, Rng& rng,
                               int max_length) {
    TiedWord w(c);
    for (int step = 0; step < 12; ++step) {
      if (rng.coin()) {
        auto const& r  = rel[static_cast<std::size_t>(rng.between(0, static_cast<int>(rel.size()) - 1))];
        auto const  at = static_cast<std::size_t>(rng.between(0, static_cast<int>(w.size())));
        if (w.size() + r.size() > static_cast<std::size_t>(max_length)) {
          continue;
        }
        std::vector<Token> letters = w.letters();
        letters.insert(letters.begin() + static_cast<std::ptrdiff_t>(at), r.letters().begin(),
                       r.letters().end());
        w = TiedWord(c, letters);
      } else {
        auto const u = random_braid_word(c, rng, 3);
        if (w.size() + 2 * u.size() > static_cast<std::size_t>(max_length)) {
          continue;
        }
        w = compose(compose(u, w), inverse(u));
      }
    }
    return w;
  }

  bool forbidden(ErrorCode expected, std::function<void()> f) {
    try {
      f();
    } catch (Error const& e) {
      return e.code() == expected;
    }
    return false;
  }

}  // namespace

int main() {
  bool all = true;

  all &= run("AC1", "relation soundness", kBoundAC1, [](Tally& t) {
    auto const detail = suite_pass(t, check_relations, relation_catalog);
    // Tie-free relations on three strands against the Burau matrix.
    auto const c = Context::make(0, 3, Flavor::S3);
    for (auto const& r : relators(c)) {
      ++t.checked;
      if (!oracle::burau_trivial(braid_of(r))) {
        t.fail("burau:" + render(r));
      }
    }
    return detail;
  });

  all &= run("AC2", "derived identities", kBoundAC2, [](Tally& t) {
    return suite_pass(t, check_identities, derived_identities);
  });

  all &= run("AC3", "mobility", kBoundAC3, [](Tally& t) {
    Rng       rng(3003);
    WordShape shape;
    shape.max_length = 30;
    for (int k = 0; k < kSamples; ++k) {
      auto const c   = random_context(kFlavors[k % 5], rng, 3, 1, 5);
      auto const w   = random_word(c, rng, shape);
      auto const nf  = normal_form(w);
      auto const rec = reconstruction(nf);
      ++t.checked;
      if (nf.braid_part.has_ties()) {
        t.fail("ties-in-braid-part:" + render(w));
      } else if (!monoid_equal(w, rec).equal()) {
        t.fail("monoid_equal:" + render(w));
      } else if (oracle::closure(w).shape != oracle::closure(rec).shape) {
        t.fail("oracle:" + render(w));
      }
    }
    return std::string("words=") + std::to_string(kSamples);
  });

  all &= run("AC4", "move invariance", kBoundAC4, [](Tally& t) {
    Rng       rng(4004);
    WordShape shape;
    shape.max_length = 30;
    for (auto f : kFlavors) {
      for (int k = 0; k < kSamples; ++k) {
        auto const c = random_context(f, rng, 3, 1, 5);
        auto const w = random_word(c, rng, shape);
        auto const m = random_move(w, rng);
        auto const before = closure_summary(m.before), after = closure_summary(m.after);
        auto const ob = oracle::closure(m.before), oa = oracle::closure(m.after);
        ++t.checked;
        if (!closure_diff(before, after, m.map).empty()) {
          t.fail(m.name + ":" + render(m.before));
        } else if (before.tie_classes.size() != after.tie_classes.size() || ob.classes != oa.classes
                   || ob.shape != oa.shape) {
          t.fail("oracle " + m.name + ":" + render(m.before));
        }
      }
    }
    return std::string("pairs-per-flavor=") + std::to_string(kSamples);
  });

  all &= run("AC5", "band move certificates", kBoundAC5, [](Tally& t) {
    int contexts = 0;
    for (int n = 1; n <= 4; ++n) {
      for (int p = 1; p <= 3; ++p) {
        auto const r = check_band(Context::make(1, n, Flavor::Lens, p));
        ++contexts;
        t.checked += r.checked;
        if (!r.ok()) {
          t.fail("n=" + std::to_string(n) + " p=" + std::to_string(p));
        }
        // The certificates, independently: equal closures under the oracle.
        for (int sign : {1, -1}) {
          for (auto const& cert : band_commutations(n, p, sign)) {
            ++t.checked;
            if (oracle::closure(cert.lhs).shape != oracle::closure(cert.rhs).shape) {
              t.fail("oracle " + cert.name);
            }
          }
        }
      }
    }
    return "contexts=" + std::to_string(contexts);
  });

  std::uint64_t exhausted = 0;
  all &= run("AC6a", "constructed trivial words", kBoundAC6, [&](Tally& t) {
    Rng         rng(6006);
    std::size_t letters = 0, longest = 0;
    for (int k = 0; k < kSamples; ++k) {
      auto const c   = random_context(kFlavors[k % 5], rng, 3, 2, 5);
      auto const rel = relators(c);
      auto const w   = constructed_trivial(c, rel, rng, 60);
      auto const h   = handle_reduce(embed_to_full_braid(w));
      letters += w.size();
      longest = std::max(longest, w.size());
      ++t.checked;
      exhausted += h.verdict == Verdict::BudgetExhausted;
      if (h.verdict != Verdict::Trivial) {
        t.fail(render(w) + "@" + c.header());
      }
    }
    return std::string("words=") + std::to_string(kSamples) + " mean-length="
           + std::to_string(letters / kSamples) + " longest=" + std::to_string(longest);
  });

  all &= run("AC6b", "handle reduction vs Burau", kBoundAC6, [&](Tally& t) {
    Rng          rng(6106);
    Context const s3 = Context::make(0, 3, Flavor::S3);
    Context const st = Context::make(1, 2, Flavor::SolidTorus);
    int          trivial = 0;
    for (int k = 0; k < kSamples; ++k) {
      auto const& c = k % 2 ? st : s3;
      TiedWord    w(c);
      switch (k % 3) {
        case 0: w = random_braid_word(c, rng, 20); break;
        case 1: w = constructed_trivial(c, relators(c), rng, 40); break;
        default: {
          w = constructed_trivial(c, relators(c), rng, 40);
          w = compose(w, random_braid_word(c, rng, 2));
        }
      }
      auto const b = embed_to_full_braid(w);
      auto const h = handle_reduce(b);
      ++t.checked;
      exhausted += h.verdict == Verdict::BudgetExhausted;
      trivial += h.verdict == Verdict::Trivial;
      if ((h.verdict == Verdict::Trivial) != oracle::burau_trivial(b)) {
        t.fail(render(w) + "@" + c.header());
      }
    }
    return std::string("words=") + std::to_string(kSamples) + " trivial=" + std::to_string(trivial);
  });

  all &= run("AC6c", "no budget exhaustion", kBoundAC6, [&](Tally& t) {
    t.checked = 2 * kSamples;
    for (std::uint64_t k = 0; k < exhausted; ++k) {
      t.fail("budget");
    }
    return "budget=" + std::to_string(kDefaultBudget) + " exhausted=" + std::to_string(exhausted);
  });

  all &= run("AC7", "flavor gating", kBoundAC7, [](Tally& t) {
    auto const hb   = Context::make(2, 2, Flavor::Handlebody);
    auto const st   = Context::make(1, 2, Flavor::SolidTorus);
    auto const s3   = Context::make(0, 2, Flavor::S3);
    auto const lens = Context::make(1, 2, Flavor::Lens, 2);
    struct Case {
      char const*           name;
      bool                  ok;
    };
    std::vector<Case> const cases = {
        {"loop-conjugate-hb", forbidden(ErrorCode::FlavorForbidden,
                                        [&] { loop_conjugate(parse("t1", hb), loop(1, 1)); })},
        {"loop-conjugate-hb-move",
         forbidden(ErrorCode::FlavorForbidden,
                   [&] { apply_move("loop-conjugate", {parse("s1", hb)}, {2, -1}); })},
        {"tbbm-s3", forbidden(ErrorCode::FlavorForbidden, [&] { t_bbm(parse("s1", s3), 1); })},
        {"tbbm-st", forbidden(ErrorCode::FlavorForbidden, [&] { t_bbm(parse("a1", st), 1); })},
        {"tbbm-hb", forbidden(ErrorCode::FlavorForbidden, [&] { t_bbm(parse("a1", hb), -1); })},
        {"fixed-tie-parse-g0", forbidden(ErrorCode::AlphabetForbidden, [&] { parse("p1", s3); })},
        {"fixed-tie-validate-g0",
         [&] {
           auto const v = validate(TiedWord(s3, {fixed_tie(1)}));
           return v.size() == 1 && v[0].code == ErrorCode::AlphabetForbidden;
         }()},
        {"gen-fixed-tie-validate-g0",
         [&] {
           auto const v = validate(TiedWord(s3, {gen_fixed_tie(1, 2)}));
           return v.size() == 1 && v[0].code == ErrorCode::AlphabetForbidden;
         }()},
        // Positive controls: the same operations where they are admitted.
        {"loop-conjugate-st", !forbidden(ErrorCode::FlavorForbidden,
                                         [&] { loop_conjugate(parse("t1", st), loop(1, 1)); })},
        {"tbbm-lens", !forbidden(ErrorCode::FlavorForbidden, [&] { t_bbm(parse("a1", lens), 1); })},
    };
    for (auto const& c : cases) {
      ++t.checked;
      if (!c.ok) {
        t.fail(c.name);
      }
    }
    return "negatives=8 controls=2";
  });

  std::printf("acceptance %s\n", all ? "PASS" : "FAIL");
  return all ? 0 : 1;
}
