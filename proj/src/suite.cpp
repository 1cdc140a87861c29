#include "tiedbraid/suite.hpp"

#include <functional>
#include <map>
#include <sstream>

#include "tiedbraid/rewriting.hpp"

namespace tiedbraid {

  namespace {
    struct Tally {
      std::uint64_t checked = 0, failures = 0, undecided = 0;
    };

    void record(Tally& t, EqualityResult const& r) {
      ++t.checked;
      if (r.outcome == Equality::Differ) {
        ++t.failures;
      } else if (r.outcome == Equality::Undecided) {
        ++t.undecided;
      }
    }

    SuiteReport check_list(std::vector<Relation const*> const& list,
                           Context const&                      ctx,
                           std::uint64_t                       budget) {
      SuiteReport        report;
      std::ostringstream out;
      out << ctx.header() << '\n';
      for (auto const* rel : list) {
        Tally       tally;
        std::string first_failure;
        for (auto const& inst : instances(*rel, ctx)) {
          bool const scan = scan_sound(inst, ctx);
          auto       eq   = monoid_equal(inst.lhs(ctx), inst.rhs(ctx), budget);
          if (!scan && eq.outcome == Equality::Equal) {
            eq = {Equality::Differ, "scan"};
          }
          record(tally, eq);
          if (eq.outcome != Equality::Equal && first_failure.empty()) {
            first_failure = inst.render() + ":" + eq.witness;
          }
        }
        out << "relation=" << rel->id << " instances=" << tally.checked
            << " failures=" << tally.failures << " undecided=" << tally.undecided;
        if (!first_failure.empty()) {
          out << " first=" << first_failure;
        }
        out << '\n';
        report.checked += tally.checked;
        report.failures += tally.failures;
        report.undecided += tally.undecided;
      }
      out << "relations=" << list.size() << " instances=" << report.checked
          << " failures=" << report.failures << " undecided=" << report.undecided << '\n';
      report.text = out.str();
      return report;
    }

    std::vector<int> cycle_of(Permutation const& perm, int x) {
      for (auto const& c : perm.cycles()) {
        if (std::find(c.begin(), c.end(), x) != c.end()) {
          return c;
        }
      }
      return {x};
    }

    template <typename T>
    T const& pick(std::vector<T> const& v, Rng& rng) {
      return v[rng.between(0, static_cast<int>(v.size()) - 1)];
    }
  }  // namespace

  SuiteReport check_relations(Context const& ctx, std::uint64_t budget) {
    return check_list(relation_catalog(ctx), ctx, budget);
  }

  SuiteReport check_identities(Context const& ctx, std::uint64_t budget) {
    return check_list(derived_identities(ctx), ctx, budget);
  }

  SuiteReport check_band(Context const& ctx, std::uint64_t budget) {
    if (ctx.flavor() != Flavor::Lens) {
      throw Error(ErrorCode::FlavorForbidden, "band moves exist only in lens spaces");
    }
    SuiteReport        report;
    std::ostringstream out;
    out << ctx.header() << '\n';
    for (int sign : {1, -1}) {
      for (auto const& cert : band_commutations(ctx.n(), *ctx.p(), sign)) {
        auto const eq = monoid_equal(cert.lhs, cert.rhs, budget);
        Tally      t;
        record(t, eq);
        report.checked += t.checked;
        report.failures += t.failures;
        report.undecided += t.undecided;
        out << "band sign=" << (sign > 0 ? '+' : '-') << " " << cert.name << " lhs='"
            << render(cert.lhs) << "' rhs='" << render(cert.rhs) << "' "
            << (eq.equal() ? "ok" : "FAIL(" + eq.witness + ")") << '\n';
      }
    }
    out << "certificates=" << report.checked << " failures=" << report.failures
        << " undecided=" << report.undecided << '\n';
    report.text = out.str();
    return report;
  }

  std::optional<Instance> random_instance(Context const& ctx, Rng& rng) {
    // Cached per context: enumerating instances is the expensive part.
    static thread_local std::map<std::string, std::vector<Instance>> cache;
    auto& all = cache[ctx.header()];
    if (all.empty()) {
      for (auto const* rel : relation_catalog(ctx)) {
        auto inst = instances(*rel, ctx);
        all.insert(all.end(), inst.begin(), inst.end());
      }
    }
    if (all.empty()) {
      return std::nullopt;
    }
    return pick(all, rng);
  }

  MoveOutcome random_move(TiedWord const& w, Rng& rng) {
    auto const& ctx = w.context();
    int const   n = ctx.n(), g = ctx.g();
    auto const  f = ctx.flavor();

    using Attempt = std::function<std::optional<MoveOutcome>()>;
    std::vector<Attempt> attempts;

    if (n >= 2) {
      attempts.push_back([&]() -> std::optional<MoveOutcome> {
        int const i = rng.between(1, n - 1), e = rng.sign();
        return MoveOutcome{"conjugate " + render(sigma(i, e)), w, conjugate(w, sigma(i, e)),
                           conjugation_map(n, i)};
      });
    }
    if (f == Flavor::SolidTorus || f == Flavor::Lens || f == Flavor::UnlinkComplement) {
      attempts.push_back([&]() -> std::optional<MoveOutcome> {
        auto const a = loop(rng.between(1, g), rng.sign());
        return MoveOutcome{"loop-conjugate " + render(a), w, loop_conjugate(w, a),
                           shared_strands(n, n)};
      });
    }
    attempts.push_back([&]() -> std::optional<MoveOutcome> {
      int const e = rng.sign();
      return MoveOutcome{e > 0 ? "stabilize +" : "stabilize -", w, stabilize(w, e),
                         shared_strands(n, n + 1)};
    });
    attempts.push_back([&]() -> std::optional<MoveOutcome> {
      try {
        return MoveOutcome{"destabilize", w, destabilize(w), shared_strands(n, n - 1)};
      } catch (Error const&) {
        return std::nullopt;
      }
    });
    attempts.push_back([&]() -> std::optional<MoveOutcome> {
      auto const cut = static_cast<std::size_t>(rng.between(0, static_cast<int>(w.size())));
      TiedWord   w1(ctx, {w.letters().begin(), w.letters().begin() + cut});
      TiedWord   w2(ctx, {w.letters().begin() + cut, w.letters().end()});
      int const  e = rng.sign();
      return MoveOutcome{"lmove at " + std::to_string(cut) + (e > 0 ? " +" : " -"), w,
                         algebraic_l_move(w1, w2, e), shared_strands(n, n + 1)};
    });
    attempts.push_back([&]() -> std::optional<MoveOutcome> {
      auto const perm  = permutation(w);
      auto const cycle = cycle_of(perm, rng.between(1, n));
      if (cycle.size() < 2) {
        return std::nullopt;
      }
      int const i = pick(cycle, rng);
      int       j = pick(cycle, rng);
      if (i == j) {
        j = perm(i);
      }
      return MoveOutcome{"add-tie " + std::to_string(i) + " " + std::to_string(j), w,
                         add_tie(w, i, j).word, shared_strands(n, n)};
    });
    if (g > 0) {
      attempts.push_back([&]() -> std::optional<MoveOutcome> {
        auto const sem = scan_semantics(w);
        int const  k   = rng.between(1, g);
        std::vector<int> tied;
        for (int i = 1; i <= n; ++i) {
          if (sem.partition.same_class({true, k}, {false, i})) {
            tied.push_back(i);
          }
        }
        if (tied.empty()) {
          return std::nullopt;
        }
        int const i = pick(tied, rng);
        int const j = rng.coin() ? sem.perm(i) : pick(cycle_of(sem.perm, i), rng);
        return MoveOutcome{"add-fixed-tie " + std::to_string(k) + " " + std::to_string(j), w,
                           add_fixed_tie(w, k, j).word, shared_strands(n, n)};
      });
    }
    if (f == Flavor::Lens) {
      attempts.push_back([&]() -> std::optional<MoveOutcome> {
        int const e = rng.sign();
        return MoveOutcome{e > 0 ? "tbbm +" : "tbbm -", w, t_bbm(w, e), shared_strands(n, n + 1)};
      });
    }

    // Random starting point, then round robin until one applies;
    // stabilization always does.
    auto const start = static_cast<std::size_t>(rng.between(0, static_cast<int>(attempts.size()) - 1));
    for (std::size_t k = 0; k < attempts.size(); ++k) {
      if (auto out = attempts[(start + k) % attempts.size()]()) {
        return *out;
      }
    }
    throw std::logic_error("no move applies");
  }

  SuiteReport fuzz(FuzzOptions const& options) {
    Rng                rng(options.seed);
    std::ostringstream failures;
    int                shown = 0;
    std::map<std::string, Tally> tallies;
    std::vector<std::string>     order{"relation-insertion", "normal-form", "expansion",
                                   "move-invariance"};

    auto fail = [&](std::string const& property, TiedWord const& w, std::string const& detail) {
      ++tallies[property].failures;
      if (shown++ < 20) {
        failures << "failure property=" << property << " ctx='" << w.context().header()
                 << "' word='" << render(w) << "' " << detail << '\n';
      }
    };
    auto outcome = [&](std::string const& property, TiedWord const& w, EqualityResult const& r,
                       std::string const& detail) {
      ++tallies[property].checked;
      if (r.outcome == Equality::Undecided) {
        ++tallies[property].undecided;
      } else if (r.outcome == Equality::Differ) {
        fail(property, w, detail + " witness=" + r.witness);
      }
    };

    constexpr Flavor flavors[] = {Flavor::S3, Flavor::SolidTorus, Flavor::Lens,
                                  Flavor::Handlebody, Flavor::UnlinkComplement};
    WordShape shape;
    shape.max_length = options.max_length;

    for (int c = 0; c < options.cases; ++c) {
      auto const ctx = options.ctx ? *options.ctx
                                   : random_context(flavors[c % 5], rng, 3, 1, 5);
      auto const w = random_word(ctx, rng, shape);

      if (auto inst = random_instance(ctx, rng)) {
        auto const u = random_word(ctx, rng, shape), v = random_word(ctx, rng, shape);
        auto const l = compose(compose(u, inst->lhs(ctx)), v);
        auto const r = compose(compose(u, inst->rhs(ctx)), v);
        if (scan_semantics(l) != scan_semantics(r)) {
          ++tallies["relation-insertion"].checked;
          fail("relation-insertion", l, "instance=" + inst->render() + " scan differs");
        } else {
          outcome("relation-insertion", l, monoid_equal(l, r, options.budget),
                  "instance=" + inst->render());
        }
      }

      auto const nf  = normal_form(w);
      auto const rec = reconstruction(nf);
      if (normal_form(rec) != nf) {
        ++tallies["normal-form"].checked;
        fail("normal-form", w, "normal form not idempotent");
      } else {
        outcome("normal-form", w, monoid_equal(w, rec, options.budget), "reconstruction");
      }

      ++tallies["expansion"].checked;
      if (scan_semantics(expand_generalized(w)) != scan_semantics(w)) {
        fail("expansion", w, "scan differs");
      }

      auto const move = random_move(w, rng);
      auto const diff = closure_diff(closure_summary(move.before), closure_summary(move.after),
                                     move.map);
      ++tallies["move-invariance"].checked;
      if (!diff.empty()) {
        fail("move-invariance", w, "move='" + move.name + "' " + diff.front());
      }
    }

    SuiteReport        report;
    std::ostringstream out;
    out << "fuzz seed=" << options.seed << " cases=" << options.cases << '\n';
    for (auto const& p : order) {
      auto const& t = tallies[p];
      out << "property=" << p << " checked=" << t.checked << " failures=" << t.failures
          << " undecided=" << t.undecided << '\n';
      report.checked += t.checked;
      report.failures += t.failures;
      report.undecided += t.undecided;
    }
    out << failures.str();
    out << "result=" << (report.ok() ? "PASS" : "FAIL") << '\n';
    report.text = out.str();
    return report;
  }

}  // namespace tiedbraid
