#include "tiedbraid/moves.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace tiedbraid {

  namespace {
    std::vector<Token> band_prefix(int n) {  // S_1..S_{n-1} s_n s_n s_{n-1}..s_1
      std::vector<Token> out;
      for (int i = 1; i <= n - 1; ++i) {
        out.push_back(sigma(i, -1));
      }
      out.push_back(sigma(n));
      out.push_back(sigma(n));
      for (int i = n - 1; i >= 1; --i) {
        out.push_back(sigma(i));
      }
      return out;
    }

    std::vector<Token> loop_prime(int n) {  // s_n..s_1 a_1 S_1..S_n
      std::vector<Token> out;
      for (int i = n; i >= 1; --i) {
        out.push_back(sigma(i));
      }
      out.push_back(loop(1));
      for (int i = 1; i <= n; ++i) {
        out.push_back(sigma(i, -1));
      }
      return out;
    }

    int checked_sign(int sign) {
      if (sign != 1 && sign != -1) {
        throw Error(ErrorCode::BadInstantiation, "sign must be +1 or -1");
      }
      return sign;
    }

    // Components labelled by their least kept strand, after renaming strand
    // ids through `rename` (0 drops the strand).
    struct Projection {
      std::set<std::vector<int>>               components;
      std::set<std::vector<int>>               classes;  // fixed k -> -k
      std::map<int, std::vector<std::int64_t>> winding;
      std::vector<std::string>                 problems;
    };

    Projection project(ClosureSummary const& s, std::vector<int> const& rename, char const* side) {
      Projection       out;
      std::vector<int> label(s.components.size(), 0);
      for (std::size_t c = 0; c < s.components.size(); ++c) {
        std::vector<int> kept;
        for (int m : s.components[c]) {
          if (rename[m - 1] != 0) {
            kept.push_back(rename[m - 1]);
          }
        }
        std::sort(kept.begin(), kept.end());
        if (kept.empty()) {
          out.problems.push_back(std::string(side) + " component " + std::to_string(c + 1)
                                 + " has no matching strand");
          continue;
        }
        label[c]                  = kept.front();
        out.winding[kept.front()] = s.component_winding[c];
        out.components.insert(std::move(kept));
      }
      for (auto const& cls : s.tie_classes) {
        std::vector<int> members;
        for (auto const& e : cls) {
          if (e.fixed) {
            members.push_back(-e.index);
          } else if (label[e.index - 1] != 0) {
            members.push_back(label[e.index - 1]);
          }
        }
        std::sort(members.begin(), members.end());
        out.classes.insert(std::move(members));
      }
      return out;
    }
  }  // namespace

  char const* to_string(TieCriterion c) noexcept {
    return c == TieCriterion::Direct ? "direct" : "same-cycle";
  }

  TiedWord conjugate(TiedWord const& w, Token const& gen) {
    if (gen.kind != TokenKind::Sigma) {
      throw Error(ErrorCode::BadInstantiation, "conjugate needs a crossing, got '" + render(gen) + "'");
    }
    TiedWord g(w.context(), {gen});
    require_valid(g);
    return compose(compose(g, w), TiedWord(w.context(), {gen.inverse()}));
  }

  TiedWord loop_conjugate(TiedWord const& w, Token const& gen) {
    auto const f = w.context().flavor();
    if (f == Flavor::S3 || f == Flavor::Handlebody) {
      throw Error(ErrorCode::FlavorForbidden,
                  std::string("loop conjugation is not a move in ") + short_name(f));
    }
    if (gen.kind != TokenKind::Loop) {
      throw Error(ErrorCode::BadInstantiation, "loop_conjugate needs a loop, got '" + render(gen) + "'");
    }
    TiedWord g(w.context(), {gen});
    require_valid(g);
    return compose(compose(g, w), TiedWord(w.context(), {gen.inverse()}));
  }

  TiedWord stabilize(TiedWord const& w, int sign) {
    require_valid(w);
    int const n       = w.context().n();
    auto      letters = w.letters();
    letters.push_back(sigma(n, checked_sign(sign)));
    return TiedWord(w.context().with_n(n + 1), std::move(letters));
  }

  TiedWord destabilize(TiedWord const& w) {
    require_valid(w);
    int const n = w.context().n();
    auto      fail = [&](std::string const& why) {
      return Error(ErrorCode::NotDestabilizable, "'" + render(w) + "': " + why);
    };
    if (n < 2 || w.empty() || w.letters().back().kind != TokenKind::Sigma
        || w.letters().back().first != n - 1) {
      throw fail("does not end in s" + std::to_string(n - 1) + "^{+-1}");
    }
    std::vector<Token> rest(w.letters().begin(), w.letters().end() - 1);
    for (auto const& t : rest) {
      bool touches = false;
      switch (t.kind) {
        case TokenKind::Sigma:
        case TokenKind::Tie: touches = t.first == n - 1; break;
        case TokenKind::GenTie:
        case TokenKind::GenFixedTie: touches = t.second == n; break;
        default: break;
      }
      if (touches) {
        throw fail("'" + render(t) + "' touches strand " + std::to_string(n));
      }
    }
    return TiedWord(w.context().with_n(n - 1), std::move(rest));
  }

  TiedWord algebraic_l_move(TiedWord const& w1, TiedWord const& w2, int sign) {
    if (!(w1.context() == w2.context())) {
      throw Error(ErrorCode::ContextMismatch,
                  w1.context().header() + " vs " + w2.context().header());
    }
    require_valid(w1);
    require_valid(w2);
    int const n       = w1.context().n();
    auto      letters = w1.letters();
    letters.push_back(sigma(n, checked_sign(sign)));
    letters.insert(letters.end(), w2.letters().begin(), w2.letters().end());
    return TiedWord(w1.context().with_n(n + 1), std::move(letters));
  }

  TieInsertion add_tie(TiedWord const& w, int i, int j) {
    require_valid(w);
    int const n = w.context().n();
    if (i == j) {
      throw Error(ErrorCode::MalformedIndexPair, "a tie needs two distinct strands");
    }
    if (i < 1 || j < 1 || i > n || j > n) {
      throw Error(ErrorCode::IndexOutOfRange, "strand out of range for " + w.context().header());
    }
    auto const   perm = permutation(w);
    TieCriterion criterion;
    if (perm(i) == j || perm(j) == i) {
      criterion = TieCriterion::Direct;
    } else {
      bool same = false;
      for (auto const& cycle : perm.cycles()) {
        auto has = [&](int x) { return std::find(cycle.begin(), cycle.end(), x) != cycle.end(); };
        same = same || (has(i) && has(j));
      }
      if (!same) {
        throw Error(ErrorCode::TieWouldBeEssential,
                    "strands " + std::to_string(i) + " and " + std::to_string(j)
                        + " lie on different components");
      }
      criterion = TieCriterion::SameCycle;
    }
    auto letters = w.letters();
    letters.push_back(gen_tie(i, j));
    return {TiedWord(w.context(), std::move(letters)), criterion};
  }

  TieInsertion add_fixed_tie(TiedWord const& w, int k, int j) {
    require_valid(w);
    int const g = w.context().g(), n = w.context().n();
    if (g == 0) {
      throw Error(ErrorCode::AlphabetForbidden, "no fixed strands in s3");
    }
    if (k < 1 || k > g || j < 1 || j > n) {
      throw Error(ErrorCode::IndexOutOfRange, "index out of range for " + w.context().header());
    }
    auto const sem = scan_semantics(w);
    std::optional<TieCriterion> criterion;
    for (int i = 1; i <= n && criterion != TieCriterion::Direct; ++i) {
      if (!sem.partition.same_class({true, k}, {false, i})) {
        continue;
      }
      if (sem.perm(i) == j) {
        criterion = TieCriterion::Direct;
      } else {
        for (auto const& cycle : sem.perm.cycles()) {
          auto has = [&](int x) { return std::find(cycle.begin(), cycle.end(), x) != cycle.end(); };
          if (has(i) && has(j)) {
            criterion = TieCriterion::SameCycle;
          }
        }
      }
    }
    if (!criterion) {
      throw Error(ErrorCode::NoJustifyingFixedTie,
                  "no strand tied to F" + std::to_string(k) + " runs into strand "
                      + std::to_string(j));
    }
    std::vector<Token> letters{j == 1 ? fixed_tie(k) : gen_fixed_tie(k, j)};
    letters.insert(letters.end(), w.letters().begin(), w.letters().end());
    return {TiedWord(w.context(), std::move(letters)), *criterion};
  }

  TiedWord band_tail(int n, int p, int sign) {
    auto const         ctx = Context::make(1, n + 1, Flavor::Lens, p);
    std::vector<Token> out;
    auto const         lp = loop_prime(n);
    for (int r = 0; r < p; ++r) {
      out.insert(out.end(), lp.begin(), lp.end());
    }
    out.push_back(sigma(n, checked_sign(sign)));
    return TiedWord(ctx, std::move(out));
  }

  TiedWord t_bbm(TiedWord const& w, int sign) {
    auto const& ctx = w.context();
    if (ctx.flavor() != Flavor::Lens) {
      throw Error(ErrorCode::FlavorForbidden,
                  std::string("band moves exist only in lens spaces, not ") + short_name(ctx.flavor()));
    }
    require_valid(w);
    int const          n      = ctx.n();
    auto const         prefix = band_prefix(n);
    std::vector<Token> out;
    for (auto const& t : w.letters()) {
      if (t.kind != TokenKind::Loop) {
        out.push_back(t);
      } else if (t.exponent > 0) {
        out.insert(out.end(), prefix.begin(), prefix.end());
        out.push_back(loop(1));
      } else {
        out.push_back(loop(1, -1));
        for (auto it = prefix.rbegin(); it != prefix.rend(); ++it) {
          out.push_back(it->inverse());
        }
      }
    }
    auto const tail = band_tail(n, *ctx.p(), sign);
    out.insert(out.end(), tail.letters().begin(), tail.letters().end());
    return TiedWord(tail.context(), std::move(out));
  }

  std::vector<Certificate> band_commutations(int n, int p, int sign) {
    auto const tail = band_tail(n, p, sign);
    auto const ctx  = tail.context();
    auto       fixed = [](int j) { return j == 1 ? fixed_tie(1) : gen_fixed_tie(1, j); };
    auto       before = [&](Token t) { return compose(TiedWord(ctx, {t}), tail); };
    auto       after  = [&](Token t) { return compose(tail, TiedWord(ctx, {t})); };

    std::vector<Certificate> out;
    for (int i = 1; i <= n - 2; ++i) {
      out.push_back({"fixed-tie f" + std::to_string(i), before(fixed(i)), after(fixed(i))});
    }
    out.push_back({"fixed-tie f" + std::to_string(n), before(fixed(n)), after(fixed(n + 1))});
    for (int i = 1; i <= n - 2; ++i) {
      out.push_back({"tie t" + std::to_string(i), before(tie(i)), after(tie(i))});
    }
    if (n >= 2) {
      out.push_back({"tie t" + std::to_string(n - 1), before(tie(n - 1)),
                     after(gen_tie(n - 1, n + 1))});
    }
    return out;
  }

  StrandMap shared_strands(int before_n, int after_n) {
    StrandMap map(after_n, 0);
    for (int x = 1; x <= std::min(before_n, after_n); ++x) {
      map[x - 1] = x;
    }
    return map;
  }

  StrandMap conjugation_map(int n, int i) {
    StrandMap map(n);
    for (int x = 1; x <= n; ++x) {
      map[x - 1] = x == i ? i + 1 : x == i + 1 ? i : x;
    }
    return map;
  }

  std::vector<std::string> closure_diff(ClosureSummary const& before,
                                        ClosureSummary const& after,
                                        StrandMap const&      map,
                                        bool                  compare_winding) {
    if (map.size() != static_cast<std::size_t>(after.n)) {
      throw std::invalid_argument("closure_diff: strand map has the wrong size");
    }
    // Before the move keep exactly the strands the map reaches.
    std::vector<int> keep(before.n, 0);
    for (int x : map) {
      if (x < 0 || x > before.n) {
        throw std::invalid_argument("closure_diff: strand map out of range");
      }
      if (x != 0) {
        keep[x - 1] = x;
      }
    }
    auto const a = project(before, keep, "before:");
    auto const b = project(after, map, "after:");

    std::vector<std::string> out = a.problems;
    out.insert(out.end(), b.problems.begin(), b.problems.end());
    if (before.g != after.g) {
      out.push_back("fixed strand count changed");
      return out;
    }
    if (a.components != b.components) {
      out.push_back("components changed: " + std::to_string(before.components.size())
                    + " -> " + std::to_string(after.components.size()));
      return out;
    }
    if (a.classes != b.classes) {
      out.push_back("tie classes changed: " + std::to_string(before.tie_classes.size())
                    + " -> " + std::to_string(after.tie_classes.size()));
    }
    if (compare_winding && a.winding != b.winding) {
      out.push_back("component winding changed");
    }
    return out;
  }

  MoveOutcome apply_move(std::string_view             name,
                         std::vector<TiedWord> const& words,
                         std::vector<int> const&      args) {
    auto arity = [&](std::size_t nwords, std::size_t nargs) {
      if (words.size() != nwords || args.size() != nargs) {
        throw Error(ErrorCode::BadInstantiation,
                    std::string(name) + " takes " + std::to_string(nwords) + " word(s) and "
                        + std::to_string(nargs) + " argument(s)");
      }
    };
    auto sign = [&](std::size_t k) {
      if (args[k] != 1 && args[k] != -1) {
        throw Error(ErrorCode::BadInstantiation, "sign must be +1 or -1");
      }
      return args[k];
    };
    auto signed_name = [&](int e) {
      return std::string(name) + (e > 0 ? " +" : " -");
    };

    if (name == "lmove") {
      arity(2, 1);
      int const e = sign(0);
      int const n = words[0].context().n();
      return {signed_name(e), compose(words[0], words[1]),
              algebraic_l_move(words[0], words[1], e), shared_strands(n, n + 1)};
    }
    if (name == "conjugate" || name == "loop-conjugate" || name == "stabilize"
        || name == "destabilize" || name == "add-tie" || name == "add-fixed-tie"
        || name == "tbbm") {
      if (words.size() != 1) {
        throw Error(ErrorCode::BadInstantiation, std::string(name) + " takes one word");
      }
    } else {
      throw Error(ErrorCode::BadInstantiation, "unknown move " + std::string(name));
    }

    auto const& w = words.front();
    int const   n = w.context().n();
    if (name == "conjugate") {
      arity(1, 2);
      auto const gen = sigma(args[0], sign(1));
      return {"conjugate " + render(gen), w, conjugate(w, gen), conjugation_map(n, args[0])};
    }
    if (name == "loop-conjugate") {
      arity(1, 2);
      auto const gen = loop(args[0], sign(1));
      return {"loop-conjugate " + render(gen), w, loop_conjugate(w, gen), shared_strands(n, n)};
    }
    if (name == "stabilize") {
      arity(1, 1);
      int const e = sign(0);
      return {signed_name(e), w, stabilize(w, e), shared_strands(n, n + 1)};
    }
    if (name == "destabilize") {
      arity(1, 0);
      return {"destabilize", w, destabilize(w), shared_strands(n, n - 1)};
    }
    if (name == "tbbm") {
      arity(1, 1);
      int const e = sign(0);
      return {signed_name(e), w, t_bbm(w, e), shared_strands(n, n + 1)};
    }
    arity(1, 2);
    auto const ins = name == "add-tie" ? add_tie(w, args[0], args[1])
                                       : add_fixed_tie(w, args[0], args[1]);
    return {std::string(name) + " " + std::to_string(args[0]) + " " + std::to_string(args[1]), w,
            ins.word, shared_strands(n, n), to_string(ins.criterion)};
  }

}  // namespace tiedbraid
