#include "tiedbraid/rewriting.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace tiedbraid {

  namespace {

    constexpr Flavor kAll[]    = {Flavor::S3,
                                  Flavor::SolidTorus,
                                  Flavor::Lens,
                                  Flavor::Handlebody,
                                  Flavor::UnlinkComplement};
    constexpr Flavor kFixed[]  = {Flavor::SolidTorus,
                                  Flavor::Lens,
                                  Flavor::Handlebody,
                                  Flavor::UnlinkComplement};
    constexpr Flavor kManyFixed[] = {Flavor::Handlebody, Flavor::UnlinkComplement};

    std::vector<Flavor> all() {
      return {std::begin(kAll), std::end(kAll)};
    }
    std::vector<Flavor> with_fixed() {
      return {std::begin(kFixed), std::end(kFixed)};
    }
    std::vector<Flavor> many_fixed() {
      return {std::begin(kManyFixed), std::end(kManyFixed)};
    }

    using Letters = std::vector<Token>;

    Letters cat(std::initializer_list<Letters> parts) {
      Letters out;
      for (auto const& p : parts) {
        out.insert(out.end(), p.begin(), p.end());
      }
      return out;
    }

    // s_i s_{i-1} ... s_1 with the given exponent on every letter.
    Letters descending(int i, int e) {
      Letters out;
      for (int k = i; k >= 1; --k) {
        out.push_back(sigma(k, e));
      }
      return out;
    }

    Letters ascending(int i, int e) {
      Letters out;
      for (int k = 1; k <= i; ++k) {
        out.push_back(sigma(k, e));
      }
      return out;
    }

    int transpose(int i, int j) {  // s_i(j)
      return j == i ? i + 1 : j == i + 1 ? i : j;
    }

    auto always = [](Context const&, Args const&) { return true; };

    Relation rel(std::string id,
                 std::string pattern,
                 std::string guard_text,
                 std::vector<Param> params,
                 std::function<bool(Context const&, Args const&)> guard,
                 std::function<Letters(Args const&)> lhs,
                 std::function<Letters(Args const&)> rhs,
                 std::vector<Flavor> flavors) {
      return Relation{std::move(id),
                      std::move(pattern),
                      std::move(guard_text),
                      std::move(params),
                      std::move(guard),
                      std::move(lhs),
                      std::move(rhs),
                      std::move(flavors)};
    }

    std::vector<Relation> build_catalog() {
      using P = ParamKind;
      std::vector<Relation> c;

      // Braid group of the mixed braids.
      c.push_back(rel(
          "braid.comm", "s{i} s{j} = s{j} s{i}", "|i-j|>1",
          {{'i', P::SigmaIndex}, {'j', P::SigmaIndex}},
          [](auto const&, Args const& a) { return std::abs(a[0] - a[1]) > 1; },
          [](Args const& a) { return Letters{sigma(a[0]), sigma(a[1])}; },
          [](Args const& a) { return Letters{sigma(a[1]), sigma(a[0])}; },
          all()));
      c.push_back(rel(
          "braid.yb", "s{i} s{i+1} s{i} = s{i+1} s{i} s{i+1}", "i<=n-2",
          {{'i', P::SigmaIndex}}, always,
          [](Args const& a) { return Letters{sigma(a[0]), sigma(a[0] + 1), sigma(a[0])}; },
          [](Args const& a) {
            return Letters{sigma(a[0] + 1), sigma(a[0]), sigma(a[0] + 1)};
          },
          all()));
      c.push_back(rel(
          "braid.free", "s{i}^e s{i}^-e = 1", "",
          {{'i', P::SigmaIndex}, {'e', P::Sign}}, always,
          [](Args const& a) { return Letters{sigma(a[0], a[1]), sigma(a[0], -a[1])}; },
          [](Args const&) { return Letters{}; },
          all()));
      c.push_back(rel(
          "loop.free", "a{k}^e a{k}^-e = 1", "",
          {{'k', P::Fixed}, {'e', P::Sign}}, always,
          [](Args const& a) { return Letters{loop(a[0], a[1]), loop(a[0], -a[1])}; },
          [](Args const&) { return Letters{}; },
          with_fixed()));
      c.push_back(rel(
          "loop.comm.sigma", "a{k} s{i} = s{i} a{k}", "i>=2",
          {{'k', P::Fixed}, {'i', P::SigmaIndex}},
          [](auto const&, Args const& a) { return a[1] >= 2; },
          [](Args const& a) { return Letters{loop(a[0]), sigma(a[1])}; },
          [](Args const& a) { return Letters{sigma(a[1]), loop(a[0])}; },
          with_fixed()));
      c.push_back(rel(
          "loop.sigma.braid", "a{k} s1 a{k} s1 = s1 a{k} s1 a{k}", "",
          {{'k', P::Fixed}}, always,
          [](Args const& a) {
            return Letters{loop(a[0]), sigma(1), loop(a[0]), sigma(1)};
          },
          [](Args const& a) {
            return Letters{sigma(1), loop(a[0]), sigma(1), loop(a[0])};
          },
          with_fixed()));
      c.push_back(rel(
          "loop.comm.conj", "a{k} s1 a{r} S1 = s1 a{r} S1 a{k}", "r<k",
          {{'k', P::Fixed}, {'r', P::Fixed}},
          [](auto const&, Args const& a) { return a[1] < a[0]; },
          [](Args const& a) {
            return Letters{loop(a[0]), sigma(1), loop(a[1]), sigma(1, -1)};
          },
          [](Args const& a) {
            return Letters{sigma(1), loop(a[1]), sigma(1, -1), loop(a[0])};
          },
          with_fixed()));

      // Ties.
      c.push_back(rel(
          "tie.comm", "t{i} t{j} = t{j} t{i}", "i!=j",
          {{'i', P::SigmaIndex}, {'j', P::SigmaIndex}},
          [](auto const&, Args const& a) { return a[0] != a[1]; },
          [](Args const& a) { return Letters{tie(a[0]), tie(a[1])}; },
          [](Args const& a) { return Letters{tie(a[1]), tie(a[0])}; },
          all()));
      c.push_back(rel(
          "tie.sigma.same", "t{i} s{i} = s{i} t{i}", "",
          {{'i', P::SigmaIndex}}, always,
          [](Args const& a) { return Letters{tie(a[0]), sigma(a[0])}; },
          [](Args const& a) { return Letters{sigma(a[0]), tie(a[0])}; },
          all()));
      c.push_back(rel(
          "tie.comm.sigma", "t{i} s{j} = s{j} t{i}", "|i-j|>1",
          {{'i', P::SigmaIndex}, {'j', P::SigmaIndex}},
          [](auto const&, Args const& a) { return std::abs(a[0] - a[1]) > 1; },
          [](Args const& a) { return Letters{tie(a[0]), sigma(a[1])}; },
          [](Args const& a) { return Letters{sigma(a[1]), tie(a[0])}; },
          all()));
      c.push_back(rel(
          "tie.slide.adj", "t{i} s{j} s{i}^e = s{j} s{i}^e t{j}", "|i-j|=1",
          {{'i', P::SigmaIndex}, {'j', P::SigmaIndex}, {'e', P::Sign}},
          [](auto const&, Args const& a) { return std::abs(a[0] - a[1]) == 1; },
          [](Args const& a) {
            return Letters{tie(a[0]), sigma(a[1]), sigma(a[0], a[2])};
          },
          [](Args const& a) {
            return Letters{sigma(a[1]), sigma(a[0], a[2]), tie(a[1])};
          },
          all()));
      c.push_back(rel(
          "tie.triple.left", "t{i} t{j} s{i} = t{j} s{i} t{j}", "|i-j|=1",
          {{'i', P::SigmaIndex}, {'j', P::SigmaIndex}},
          [](auto const&, Args const& a) { return std::abs(a[0] - a[1]) == 1; },
          [](Args const& a) { return Letters{tie(a[0]), tie(a[1]), sigma(a[0])}; },
          [](Args const& a) { return Letters{tie(a[1]), sigma(a[0]), tie(a[1])}; },
          all()));
      c.push_back(rel(
          "tie.triple.right", "t{j} s{i} t{j} = s{i} t{i} t{j}", "|i-j|=1",
          {{'i', P::SigmaIndex}, {'j', P::SigmaIndex}},
          [](auto const&, Args const& a) { return std::abs(a[0] - a[1]) == 1; },
          [](Args const& a) { return Letters{tie(a[1]), sigma(a[0]), tie(a[1])}; },
          [](Args const& a) { return Letters{sigma(a[0]), tie(a[0]), tie(a[1])}; },
          all()));
      c.push_back(rel(
          "tie.idem", "t{i} t{i} = t{i}", "",
          {{'i', P::SigmaIndex}}, always,
          [](Args const& a) { return Letters{tie(a[0]), tie(a[0])}; },
          [](Args const& a) { return Letters{tie(a[0])}; },
          all()));

      // Loops against ties, and fixed ties.
      c.push_back(rel(
          "loop.comm.tie", "a{k} t{i} = t{i} a{k}", "",
          {{'k', P::Fixed}, {'i', P::SigmaIndex}}, always,
          [](Args const& a) { return Letters{loop(a[0]), tie(a[1])}; },
          [](Args const& a) { return Letters{tie(a[1]), loop(a[0])}; },
          with_fixed()));
      c.push_back(rel(
          "loop.comm.fixedtie", "a{k} p{j} = p{j} a{k}", "",
          {{'k', P::Fixed}, {'j', P::Fixed}}, always,
          [](Args const& a) { return Letters{loop(a[0]), fixed_tie(a[1])}; },
          [](Args const& a) { return Letters{fixed_tie(a[1]), loop(a[0])}; },
          with_fixed()));
      c.push_back(rel(
          "fixedtie.comm.tie", "t{i} p{k} = p{k} t{i}", "i>=2",
          {{'i', P::SigmaIndex}, {'k', P::Fixed}},
          [](auto const&, Args const& a) { return a[0] >= 2; },
          [](Args const& a) { return Letters{tie(a[0]), fixed_tie(a[1])}; },
          [](Args const& a) { return Letters{fixed_tie(a[1]), tie(a[0])}; },
          with_fixed()));
      c.push_back(rel(
          "fixedtie.tie1.left", "p{k} t1 = p{k} s1 p{k} S1", "",
          {{'k', P::Fixed}}, always,
          [](Args const& a) { return Letters{fixed_tie(a[0]), tie(1)}; },
          [](Args const& a) {
            return Letters{fixed_tie(a[0]), sigma(1), fixed_tie(a[0]), sigma(1, -1)};
          },
          with_fixed()));
      c.push_back(rel(
          "fixedtie.tie1.right", "p{k} s1 p{k} S1 = s1 p{k} S1 t1", "",
          {{'k', P::Fixed}}, always,
          [](Args const& a) {
            return Letters{fixed_tie(a[0]), sigma(1), fixed_tie(a[0]), sigma(1, -1)};
          },
          [](Args const& a) {
            return Letters{sigma(1), fixed_tie(a[0]), sigma(1, -1), tie(1)};
          },
          with_fixed()));
      c.push_back(rel(
          "fixedtie.tie1.swap", "p{k} s1 p{k} S1 = s1 p{k} S1 p{k}", "",
          {{'k', P::Fixed}}, always,
          [](Args const& a) {
            return Letters{fixed_tie(a[0]), sigma(1), fixed_tie(a[0]), sigma(1, -1)};
          },
          [](Args const& a) {
            return Letters{sigma(1), fixed_tie(a[0]), sigma(1, -1), fixed_tie(a[0])};
          },
          with_fixed()));
      c.push_back(rel(
          "fixedtie.comm", "p{j} p{k} = p{k} p{j}", "j!=k",
          {{'j', P::Fixed}, {'k', P::Fixed}},
          [](auto const&, Args const& a) { return a[0] != a[1]; },
          [](Args const& a) { return Letters{fixed_tie(a[0]), fixed_tie(a[1])}; },
          [](Args const& a) { return Letters{fixed_tie(a[1]), fixed_tie(a[0])}; },
          many_fixed()));
      c.push_back(rel(
          "fixedtie.idem", "p{k} p{k} = p{k}", "",
          {{'k', P::Fixed}}, always,
          [](Args const& a) { return Letters{fixed_tie(a[0]), fixed_tie(a[0])}; },
          [](Args const& a) { return Letters{fixed_tie(a[0])}; },
          with_fixed()));
      c.push_back(rel(
          "fixedtie.comm.sigma", "p{k} s{i} = s{i} p{k}", "i>=2",
          {{'k', P::Fixed}, {'i', P::SigmaIndex}},
          [](auto const&, Args const& a) { return a[1] >= 2; },
          [](Args const& a) { return Letters{fixed_tie(a[0]), sigma(a[1])}; },
          [](Args const& a) { return Letters{sigma(a[1]), fixed_tie(a[0])}; },
          with_fixed()));
      c.push_back(rel(
          "fixedtie.conj", "s{i}..s1 p{k} S1..S{i} = S{i}..S1 p{k} s1..s{i}", "",
          {{'k', P::Fixed}, {'i', P::SigmaIndex}}, always,
          [](Args const& a) {
            return cat({descending(a[1], 1), {fixed_tie(a[0])}, ascending(a[1], -1)});
          },
          [](Args const& a) {
            return cat({descending(a[1], -1), {fixed_tie(a[0])}, ascending(a[1], 1)});
          },
          with_fixed()));
      return c;
    }

    std::vector<Relation> build_derived() {
      using P = ParamKind;
      std::vector<Relation> c;

      c.push_back(rel(
          "gentie.slide.first", "s{i} t(i,j) = t(i+1,j) s{i}", "j>=i+2",
          {{'i', P::SigmaIndex}, {'j', P::Strand}},
          [](auto const&, Args const& a) { return a[1] >= a[0] + 2; },
          [](Args const& a) { return Letters{sigma(a[0]), gen_tie(a[0], a[1])}; },
          [](Args const& a) { return Letters{gen_tie(a[0] + 1, a[1]), sigma(a[0])}; },
          all()));
      c.push_back(rel(
          "gentie.slide.last", "s{j} t(i,j) = t(i,j+1) s{j}", "i<j",
          {{'i', P::Strand}, {'j', P::SigmaIndex}},
          [](auto const&, Args const& a) { return a[0] < a[1]; },
          [](Args const& a) { return Letters{sigma(a[1]), gen_tie(a[0], a[1])}; },
          [](Args const& a) { return Letters{gen_tie(a[0], a[1] + 1), sigma(a[1])}; },
          all()));
      c.push_back(rel(
          "gentie.slide.before", "s{i-1} t(i,j) = t(i-1,j) s{i-1}", "2<=i<j",
          {{'i', P::Strand}, {'j', P::Strand}},
          [](auto const&, Args const& a) { return 2 <= a[0] && a[0] < a[1]; },
          [](Args const& a) { return Letters{sigma(a[0] - 1), gen_tie(a[0], a[1])}; },
          [](Args const& a) { return Letters{gen_tie(a[0] - 1, a[1]), sigma(a[0] - 1)}; },
          all()));
      c.push_back(rel(
          "gentie.slide.inner", "s{j-1} t(i,j) = t(i,j-1) s{j-1}", "i<j-1",
          {{'i', P::Strand}, {'j', P::Strand}},
          [](auto const&, Args const& a) { return a[0] < a[1] - 1; },
          [](Args const& a) { return Letters{sigma(a[1] - 1), gen_tie(a[0], a[1])}; },
          [](Args const& a) { return Letters{gen_tie(a[0], a[1] - 1), sigma(a[1] - 1)}; },
          all()));
      auto distinct3 = [](auto const&, Args const& a) {
        return a[0] != a[1] && a[1] != a[2] && a[0] != a[2];
      };
      c.push_back(rel(
          "gentie.transitive.left", "t(i,k) t(k,m) = t(i,k) t(i,m)", "i,k,m distinct",
          {{'i', P::Strand}, {'k', P::Strand}, {'m', P::Strand}}, distinct3,
          [](Args const& a) { return Letters{gen_tie(a[0], a[1]), gen_tie(a[1], a[2])}; },
          [](Args const& a) { return Letters{gen_tie(a[0], a[1]), gen_tie(a[0], a[2])}; },
          all()));
      c.push_back(rel(
          "gentie.transitive.right", "t(i,k) t(i,m) = t(k,m) t(i,m)", "i,k,m distinct",
          {{'i', P::Strand}, {'k', P::Strand}, {'m', P::Strand}}, distinct3,
          [](Args const& a) { return Letters{gen_tie(a[0], a[1]), gen_tie(a[0], a[2])}; },
          [](Args const& a) { return Letters{gen_tie(a[1], a[2]), gen_tie(a[0], a[2])}; },
          all()));

      // Generalized fixed ties of the first fixed strand.
      c.push_back(rel(
          "fixedtie1.comm.tie", "p(1,j) t{i} = t{i} p(1,j)", "",
          {{'j', P::Strand}, {'i', P::SigmaIndex}}, always,
          [](Args const& a) { return Letters{gen_fixed_tie(1, a[0]), tie(a[1])}; },
          [](Args const& a) { return Letters{tie(a[1]), gen_fixed_tie(1, a[0])}; },
          with_fixed()));
      c.push_back(rel(
          "fixedtie1.slide", "p(1,j) s{i} = s{i} p(1,s_i(j))", "",
          {{'j', P::Strand}, {'i', P::SigmaIndex}}, always,
          [](Args const& a) { return Letters{gen_fixed_tie(1, a[0]), sigma(a[1])}; },
          [](Args const& a) {
            return Letters{sigma(a[1]), gen_fixed_tie(1, transpose(a[1], a[0]))};
          },
          with_fixed()));
      c.push_back(rel(
          "fixedtie1.transfer.left", "t(i,j) p(1,i) = p(1,j) p(1,i)", "i!=j",
          {{'i', P::Strand}, {'j', P::Strand}},
          [](auto const&, Args const& a) { return a[0] != a[1]; },
          [](Args const& a) { return Letters{gen_tie(a[0], a[1]), gen_fixed_tie(1, a[0])}; },
          [](Args const& a) {
            return Letters{gen_fixed_tie(1, a[1]), gen_fixed_tie(1, a[0])};
          },
          with_fixed()));
      c.push_back(rel(
          "fixedtie1.transfer.right", "p(1,j) p(1,i) = p(1,j) t(i,j)", "i!=j",
          {{'i', P::Strand}, {'j', P::Strand}},
          [](auto const&, Args const& a) { return a[0] != a[1]; },
          [](Args const& a) {
            return Letters{gen_fixed_tie(1, a[1]), gen_fixed_tie(1, a[0])};
          },
          [](Args const& a) { return Letters{gen_fixed_tie(1, a[1]), gen_tie(a[0], a[1])}; },
          with_fixed()));

      // Generalized fixed ties of any fixed strand.
      c.push_back(rel(
          "genfixedtie.comm.tie", "t{k} p(i,j) = p(i,j) t{k}", "",
          {{'k', P::SigmaIndex}, {'i', P::Fixed}, {'j', P::Strand}}, always,
          [](Args const& a) { return Letters{tie(a[0]), gen_fixed_tie(a[1], a[2])}; },
          [](Args const& a) { return Letters{gen_fixed_tie(a[1], a[2]), tie(a[0])}; },
          with_fixed()));
      c.push_back(rel(
          "genfixedtie.slide", "p(i,j) s{k} = s{k} p(i,s_k(j))", "",
          {{'i', P::Fixed}, {'j', P::Strand}, {'k', P::SigmaIndex}}, always,
          [](Args const& a) { return Letters{gen_fixed_tie(a[0], a[1]), sigma(a[2])}; },
          [](Args const& a) {
            return Letters{sigma(a[2]), gen_fixed_tie(a[0], transpose(a[2], a[1]))};
          },
          with_fixed()));
      c.push_back(rel(
          "genfixedtie.transfer.left", "t(i,j) p(k,i) = p(k,i) p(k,j)", "i!=j",
          {{'i', P::Strand}, {'j', P::Strand}, {'k', P::Fixed}},
          [](auto const&, Args const& a) { return a[0] != a[1]; },
          [](Args const& a) {
            return Letters{gen_tie(a[0], a[1]), gen_fixed_tie(a[2], a[0])};
          },
          [](Args const& a) {
            return Letters{gen_fixed_tie(a[2], a[0]), gen_fixed_tie(a[2], a[1])};
          },
          with_fixed()));
      c.push_back(rel(
          "genfixedtie.transfer.right", "p(k,i) p(k,j) = p(k,j) t(i,j)", "i!=j",
          {{'i', P::Strand}, {'j', P::Strand}, {'k', P::Fixed}},
          [](auto const&, Args const& a) { return a[0] != a[1]; },
          [](Args const& a) {
            return Letters{gen_fixed_tie(a[2], a[0]), gen_fixed_tie(a[2], a[1])};
          },
          [](Args const& a) {
            return Letters{gen_fixed_tie(a[2], a[1]), gen_tie(a[0], a[1])};
          },
          with_fixed()));
      return c;
    }

    std::vector<Relation> const& catalog() {
      static std::vector<Relation> const c = build_catalog();
      return c;
    }

    std::vector<Relation> const& derived() {
      static std::vector<Relation> const c = build_derived();
      return c;
    }

    std::pair<int, int> range(ParamKind kind, Context const& ctx) {
      switch (kind) {
        case ParamKind::SigmaIndex: return {1, ctx.n() - 1};
        case ParamKind::Strand: return {1, ctx.n()};
        case ParamKind::Fixed: return {1, ctx.g()};
        case ParamKind::Sign: return {-1, 1};
      }
      return {1, 0};
    }

    std::vector<Relation const*> gated(std::vector<Relation> const& all,
                                       Context const&               ctx) {
      std::vector<Relation const*> out;
      for (auto const& r : all) {
        if (!r.admits(ctx.flavor())) {
          continue;
        }
        for (auto const& inst : instances(r, ctx)) {
          if (!scan_sound(inst, ctx)) {
            throw std::logic_error("relation " + inst.render()
                                   + " fails the semantic self-check");
          }
        }
        out.push_back(&r);
      }
      return out;
    }
  }  // namespace

  bool Relation::admits(Flavor f) const {
    return std::find(flavors.begin(), flavors.end(), f) != flavors.end();
  }

  TiedWord Instance::lhs(Context const& ctx) const {
    return TiedWord(ctx, relation->lhs(args));
  }

  TiedWord Instance::rhs(Context const& ctx) const {
    return TiedWord(ctx, relation->rhs(args));
  }

  std::string Instance::render() const {
    std::string out = relation->id + "[";
    for (std::size_t i = 0; i < args.size(); ++i) {
      out += (i ? "," : "");
      out += std::string(1, relation->params[i].name) + "=" + std::to_string(args[i]);
    }
    return out + "]";
  }

  std::vector<Relation const*> relation_catalog(Context const& ctx) {
    return gated(catalog(), ctx);
  }

  std::vector<Relation const*> derived_identities(Context const& ctx) {
    return gated(derived(), ctx);
  }

  Relation const& find_relation(std::string_view id) {
    for (auto const* list : {&catalog(), &derived()}) {
      for (auto const& r : *list) {
        if (r.id == id) {
          return r;
        }
      }
    }
    throw Error(ErrorCode::BadInstantiation, "no relation '" + std::string(id) + "'");
  }

  bool is_legal(Relation const& rel, Args const& args, Context const& ctx) {
    if (args.size() != rel.params.size() || !rel.admits(ctx.flavor())) {
      return false;
    }
    for (std::size_t i = 0; i < args.size(); ++i) {
      auto [lo, hi] = range(rel.params[i].kind, ctx);
      if (args[i] < lo || args[i] > hi
          || (rel.params[i].kind == ParamKind::Sign && args[i] == 0)) {
        return false;
      }
    }
    if (!rel.guard(ctx, args)) {
      return false;
    }
    try {
      return validate(TiedWord(ctx, rel.lhs(args))).empty()
             && validate(TiedWord(ctx, rel.rhs(args))).empty();
    } catch (Error const&) {
      return false;
    }
  }

  void check_instantiation(Relation const& rel, Args const& args, Context const& ctx) {
    if (!is_legal(rel, args, ctx)) {
      Instance inst{&rel, args};
      throw Error(ErrorCode::BadInstantiation,
                  (args.size() == rel.params.size() ? inst.render() : rel.id)
                      + " is not legal in " + ctx.header());
    }
  }

  std::vector<Instance> instances(Relation const& rel, Context const& ctx) {
    std::vector<Instance> out;
    Args                  args(rel.params.size());
    // Odometer over the parameter ranges.
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
      if (i == args.size()) {
        if (is_legal(rel, args, ctx)) {
          out.push_back({&rel, args});
        }
        return;
      }
      auto [lo, hi] = range(rel.params[i].kind, ctx);
      for (int v = lo; v <= hi; ++v) {
        if (rel.params[i].kind == ParamKind::Sign && v == 0) {
          continue;
        }
        args[i] = v;
        rec(i + 1);
      }
    };
    rec(0);
    return out;
  }

  bool scan_sound(Instance const& inst, Context const& ctx) {
    return scan_semantics(inst.lhs(ctx)) == scan_semantics(inst.rhs(ctx));
  }

  TiedWord apply_relation(TiedWord const&  w,
                          std::size_t      at,
                          std::string_view relation_id,
                          Args const&      args,
                          Direction        dir) {
    auto const& rel = find_relation(relation_id);
    check_instantiation(rel, args, w.context());
    auto from = dir == Direction::LeftToRight ? rel.lhs(args) : rel.rhs(args);
    auto to   = dir == Direction::LeftToRight ? rel.rhs(args) : rel.lhs(args);

    auto const& letters = w.letters();
    if (at < 1 || at - 1 + from.size() > letters.size()
        || !std::equal(from.begin(), from.end(), letters.begin() + (at - 1))) {
      throw Error(ErrorCode::NoMatch,
                  Instance{&rel, args}.render() + " does not match at letter "
                      + std::to_string(at) + " of '" + render(w) + "'");
    }
    std::vector<Token> out(letters.begin(), letters.begin() + (at - 1));
    out.insert(out.end(), to.begin(), to.end());
    out.insert(out.end(), letters.begin() + (at - 1) + from.size(), letters.end());
    return TiedWord(w.context(), std::move(out));
  }

  NormalForm normal_form(TiedWord const& w) {
    auto               sem = scan_semantics(w);
    std::vector<Token> braid;
    for (auto const& t : w.letters()) {
      if (!t.is_tie()) {
        braid.push_back(t);
      }
    }
    return NormalForm{TiedWord(w.context(), std::move(braid)),
                      sem.partition.relabel(sem.perm)};
  }

  TiedWord reconstruction(NormalForm const& nf) {
    auto letters = nf.braid_part.letters();
    for (auto const& cls : nf.tie_part.classes()) {
      auto first_moving = std::find_if(cls.begin(), cls.end(), [](Element const& e) {
        return !e.fixed;
      });
      if (first_moving == cls.end()) {
        if (cls.size() > 1) {
          throw std::logic_error("tie class of fixed strands only: "
                                 + render(nf.tie_part));
        }
        continue;
      }
      int const least = first_moving->index;
      for (auto const& e : cls) {
        if (e.fixed) {
          letters.push_back(least == 1 ? fixed_tie(e.index)
                                       : gen_fixed_tie(e.index, least));
        } else if (e.index != least) {
          letters.push_back(e.index == least + 1 ? tie(least) : gen_tie(least, e.index));
        }
      }
    }
    return TiedWord(nf.braid_part.context(), std::move(letters));
  }

  int tie_length(Token const& t) {
    switch (t.kind) {
      case TokenKind::Tie: return 1;
      case TokenKind::GenTie: return std::abs(t.second - t.first);
      default:
        throw Error(ErrorCode::NotATie, "'" + render(t) + "' is not a tie between moving strands");
    }
  }

}  // namespace tiedbraid
