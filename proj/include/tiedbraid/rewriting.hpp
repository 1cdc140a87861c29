#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "tiedbraid/semantics.hpp"
#include "tiedbraid/word.hpp"

namespace tiedbraid {

  // Range an index parameter of a relation pattern runs over.
  enum class ParamKind {
    SigmaIndex,  // 1 .. n-1
    Strand,      // 1 .. n
    Fixed,       // 1 .. g
    Sign,        // -1, +1
  };

  struct Param {
    char      name;
    ParamKind kind;
  };

  using Args = std::vector<int>;

  // A relation L = R with index parameters.  An instantiation is legal when
  // `guard` holds and every letter of both sides is in range for the context.
  struct Relation {
    std::string                                          id;
    std::string                                          pattern;  // "t{i} t{i} = t{i}"
    std::string                                          guard_text;
    std::vector<Param>                                   params;
    std::function<bool(Context const&, Args const&)>     guard;
    std::function<std::vector<Token>(Args const&)>       lhs;
    std::function<std::vector<Token>(Args const&)>       rhs;
    std::vector<Flavor>                                  flavors;

    bool admits(Flavor f) const;
  };

  struct Instance {
    Relation const* relation;
    Args            args;

    TiedWord lhs(Context const& ctx) const;
    TiedWord rhs(Context const& ctx) const;
    std::string render() const;  // "tie.idem[i=1]"
  };

  // Defining relations of the tied mixed braid monoid admitted by ctx's
  // flavor, each self-checked against scan_semantics for ctx.
  std::vector<Relation const*> relation_catalog(Context const& ctx);

  // Identities that follow from the defining relations: sliding generalized
  // ties and generalized fixed ties past crossings, and the transitivity
  // identities for ties.
  std::vector<Relation const*> derived_identities(Context const& ctx);

  Relation const& find_relation(std::string_view id);

  // Throws BadInstantiation when the arguments do not fit the relation or ctx.
  void check_instantiation(Relation const& rel, Args const& args, Context const& ctx);
  bool is_legal(Relation const& rel, Args const& args, Context const& ctx);

  std::vector<Instance> instances(Relation const& rel, Context const& ctx);

  // Semantic self-check of one instantiation: scan_semantics of both sides.
  bool scan_sound(Instance const& inst, Context const& ctx);

  enum class Direction { LeftToRight, RightToLeft };

  // Replaces the occurrence of one side starting at 1-based `at` by the other.
  // An empty side matches anywhere (insertion before letter `at`; at may be
  // size()+1).  Throws NoMatch or BadInstantiation.
  TiedWord apply_relation(TiedWord const&  w,
                          std::size_t      at,
                          std::string_view relation_id,
                          Args const&      args,
                          Direction        dir);

  struct NormalForm {
    TiedWord     braid_part;  // sigma and loop letters only
    TiePartition tie_part;    // moving strands labelled by bottom position

    bool operator==(NormalForm const&) const = default;
  };

  NormalForm normal_form(TiedWord const& w);
  // braid_part followed by one generalized tie per non-least element of each
  // class, chained to the least moving element of the class.
  TiedWord reconstruction(NormalForm const& nf);

  // |i - j| for GenTie(i, j); 1 for Tie(i).  Throws NotATie otherwise.
  int tie_length(Token const& t);

}  // namespace tiedbraid
