#pragma once

#include <string>
#include <vector>

#include "tiedbraid/semantics.hpp"
#include "tiedbraid/word.hpp"

namespace tiedbraid {

  // Markov conjugation by a crossing: gen . w . gen^-1.
  TiedWord conjugate(TiedWord const& w, Token const& gen);

  // a_k^e . w . a_k^-e.  Allowed in the solid torus, lens spaces and the
  // unlink complement; FlavorForbidden elsewhere.
  TiedWord loop_conjugate(TiedWord const& w, Token const& gen);

  // w . s_n^sign in the context with n+1 moving strands.
  TiedWord stabilize(TiedWord const& w, int sign);

  // Inverse of stabilize: w must end in s_{n-1}^{+-1} and nothing else may
  // touch strand n.  Throws NotDestabilizable.
  TiedWord destabilize(TiedWord const& w);

  // w1 . s_n^sign . w2 on n+1 strands.
  TiedWord algebraic_l_move(TiedWord const& w1, TiedWord const& w2, int sign);

  enum class TieCriterion {
    Direct,     // the strand starting at i ends at j
    SameCycle,  // i and j only share a closure component
  };

  char const* to_string(TieCriterion c) noexcept;

  struct TieInsertion {
    TiedWord     word;
    TieCriterion criterion;
  };

  // w . t(i,j) when i and j lie on one closure component, else
  // TieWouldBeEssential.
  TieInsertion add_tie(TiedWord const& w, int i, int j);

  // p(k,j) . w when some strand i already tied to F_k runs into j, else
  // NoJustifyingFixedTie.
  TieInsertion add_fixed_tie(TiedWord const& w, int k, int j);

  // Tied braid band move on the last strand at the bottom, lens spaces only:
  // every a_1^e is replaced by (S_1..S_{n-1} s_n^2 s_{n-1}..s_1 a_1)^e and
  // a'_n^p s_n^sign is appended, with a'_n = s_n..s_1 a_1 S_1..S_n.
  TiedWord t_bbm(TiedWord const& w, int sign);

  // a'_n^p s_n^sign in the lens context (g=1, n+1, p).
  TiedWord band_tail(int n, int p, int sign);

  struct Certificate {
    std::string name;
    TiedWord    lhs;
    TiedWord    rhs;
  };

  // The ways ties commute past band_tail(n, p, sign); each pair is equal in
  // the tied monoid.
  std::vector<Certificate> band_commutations(int n, int p, int sign);

  // Correspondence between the strands of a word after a move and before
  // it: map[x-1] is the top position, before the move, of the strand that
  // starts at top position x afterwards; 0 for strands the move created.
  using StrandMap = std::vector<int>;

  // x -> x on the strands both contexts have.
  StrandMap shared_strands(int before_n, int after_n);
  // Conjugation by s_i^{+-1}: x -> s_i(x).
  StrandMap conjugation_map(int n, int i);

  // Differences between the closure before a move and after it, matching
  // components through `map`.  Windings are compared as stored (already
  // reduced mod p in lens spaces).  Empty when the move preserved the
  // closure invariants.
  std::vector<std::string> closure_diff(ClosureSummary const& before,
                                        ClosureSummary const& after,
                                        StrandMap const&      map,
                                        bool                  compare_winding = true);

  struct MoveOutcome {
    std::string name;  // "conjugate s2", "tbbm -", ...
    TiedWord    before;
    TiedWord    after;
    StrandMap   map;
    std::string note = {};  // tie criterion for the tie moves
  };

  // Applies a move by name to the words of a document:
  //
  //   conjugate <i> <sign>       loop-conjugate <k> <sign>
  //   stabilize <sign>           destabilize
  //   lmove <sign>               (two words w1, w2; before = w1 w2)
  //   add-tie <i> <j>            add-fixed-tie <k> <j>
  //   tbbm <sign>
  //
  // Throws BadInstantiation for an unknown name or wrong arity, and the
  // errors of the move itself.
  MoveOutcome apply_move(std::string_view            name,
                         std::vector<TiedWord> const& words,
                         std::vector<int> const&      args);

}  // namespace tiedbraid
