#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tiedbraid/semantics.hpp"
#include "tiedbraid/word.hpp"

namespace tiedbraid {

  inline constexpr std::uint64_t kDefaultBudget = 1'000'000;

  enum class Verdict { Trivial, Nontrivial, BudgetExhausted };

  struct HandleReduction {
    BraidWord     reduced;
    Verdict       verdict;
    std::uint64_t steps;  // handle reductions performed
  };

  // Dehornoy handle reduction, always reducing the handle whose closing
  // letter is leftmost.  A word with no handle left is trivial iff it is
  // empty.  Stops with BudgetExhausted after `budget` reductions.
  HandleReduction handle_reduce(BraidWord const& b, std::uint64_t budget = kDefaultBudget);

  enum class Equality { Equal, Differ, Undecided };

  struct EqualityResult {
    Equality    outcome;
    // For Differ: the invariant that separates the words ("permutation",
    // "exponent-sum(s)", "exponent-sum(a2)", "braid", "partition").
    // For Undecided: "budget".
    std::string witness;

    bool equal() const noexcept {
      return outcome == Equality::Equal;
    }
  };

  // Equality in the mixed braid group of two tie-free words.
  // Throws ContextMismatch, TieTokenPresent.
  EqualityResult braid_equal(TiedWord const& w1,
                             TiedWord const& w2,
                             std::uint64_t   budget = kDefaultBudget);

  // Equality in the tied monoid: equal braid parts and equal tie partitions
  // at the bottom.  Throws ContextMismatch.
  EqualityResult monoid_equal(TiedWord const& w1,
                              TiedWord const& w2,
                              std::uint64_t   budget = kDefaultBudget);

  struct QuickInvariants {
    Permutation               perm;
    int                       sigma_sum;
    std::vector<std::int64_t> loop_sums;  // per fixed strand
    std::string               partition;  // canonical tie part at the bottom
    std::uint64_t             fingerprint;

    bool operator==(QuickInvariants const&) const = default;
  };

  QuickInvariants quick_invariants(TiedWord const& w);

}  // namespace tiedbraid
