#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tiedbraid/equivalence.hpp"
#include "tiedbraid/moves.hpp"
#include "tiedbraid/random.hpp"
#include "tiedbraid/rewriting.hpp"

namespace tiedbraid {

  // Outcome of a batch of checks: a line-oriented report plus counters.
  struct SuiteReport {
    std::string   text;
    std::uint64_t checked   = 0;
    std::uint64_t failures  = 0;
    std::uint64_t undecided = 0;

    bool ok() const noexcept {
      return failures == 0 && undecided == 0;
    }
  };

  // Every instance of every gated defining relation: both sides scan-equal
  // and equal in the tied monoid.
  SuiteReport check_relations(Context const& ctx, std::uint64_t budget = kDefaultBudget);
  // Same for the derived identities.
  SuiteReport check_identities(Context const& ctx, std::uint64_t budget = kDefaultBudget);
  // band_commutations(n, p, +-1) for the lens context (g=1, n, p).
  SuiteReport check_band(Context const& ctx, std::uint64_t budget = kDefaultBudget);

  // Applies one move legal for w's flavor, chosen at random.  Moves whose
  // preconditions fail for w are skipped in favour of another.
  MoveOutcome random_move(TiedWord const& w, Rng& rng);

  // Picks a random legal instance of a random catalog relation for ctx,
  // if there is one.
  std::optional<Instance> random_instance(Context const& ctx, Rng& rng);

  struct FuzzOptions {
    std::uint64_t          seed   = 1;
    int                    cases  = 1000;
    int                    max_length = 20;
    std::uint64_t          budget = kDefaultBudget;
    std::optional<Context> ctx;  // otherwise random contexts of every flavor
  };

  // Random property checks: relation insertion, normal form round trip,
  // generalized-tie expansion and closure invariance under random moves.
  // The report is a function of the options alone.
  SuiteReport fuzz(FuzzOptions const& options);

}  // namespace tiedbraid
