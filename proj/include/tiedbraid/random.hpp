#pragma once

#include <cstdint>
#include <random>

#include "tiedbraid/word.hpp"

namespace tiedbraid {

  // Seeded generator whose output depends only on the seed (mt19937_64 is
  // fully specified by the standard; bounded draws use plain modulo instead
  // of the library-defined distributions).
  class Rng {
   public:
    explicit Rng(std::uint64_t seed) : _engine(seed) {}

    // Uniform-ish in [lo, hi].
    int between(int lo, int hi) {
      return lo + static_cast<int>(_engine() % static_cast<std::uint64_t>(hi - lo + 1));
    }
    bool coin() {
      return (_engine() & 1u) != 0;
    }
    int sign() {
      return coin() ? 1 : -1;
    }

   private:
    std::mt19937_64 _engine;
  };

  struct WordShape {
    int  max_length = 20;
    bool ties       = true;  // include tie letters
    bool loops      = true;  // include loop letters (when g > 0)
  };

  // A random valid letter for ctx.
  Token random_token(Context const& ctx, Rng& rng, WordShape const& shape);
  // Length drawn uniformly in [0, shape.max_length].
  TiedWord random_word(Context const& ctx, Rng& rng, WordShape const& shape);

  // Random context of the given flavor with g <= max_g, n in [min_n, max_n].
  Context random_context(Flavor f, Rng& rng, int max_g, int min_n, int max_n, int max_p = 3);

}  // namespace tiedbraid
