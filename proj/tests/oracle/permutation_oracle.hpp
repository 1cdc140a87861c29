#pragma once

// Permutations composed strand by strand: each crossing moves whichever
// strands currently sit at its two positions.

#include <vector>

#include "tiedbraid/word.hpp"

namespace oracle {

  // images[x-1] = bottom position of the strand starting at top x.
  inline std::vector<int> permutation(tiedbraid::TiedWord const& w) {
    int const        n = w.context().n();
    std::vector<int> images(n);
    for (int x = 1; x <= n; ++x) {
      images[x - 1] = x;
    }
    for (auto const& t : w.letters()) {
      if (t.kind != tiedbraid::TokenKind::Sigma) {
        continue;
      }
      for (auto& b : images) {
        b = b == t.first ? t.first + 1 : b == t.first + 1 ? t.first : b;
      }
    }
    return images;
  }

}  // namespace oracle
