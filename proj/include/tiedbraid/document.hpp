#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "tiedbraid/word.hpp"

namespace tiedbraid {

  // A word file: an optional "%ctx" header, '#' comments, one word per line.
  // Blank lines are skipped; an empty word is written as a line holding only
  // the identity marker "e".
  struct Document {
    Context               ctx;
    std::vector<TiedWord> words;
  };

  // `override_ctx`, when given, replaces every header in the text.  Throws
  // InvalidContext when a word precedes any context, and the parse errors of
  // the words otherwise (message prefixed with the line number).
  Document load_document(std::string_view text, std::optional<Context> override_ctx = std::nullopt);

}  // namespace tiedbraid
