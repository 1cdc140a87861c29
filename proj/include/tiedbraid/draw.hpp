#pragma once

#include <string>

#include "tiedbraid/word.hpp"

namespace tiedbraid {

  enum class DrawFormat { Ascii, Svg };

  // Schematic picture of a tied mixed braid, one letter per row, read top to
  // bottom.  Fixed strands are the leftmost columns.
  //
  // ASCII glyphs: positive crossing "\ X /", negative crossing "/ X \",
  // loop "O===>" (a_k) or "O===<" (A_k) from the fixed strand to strand 1,
  // tie "*~~~*" drawn over any strands in between, which stay visible.
  std::string draw(TiedWord const& w, DrawFormat format);

}  // namespace tiedbraid
