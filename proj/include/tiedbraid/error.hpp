#pragma once

#include <stdexcept>
#include <string>

namespace tiedbraid {

  enum class ErrorCode {
    InvalidContext,
    UnknownToken,
    IndexOutOfRange,
    MalformedIndexPair,
    AlphabetForbidden,
    ContextMismatch,
    TieTokenPresent,
    NoMatch,
    BadInstantiation,
    NotATie,
    FlavorForbidden,
    NotDestabilizable,
    TieWouldBeEssential,
    NoJustifyingFixedTie,
  };

  char const* to_string(ErrorCode code) noexcept;

  class Error : public std::runtime_error {
   public:
    Error(ErrorCode code, std::string const& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what),
          _code(code) {}

    ErrorCode code() const noexcept {
      return _code;
    }

   private:
    ErrorCode _code;
  };

}  // namespace tiedbraid
