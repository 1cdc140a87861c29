#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tiedbraid/context.hpp"
#include "tiedbraid/error.hpp"

namespace tiedbraid {

  enum class TokenKind { Sigma, Loop, Tie, GenTie, FixedTie, GenFixedTie };

  // One letter of a tied word.  All indices are 1-based.
  //
  //   Sigma(i, e)        first = i,           exponent = e
  //   Loop(k, e)         first = k,           exponent = e
  //   Tie(i)             first = i
  //   GenTie(i, j)       first = i < second = j
  //   FixedTie(k)        first = k
  //   GenFixedTie(k, j)  first = k (fixed),   second = j (moving)
  //
  // Ties carry exponent 0.
  struct Token {
    TokenKind kind;
    int       first    = 0;
    int       second   = 0;
    int       exponent = 0;

    bool operator==(Token const&) const = default;

    bool is_tie() const noexcept {
      return kind != TokenKind::Sigma && kind != TokenKind::Loop;
    }
    Token inverse() const;  // only for Sigma and Loop
  };

  Token sigma(int i, int exponent = 1);
  Token loop(int k, int exponent = 1);
  Token tie(int i);
  // Stored with i < j; throws MalformedIndexPair when i == j.
  Token gen_tie(int i, int j);
  Token fixed_tie(int k);
  Token gen_fixed_tie(int k, int j);

  std::string render(Token const& t);

  struct Violation {
    std::size_t position;  // 1-based position of the offending letter
    ErrorCode   code;      // IndexOutOfRange, MalformedIndexPair or
                           // AlphabetForbidden
    std::string message;
  };

  class TiedWord {
   public:
    explicit TiedWord(Context ctx) : _ctx(ctx) {}
    TiedWord(Context ctx, std::vector<Token> letters)
        : _ctx(ctx), _letters(std::move(letters)) {}

    Context const& context() const noexcept {
      return _ctx;
    }
    std::vector<Token> const& letters() const noexcept {
      return _letters;
    }
    std::size_t size() const noexcept {
      return _letters.size();
    }
    bool empty() const noexcept {
      return _letters.empty();
    }
    Token const& operator[](std::size_t i) const {
      return _letters[i];
    }

    bool has_ties() const noexcept;
    // Same letters in a context with more moving strands (or a different
    // flavor); the caller guarantees the letters remain in range.
    TiedWord recontext(Context ctx) const {
      return TiedWord(ctx, _letters);
    }

    bool operator==(TiedWord const&) const = default;

   private:
    Context            _ctx;
    std::vector<Token> _letters;
  };

  TiedWord parse(std::string_view text, Context const& ctx);
  std::string render(TiedWord const& w);

  std::vector<Violation> validate(TiedWord const& w);
  // Throws the first violation of validate(w), if any.
  void require_valid(TiedWord const& w);

  TiedWord compose(TiedWord const& w1, TiedWord const& w2);
  // Letters reversed and inverted.  Throws TieTokenPresent for tied words.
  TiedWord inverse(TiedWord const& w);

  // Rewrites every GenTie and GenFixedTie into sigma/tie/fixed-tie letters.
  TiedWord expand_generalized(TiedWord const& w);

}  // namespace tiedbraid
