#include "tiedbraid/word.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace tiedbraid {

  namespace {
    std::string index_error(Token const& t, Context const& ctx) {
      return "'" + render(t) + "' out of range for " + ctx.header();
    }

    // Strict decimal: non-empty, digits only, no leading zero.
    bool parse_index(std::string_view s, int& out) {
      if (s.empty() || (s.size() > 1 && s[0] == '0')
          || !std::all_of(s.begin(), s.end(), [](char c) {
               return c >= '0' && c <= '9';
             })) {
        return false;
      }
      auto rc = std::from_chars(s.data(), s.data() + s.size(), out);
      return rc.ec == std::errc() && rc.ptr == s.data() + s.size();
    }

    Token parse_token(std::string_view text) {
      auto unknown = [&] {
        return Error(ErrorCode::UnknownToken, "'" + std::string(text) + "'");
      };
      if (text.size() < 2) {
        throw unknown();
      }
      char const head = text[0];
      auto       rest = text.substr(1);

      if (rest.front() == '(') {
        if (head != 't' && head != 'p') {
          throw unknown();
        }
        auto comma = rest.find(',');
        if (rest.back() != ')' || comma == std::string_view::npos) {
          throw Error(ErrorCode::MalformedIndexPair, "'" + std::string(text) + "'");
        }
        int a = 0, b = 0;
        if (!parse_index(rest.substr(1, comma - 1), a)
            || !parse_index(rest.substr(comma + 1, rest.size() - comma - 2), b)) {
          throw Error(ErrorCode::MalformedIndexPair, "'" + std::string(text) + "'");
        }
        return head == 't' ? gen_tie(a, b) : gen_fixed_tie(a, b);
      }

      int i = 0;
      if (!parse_index(rest, i)) {
        throw unknown();
      }
      switch (head) {
        case 's': return sigma(i, 1);
        case 'S': return sigma(i, -1);
        case 'a': return loop(i, 1);
        case 'A': return loop(i, -1);
        case 't': return tie(i);
        case 'p': return fixed_tie(i);
        default: throw unknown();
      }
    }

    std::vector<Violation> check(Token const& t, Context const& ctx) {
      std::vector<Violation> out;
      auto add = [&](ErrorCode code, std::string msg) {
        out.push_back({0, code, std::move(msg)});
      };
      int const n = ctx.n(), g = ctx.g();
      auto in = [](int x, int lo, int hi) {
        return lo <= x && x <= hi;
      };
      switch (t.kind) {
        case TokenKind::Sigma:
          if (!in(t.first, 1, n - 1)) {
            add(ErrorCode::IndexOutOfRange, index_error(t, ctx));
          }
          break;
        case TokenKind::Tie:
          if (!in(t.first, 1, n - 1)) {
            add(ErrorCode::IndexOutOfRange, index_error(t, ctx));
          }
          break;
        case TokenKind::GenTie:
          if (t.first >= t.second) {
            add(ErrorCode::MalformedIndexPair, "'" + render(t) + "'");
          } else if (!in(t.first, 1, n) || !in(t.second, 1, n)) {
            add(ErrorCode::IndexOutOfRange, index_error(t, ctx));
          }
          break;
        case TokenKind::Loop:
        case TokenKind::FixedTie:
        case TokenKind::GenFixedTie:
          if (g == 0) {
            add(ErrorCode::AlphabetForbidden,
                "'" + render(t) + "' needs a fixed strand; "
                    + short_name(ctx.flavor()) + " has none");
          } else if (!in(t.first, 1, g)
                     || (t.kind == TokenKind::GenFixedTie && !in(t.second, 1, n))) {
            add(ErrorCode::IndexOutOfRange, index_error(t, ctx));
          }
          break;
      }
      return out;
    }
  }  // namespace

  Token Token::inverse() const {
    if (is_tie()) {
      throw Error(ErrorCode::TieTokenPresent, "ties are not invertible");
    }
    return Token{kind, first, second, -exponent};
  }

  Token sigma(int i, int exponent) {
    return Token{TokenKind::Sigma, i, 0, exponent >= 0 ? 1 : -1};
  }

  Token loop(int k, int exponent) {
    return Token{TokenKind::Loop, k, 0, exponent >= 0 ? 1 : -1};
  }

  Token tie(int i) {
    return Token{TokenKind::Tie, i, 0, 0};
  }

  Token gen_tie(int i, int j) {
    if (i == j) {
      throw Error(ErrorCode::MalformedIndexPair,
                  "t(" + std::to_string(i) + "," + std::to_string(j)
                      + ") joins a strand to itself");
    }
    return Token{TokenKind::GenTie, std::min(i, j), std::max(i, j), 0};
  }

  Token fixed_tie(int k) {
    return Token{TokenKind::FixedTie, k, 0, 0};
  }

  Token gen_fixed_tie(int k, int j) {
    return Token{TokenKind::GenFixedTie, k, j, 0};
  }

  std::string render(Token const& t) {
    auto pair = [&](char c) {
      return std::string(1, c) + "(" + std::to_string(t.first) + ","
             + std::to_string(t.second) + ")";
    };
    switch (t.kind) {
      case TokenKind::Sigma:
        return (t.exponent > 0 ? "s" : "S") + std::to_string(t.first);
      case TokenKind::Loop:
        return (t.exponent > 0 ? "a" : "A") + std::to_string(t.first);
      case TokenKind::Tie: return "t" + std::to_string(t.first);
      case TokenKind::GenTie: return pair('t');
      case TokenKind::FixedTie: return "p" + std::to_string(t.first);
      case TokenKind::GenFixedTie: return pair('p');
    }
    return "?";
  }

  bool TiedWord::has_ties() const noexcept {
    return std::any_of(_letters.begin(), _letters.end(), [](Token const& t) {
      return t.is_tie();
    });
  }

  TiedWord parse(std::string_view text, Context const& ctx) {
    std::vector<Token> letters;
    std::size_t        pos = 0;
    while (pos < text.size()) {
      if (text[pos] == ' ' || text[pos] == '\t' || text[pos] == '\r'
          || text[pos] == '\n') {
        ++pos;
        continue;
      }
      auto end = text.find_first_of(" \t\r\n", pos);
      if (end == std::string_view::npos) {
        end = text.size();
      }
      letters.push_back(parse_token(text.substr(pos, end - pos)));
      pos = end;
    }
    TiedWord w(ctx, std::move(letters));
    require_valid(w);
    return w;
  }

  std::string render(TiedWord const& w) {
    std::string out;
    for (auto const& t : w.letters()) {
      if (!out.empty()) {
        out += ' ';
      }
      out += render(t);
    }
    return out;
  }

  std::vector<Violation> validate(TiedWord const& w) {
    std::vector<Violation> out;
    for (std::size_t i = 0; i < w.size(); ++i) {
      for (auto& v : check(w[i], w.context())) {
        v.position = i + 1;
        out.push_back(std::move(v));
      }
    }
    return out;
  }

  void require_valid(TiedWord const& w) {
    auto v = validate(w);
    if (!v.empty()) {
      throw Error(v.front().code,
                  "letter " + std::to_string(v.front().position) + ": "
                      + v.front().message);
    }
  }

  TiedWord compose(TiedWord const& w1, TiedWord const& w2) {
    if (!(w1.context() == w2.context())) {
      throw Error(ErrorCode::ContextMismatch,
                  w1.context().header() + " vs " + w2.context().header());
    }
    auto letters = w1.letters();
    letters.insert(letters.end(), w2.letters().begin(), w2.letters().end());
    return TiedWord(w1.context(), std::move(letters));
  }

  TiedWord inverse(TiedWord const& w) {
    std::vector<Token> letters;
    letters.reserve(w.size());
    for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) {
      letters.push_back(it->inverse());
    }
    return TiedWord(w.context(), std::move(letters));
  }

  TiedWord expand_generalized(TiedWord const& w) {
    require_valid(w);
    std::vector<Token> out;
    for (auto const& t : w.letters()) {
      if (t.kind == TokenKind::GenTie) {
        // s_i ... s_{j-2} t_{j-1} S_{j-2} ... S_i
        for (int k = t.first; k <= t.second - 2; ++k) {
          out.push_back(sigma(k, 1));
        }
        out.push_back(tie(t.second - 1));
        for (int k = t.second - 2; k >= t.first; --k) {
          out.push_back(sigma(k, -1));
        }
      } else if (t.kind == TokenKind::GenFixedTie) {
        // s_{j-1} ... s_1 p_k S_1 ... S_{j-1}
        for (int k = t.second - 1; k >= 1; --k) {
          out.push_back(sigma(k, 1));
        }
        out.push_back(fixed_tie(t.first));
        for (int k = 1; k <= t.second - 1; ++k) {
          out.push_back(sigma(k, -1));
        }
      } else {
        out.push_back(t);
      }
    }
    return TiedWord(w.context(), std::move(out));
  }

}  // namespace tiedbraid
