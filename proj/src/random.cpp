#include "tiedbraid/random.hpp"

#include <vector>

namespace tiedbraid {

  Token random_token(Context const& ctx, Rng& rng, WordShape const& shape) {
    int const n = ctx.n(), g = ctx.g();
    std::vector<TokenKind> kinds;
    if (n >= 2) {
      kinds.push_back(TokenKind::Sigma);
      kinds.push_back(TokenKind::Sigma);  // crossings twice as likely
      if (shape.ties) {
        kinds.push_back(TokenKind::Tie);
        kinds.push_back(TokenKind::GenTie);
      }
    }
    if (g > 0) {
      if (shape.loops) {
        kinds.push_back(TokenKind::Loop);
      }
      if (shape.ties) {
        kinds.push_back(TokenKind::FixedTie);
        kinds.push_back(TokenKind::GenFixedTie);
      }
    }
    if (kinds.empty()) {
      throw Error(ErrorCode::AlphabetForbidden, "no letters available in " + ctx.header());
    }
    switch (kinds[rng.between(0, static_cast<int>(kinds.size()) - 1)]) {
      case TokenKind::Sigma: return sigma(rng.between(1, n - 1), rng.sign());
      case TokenKind::Loop: return loop(rng.between(1, g), rng.sign());
      case TokenKind::Tie: return tie(rng.between(1, n - 1));
      case TokenKind::GenTie: {
        int i = rng.between(1, n - 1);
        int j = rng.between(i + 1, n);
        return gen_tie(i, j);
      }
      case TokenKind::FixedTie: return fixed_tie(rng.between(1, g));
      case TokenKind::GenFixedTie: return gen_fixed_tie(rng.between(1, g), rng.between(1, n));
    }
    return tie(1);
  }

  TiedWord random_word(Context const& ctx, Rng& rng, WordShape const& shape) {
    int const          length = rng.between(0, shape.max_length);
    std::vector<Token> letters;
    // A lone strand in S3 has no letters at all.
    if (ctx.n() < 2 && ctx.g() == 0) {
      return TiedWord(ctx);
    }
    if (ctx.n() < 2 && !shape.loops && !shape.ties) {
      return TiedWord(ctx);
    }
    for (int i = 0; i < length; ++i) {
      letters.push_back(random_token(ctx, rng, shape));
    }
    return TiedWord(ctx, std::move(letters));
  }

  Context random_context(Flavor f, Rng& rng, int max_g, int min_n, int max_n, int max_p) {
    int const n = rng.between(min_n, max_n);
    switch (f) {
      case Flavor::S3: return Context::make(0, n, f);
      case Flavor::SolidTorus: return Context::make(1, n, f);
      case Flavor::Lens: return Context::make(1, n, f, rng.between(1, max_p));
      case Flavor::Handlebody:
      case Flavor::UnlinkComplement: return Context::make(rng.between(1, max_g), n, f);
    }
    return Context::make(0, n, Flavor::S3);
  }

}  // namespace tiedbraid
