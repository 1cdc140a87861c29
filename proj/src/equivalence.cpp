#include "tiedbraid/equivalence.hpp"

#include "tiedbraid/rewriting.hpp"

namespace tiedbraid {

  namespace {
    struct Handle {
      std::size_t open;
      std::size_t close;
    };

    // The handle s_i^e u s_i^-e (u free of s_i and s_{i-1}) whose closing
    // letter comes first.  Its interior contains no handle.
    std::optional<Handle> leftmost_handle(std::vector<BraidLetter> const& w, int strands) {
      constexpr std::ptrdiff_t none = -1;
      std::vector<std::ptrdiff_t> last(strands + 1, none);
      for (std::size_t q = 0; q < w.size(); ++q) {
        int const  i = w[q].index;
        auto const p = last[i];
        if (p != none && w[p].exponent == -w[q].exponent
            && (i == 1 || last[i - 1] < p)) {
          return Handle{static_cast<std::size_t>(p), q};
        }
        last[i] = static_cast<std::ptrdiff_t>(q);
      }
      return std::nullopt;
    }

    std::vector<std::int64_t> loop_sums(TiedWord const& w) {
      std::vector<std::int64_t> out(w.context().g(), 0);
      for (auto const& t : w.letters()) {
        if (t.kind == TokenKind::Loop) {
          out[t.first - 1] += t.exponent;
        }
      }
      return out;
    }

    int sigma_sum(TiedWord const& w) {
      int s = 0;
      for (auto const& t : w.letters()) {
        if (t.kind == TokenKind::Sigma) {
          s += t.exponent;
        }
      }
      return s;
    }

    void same_context(TiedWord const& w1, TiedWord const& w2) {
      if (!(w1.context() == w2.context())) {
        throw Error(ErrorCode::ContextMismatch,
                    w1.context().header() + " vs " + w2.context().header());
      }
    }

    std::uint64_t fnv1a(std::string const& s) {
      std::uint64_t h = 14695981039346656037ull;
      for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
      }
      return h;
    }
  }  // namespace

  HandleReduction handle_reduce(BraidWord const& b, std::uint64_t budget) {
    for (auto const& l : b.letters) {
      if (l.index < 1 || l.index >= b.strands || (l.exponent != 1 && l.exponent != -1)) {
        throw Error(ErrorCode::IndexOutOfRange,
                    "braid letter out of range for " + std::to_string(b.strands)
                        + " strands");
      }
    }
    std::vector<BraidLetter> w = b.letters;
    std::uint64_t            steps = 0;
    while (auto h = leftmost_handle(w, b.strands)) {
      if (steps == budget) {
        return {BraidWord{b.strands, std::move(w)}, Verdict::BudgetExhausted, steps};
      }
      ++steps;
      int const                i = w[h->open].index;
      int const                e = w[h->open].exponent;
      std::vector<BraidLetter> next(w.begin(), w.begin() + h->open);
      next.reserve(w.size() + 2 * (h->close - h->open));
      for (std::size_t k = h->open + 1; k < h->close; ++k) {
        if (w[k].index == i + 1) {
          next.push_back({i + 1, -e});
          next.push_back({i, w[k].exponent});
          next.push_back({i + 1, e});
        } else {
          next.push_back(w[k]);
        }
      }
      next.insert(next.end(), w.begin() + h->close + 1, w.end());
      w = std::move(next);
    }
    auto const verdict = w.empty() ? Verdict::Trivial : Verdict::Nontrivial;
    return {BraidWord{b.strands, std::move(w)}, verdict, steps};
  }

  EqualityResult braid_equal(TiedWord const& w1, TiedWord const& w2, std::uint64_t budget) {
    same_context(w1, w2);
    if (w1.has_ties() || w2.has_ties()) {
      throw Error(ErrorCode::TieTokenPresent, "braid_equal needs tie-free words");
    }
    if (permutation(w1) != permutation(w2)) {
      return {Equality::Differ, "permutation"};
    }
    if (sigma_sum(w1) != sigma_sum(w2)) {
      return {Equality::Differ, "exponent-sum(s)"};
    }
    auto const l1 = loop_sums(w1), l2 = loop_sums(w2);
    for (std::size_t k = 0; k < l1.size(); ++k) {
      if (l1[k] != l2[k]) {
        return {Equality::Differ, "exponent-sum(a" + std::to_string(k + 1) + ")"};
      }
    }
    auto const r = handle_reduce(
        concat(embed_to_full_braid(w1), inverse(embed_to_full_braid(w2))), budget);
    switch (r.verdict) {
      case Verdict::Trivial: return {Equality::Equal, ""};
      case Verdict::Nontrivial: return {Equality::Differ, "braid"};
      case Verdict::BudgetExhausted: return {Equality::Undecided, "budget"};
    }
    return {Equality::Undecided, "budget"};
  }

  EqualityResult monoid_equal(TiedWord const& w1, TiedWord const& w2, std::uint64_t budget) {
    same_context(w1, w2);
    auto const nf1 = normal_form(w1), nf2 = normal_form(w2);
    if (permutation(nf1.braid_part) != permutation(nf2.braid_part)) {
      return {Equality::Differ, "permutation"};
    }
    if (nf1.tie_part != nf2.tie_part) {
      return {Equality::Differ, "partition"};
    }
    return braid_equal(nf1.braid_part, nf2.braid_part, budget);
  }

  QuickInvariants quick_invariants(TiedWord const& w) {
    auto const nf        = normal_form(w);
    auto       partition = render(nf.tie_part);
    auto const h         = fnv1a(partition);
    return QuickInvariants{permutation(w), sigma_sum(w), loop_sums(w), std::move(partition), h};
  }

}  // namespace tiedbraid
