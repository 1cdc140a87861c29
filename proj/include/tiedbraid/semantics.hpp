#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tiedbraid/word.hpp"

namespace tiedbraid {

  // Map from top position to bottom position, both 1-based.
  class Permutation {
   public:
    explicit Permutation(int n);  // identity
    explicit Permutation(std::vector<int> images);  // images[t-1] = bottom of t

    int size() const noexcept {
      return static_cast<int>(_images.size());
    }
    int operator()(int top) const {
      return _images.at(top - 1);
    }
    std::vector<int> const& images() const noexcept {
      return _images;
    }
    Permutation inverse() const;
    // First this, then other.
    Permutation then(Permutation const& other) const;
    // Cycles as sorted lists, ordered by least element.
    std::vector<std::vector<int>> cycles() const;
    bool is_identity() const noexcept;

    bool operator==(Permutation const&) const = default;

   private:
    std::vector<int> _images;
  };

  std::string render(Permutation const& p);  // "(1->2,2->1)"

  // An element of the partition universe: fixed strand F_k or moving strand
  // M_j.  Fixed strands sort first.
  struct Element {
    bool fixed;
    int  index;

    bool operator==(Element const&) const = default;
    auto operator<=>(Element const& o) const {
      if (fixed != o.fixed) {
        return fixed ? std::strong_ordering::less : std::strong_ordering::greater;
      }
      return index <=> o.index;
    }
  };

  std::string render(Element const& e);  // "F1", "M3"

  // Partition of {F1..Fg} u {M1..Mn} in canonical form: every element in
  // exactly one class, elements sorted, classes sorted by least element.
  class TiePartition {
   public:
    TiePartition(int g, int n);  // discrete
    TiePartition(int g, int n, std::vector<std::vector<Element>> classes);

    int g() const noexcept {
      return _g;
    }
    int n() const noexcept {
      return _n;
    }
    std::vector<std::vector<Element>> const& classes() const noexcept {
      return _classes;
    }
    // Classes with at least two elements.
    std::vector<std::vector<Element>> nontrivial_classes() const;
    bool same_class(Element a, Element b) const;
    bool is_discrete() const noexcept;

    // Relabels moving strands by m -> perm(m).
    TiePartition relabel(Permutation const& perm) const;

    bool operator==(TiePartition const&) const = default;

   private:
    int                               _g;
    int                               _n;
    std::vector<std::vector<Element>> _classes;
  };

  // "{F1,M1,M2},{M3}"
  std::string render(TiePartition const& p);

  struct Semantics {
    Permutation  perm;
    TiePartition partition;  // moving strands labelled by top position
    // winding[m-1][k-1]: exponent sum of a_k accumulated by strand M_m.
    // Empty inner vectors when g = 0.
    std::vector<std::vector<std::int64_t>> winding;

    bool operator==(Semantics const&) const = default;
  };

  Permutation permutation(TiedWord const& w);
  Semantics   scan_semantics(TiedWord const& w);

  struct ClosureSummary {
    int g = 0;
    int n = 0;
    // Cycles of the permutation, each a sorted list of strand ids; ordered
    // by least strand.
    std::vector<std::vector<int>> components;
    // Partition of the fixed strands and the components.  Elements with
    // fixed = true are fixed strands F_k; fixed = false refer to
    // components by 1-based index into `components`.
    std::vector<std::vector<Element>> tie_classes;
    // Per component, sum of the member windings; reduced into [0, p) for
    // lens spaces.
    std::vector<std::vector<std::int64_t>> component_winding;
    std::optional<int>                     modulus;

    bool operator==(ClosureSummary const&) const = default;
  };

  ClosureSummary closure_summary(TiedWord const& w);

  // Line-oriented key=value report.  The first line is
  // "components=<c> tieClasses=<t>".
  std::string closure_report(ClosureSummary const& s);
  // One-line canonical record, stable under diffing.
  std::string closure_record(ClosureSummary const& s);

  // Whether deleting the tie at 1-based position `tie_index` changes the
  // tie classes of the closure.  Throws NotATie.
  bool essential(TiedWord const& w, std::size_t tie_index);

  // Plain braid word on m strands, letters (index, +-1).
  struct BraidLetter {
    int index;
    int exponent;
    bool operator==(BraidLetter const&) const = default;
  };

  struct BraidWord {
    int                      strands = 1;
    std::vector<BraidLetter> letters;

    bool operator==(BraidWord const&) const = default;
  };

  std::string render(BraidWord const& b);  // "s1 S2 ..."
  BraidWord   inverse(BraidWord const& b);
  BraidWord   concat(BraidWord const& a, BraidWord const& b);
  BraidWord   free_reduce(BraidWord const& b);

  // Image of a tie-free word in the braid group on g+n strands: moving
  // strand j sits at position g+j and a_k becomes the band generator
  // (s_g ... s_{k+1}) s_k^2 (S_{k+1} ... S_g).  Throws TieTokenPresent.
  BraidWord embed_to_full_braid(TiedWord const& w);

}  // namespace tiedbraid
