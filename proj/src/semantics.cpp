#include "tiedbraid/semantics.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "union_find.hpp"

namespace tiedbraid {

  ////////////////////////////////////////////////////////////////////////
  // Permutation
  ////////////////////////////////////////////////////////////////////////

  Permutation::Permutation(int n) : _images(n) {
    std::iota(_images.begin(), _images.end(), 1);
  }

  Permutation::Permutation(std::vector<int> images) : _images(std::move(images)) {
    std::vector<bool> seen(_images.size(), false);
    for (int x : _images) {
      if (x < 1 || x > size() || seen[x - 1]) {
        throw std::invalid_argument("Permutation: images are not a bijection");
      }
      seen[x - 1] = true;
    }
  }

  Permutation Permutation::inverse() const {
    std::vector<int> inv(_images.size());
    for (int t = 1; t <= size(); ++t) {
      inv[(*this)(t) - 1] = t;
    }
    return Permutation(std::move(inv));
  }

  Permutation Permutation::then(Permutation const& other) const {
    std::vector<int> out(_images.size());
    for (int t = 1; t <= size(); ++t) {
      out[t - 1] = other((*this)(t));
    }
    return Permutation(std::move(out));
  }

  std::vector<std::vector<int>> Permutation::cycles() const {
    std::vector<std::vector<int>> out;
    std::vector<bool>             seen(_images.size(), false);
    for (int t = 1; t <= size(); ++t) {
      if (seen[t - 1]) {
        continue;
      }
      std::vector<int> cycle;
      for (int x = t; !seen[x - 1]; x = (*this)(x)) {
        seen[x - 1] = true;
        cycle.push_back(x);
      }
      std::sort(cycle.begin(), cycle.end());
      out.push_back(std::move(cycle));
    }
    return out;
  }

  bool Permutation::is_identity() const noexcept {
    for (int t = 1; t <= size(); ++t) {
      if (_images[t - 1] != t) {
        return false;
      }
    }
    return true;
  }

  std::string render(Permutation const& p) {
    std::string out = "(";
    for (int t = 1; t <= p.size(); ++t) {
      if (t > 1) {
        out += ',';
      }
      out += std::to_string(t) + "->" + std::to_string(p(t));
    }
    return out + ")";
  }

  ////////////////////////////////////////////////////////////////////////
  // TiePartition
  ////////////////////////////////////////////////////////////////////////

  namespace {
    std::vector<std::vector<Element>>
    canonical(std::vector<std::vector<Element>> classes) {
      for (auto& c : classes) {
        std::sort(c.begin(), c.end());
      }
      std::erase_if(classes, [](auto const& c) { return c.empty(); });
      std::sort(classes.begin(), classes.end());
      return classes;
    }

    // Union-find ids: F_k -> k-1, M_m -> g+m-1.
    std::vector<std::vector<Element>> classes_of(detail::UnionFind& uf, int g, int n) {
      std::map<int, std::vector<Element>> groups;
      for (int k = 1; k <= g; ++k) {
        groups[uf.find(k - 1)].push_back({true, k});
      }
      for (int m = 1; m <= n; ++m) {
        groups[uf.find(g + m - 1)].push_back({false, m});
      }
      std::vector<std::vector<Element>> out;
      for (auto& [root, members] : groups) {
        out.push_back(std::move(members));
      }
      return canonical(std::move(out));
    }
  }  // namespace

  std::string render(Element const& e) {
    return (e.fixed ? "F" : "M") + std::to_string(e.index);
  }

  TiePartition::TiePartition(int g, int n) : _g(g), _n(n) {
    for (int k = 1; k <= g; ++k) {
      _classes.push_back({{true, k}});
    }
    for (int m = 1; m <= n; ++m) {
      _classes.push_back({{false, m}});
    }
  }

  TiePartition::TiePartition(int g, int n, std::vector<std::vector<Element>> classes)
      : _g(g), _n(n), _classes(canonical(std::move(classes))) {
    std::size_t count = 0;
    for (auto const& c : _classes) {
      for (auto const& e : c) {
        if (e.index < 1 || e.index > (e.fixed ? g : n)) {
          throw std::invalid_argument("TiePartition: element out of range");
        }
      }
      count += c.size();
    }
    std::vector<Element> all;
    for (auto const& c : _classes) {
      all.insert(all.end(), c.begin(), c.end());
    }
    std::sort(all.begin(), all.end());
    if (count != static_cast<std::size_t>(g + n)
        || std::adjacent_find(all.begin(), all.end()) != all.end()) {
      throw std::invalid_argument("TiePartition: classes do not partition the universe");
    }
  }

  std::vector<std::vector<Element>> TiePartition::nontrivial_classes() const {
    std::vector<std::vector<Element>> out;
    for (auto const& c : _classes) {
      if (c.size() > 1) {
        out.push_back(c);
      }
    }
    return out;
  }

  bool TiePartition::same_class(Element a, Element b) const {
    for (auto const& c : _classes) {
      bool ha = std::find(c.begin(), c.end(), a) != c.end();
      bool hb = std::find(c.begin(), c.end(), b) != c.end();
      if (ha || hb) {
        return ha && hb;
      }
    }
    return false;
  }

  bool TiePartition::is_discrete() const noexcept {
    return _classes.size() == static_cast<std::size_t>(_g + _n);
  }

  TiePartition TiePartition::relabel(Permutation const& perm) const {
    auto classes = _classes;
    for (auto& c : classes) {
      for (auto& e : c) {
        if (!e.fixed) {
          e.index = perm(e.index);
        }
      }
    }
    return TiePartition(_g, _n, std::move(classes));
  }

  std::string render(TiePartition const& p) {
    std::string out;
    for (auto const& c : p.classes()) {
      if (!out.empty()) {
        out += ',';
      }
      out += '{';
      for (std::size_t i = 0; i < c.size(); ++i) {
        out += (i ? "," : "") + render(c[i]);
      }
      out += '}';
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Scan
  ////////////////////////////////////////////////////////////////////////

  Permutation permutation(TiedWord const& w) {
    require_valid(w);
    int const        n = w.context().n();
    std::vector<int> at(n);  // position -> strand
    std::iota(at.begin(), at.end(), 1);
    for (auto const& t : w.letters()) {
      if (t.kind == TokenKind::Sigma) {
        std::swap(at[t.first - 1], at[t.first]);
      }
    }
    std::vector<int> images(n);
    for (int q = 1; q <= n; ++q) {
      images[at[q - 1] - 1] = q;
    }
    return Permutation(std::move(images));
  }

  Semantics scan_semantics(TiedWord const& w) {
    require_valid(w);
    int const g = w.context().g(), n = w.context().n();

    std::vector<int> at(n);
    std::iota(at.begin(), at.end(), 1);
    detail::UnionFind                      uf(g + n);
    std::vector<std::vector<std::int64_t>> winding(n, std::vector<std::int64_t>(g, 0));
    auto moving = [&](int position) {
      return g + at[position - 1] - 1;
    };

    for (auto const& t : w.letters()) {
      switch (t.kind) {
        case TokenKind::Sigma: std::swap(at[t.first - 1], at[t.first]); break;
        case TokenKind::Loop: winding[at[0] - 1][t.first - 1] += t.exponent; break;
        case TokenKind::Tie: uf.unite(moving(t.first), moving(t.first + 1)); break;
        case TokenKind::GenTie: uf.unite(moving(t.first), moving(t.second)); break;
        case TokenKind::FixedTie: uf.unite(t.first - 1, moving(1)); break;
        case TokenKind::GenFixedTie: uf.unite(t.first - 1, moving(t.second)); break;
      }
    }

    std::vector<int> images(n);
    for (int q = 1; q <= n; ++q) {
      images[at[q - 1] - 1] = q;
    }
    return Semantics{Permutation(std::move(images)),
                     TiePartition(g, n, classes_of(uf, g, n)),
                     std::move(winding)};
  }

  ////////////////////////////////////////////////////////////////////////
  // Closure
  ////////////////////////////////////////////////////////////////////////

  ClosureSummary closure_summary(TiedWord const& w) {
    auto const sem = scan_semantics(w);
    int const  g = w.context().g(), n = w.context().n();

    ClosureSummary s;
    s.g          = g;
    s.n          = n;
    s.components = sem.perm.cycles();
    if (w.context().flavor() == Flavor::Lens) {
      s.modulus = w.context().p();
    }

    std::vector<int> component_of(n + 1);
    for (std::size_t c = 0; c < s.components.size(); ++c) {
      for (int m : s.components[c]) {
        component_of[m] = static_cast<int>(c);
      }
    }

    int const         cc = static_cast<int>(s.components.size());
    detail::UnionFind uf(g + cc);
    auto              id = [&](Element e) {
      return e.fixed ? e.index - 1 : g + component_of[e.index];
    };
    for (auto const& cls : sem.partition.classes()) {
      for (std::size_t i = 1; i < cls.size(); ++i) {
        uf.unite(id(cls[0]), id(cls[i]));
      }
    }
    std::map<int, std::vector<Element>> groups;
    for (int k = 1; k <= g; ++k) {
      groups[uf.find(k - 1)].push_back({true, k});
    }
    for (int c = 1; c <= cc; ++c) {
      groups[uf.find(g + c - 1)].push_back({false, c});
    }
    for (auto& [root, members] : groups) {
      s.tie_classes.push_back(std::move(members));
    }
    s.tie_classes = canonical(std::move(s.tie_classes));

    for (auto const& comp : s.components) {
      std::vector<std::int64_t> total(g, 0);
      for (int m : comp) {
        for (int k = 0; k < g; ++k) {
          total[k] += sem.winding[m - 1][k];
        }
      }
      if (s.modulus) {
        for (auto& x : total) {
          x = ((x % *s.modulus) + *s.modulus) % *s.modulus;
        }
      }
      s.component_winding.push_back(std::move(total));
    }
    return s;
  }

  namespace {
    std::string strands(std::vector<int> const& comp) {
      std::string out;
      for (std::size_t i = 0; i < comp.size(); ++i) {
        out += (i ? ",M" : "M") + std::to_string(comp[i]);
      }
      return out;
    }

    std::string members(std::vector<Element> const& cls) {
      std::string out;
      for (std::size_t i = 0; i < cls.size(); ++i) {
        out += (i ? "," : "");
        out += (cls[i].fixed ? "F" : "C") + std::to_string(cls[i].index);
      }
      return out;
    }

    std::string numbers(std::vector<std::int64_t> const& v) {
      std::string out;
      for (std::size_t i = 0; i < v.size(); ++i) {
        out += (i ? "," : "") + std::to_string(v[i]);
      }
      return out;
    }
  }  // namespace

  std::string closure_report(ClosureSummary const& s) {
    std::ostringstream out;
    out << "components=" << s.components.size()
        << " tieClasses=" << s.tie_classes.size() << '\n';
    for (std::size_t c = 0; c < s.components.size(); ++c) {
      out << "component." << c + 1 << '=' << strands(s.components[c]) << '\n';
    }
    for (std::size_t c = 0; c < s.tie_classes.size(); ++c) {
      out << "class." << c + 1 << '=' << members(s.tie_classes[c]) << '\n';
    }
    if (s.g > 0) {
      if (s.modulus) {
        out << "modulus=" << *s.modulus << '\n';
      }
      for (std::size_t c = 0; c < s.component_winding.size(); ++c) {
        out << "winding." << c + 1 << '=' << numbers(s.component_winding[c]) << '\n';
      }
    }
    return out.str();
  }

  std::string closure_record(ClosureSummary const& s) {
    std::ostringstream out;
    out << "closure g=" << s.g << " n=" << s.n << " components=";
    for (auto const& c : s.components) {
      out << '[' << strands(c) << ']';
    }
    out << " classes=";
    for (auto const& c : s.tie_classes) {
      out << '[' << members(c) << ']';
    }
    out << " winding=";
    for (auto const& w : s.component_winding) {
      out << '[' << numbers(w) << ']';
    }
    if (s.modulus) {
      out << " mod=" << *s.modulus;
    }
    return out.str();
  }

  bool essential(TiedWord const& w, std::size_t tie_index) {
    if (tie_index < 1 || tie_index > w.size()) {
      throw Error(ErrorCode::IndexOutOfRange,
                  "letter " + std::to_string(tie_index) + " does not exist");
    }
    if (!w[tie_index - 1].is_tie()) {
      throw Error(ErrorCode::NotATie,
                  "letter " + std::to_string(tie_index) + " is '"
                      + render(w[tie_index - 1]) + "'");
    }
    auto letters = w.letters();
    letters.erase(letters.begin() + static_cast<std::ptrdiff_t>(tie_index - 1));
    return closure_summary(w).tie_classes
           != closure_summary(TiedWord(w.context(), std::move(letters))).tie_classes;
  }

  ////////////////////////////////////////////////////////////////////////
  // Braid words
  ////////////////////////////////////////////////////////////////////////

  std::string render(BraidWord const& b) {
    std::string out;
    for (auto const& l : b.letters) {
      if (!out.empty()) {
        out += ' ';
      }
      out += (l.exponent > 0 ? "s" : "S") + std::to_string(l.index);
    }
    return out;
  }

  BraidWord inverse(BraidWord const& b) {
    BraidWord out{b.strands, {}};
    out.letters.reserve(b.letters.size());
    for (auto it = b.letters.rbegin(); it != b.letters.rend(); ++it) {
      out.letters.push_back({it->index, -it->exponent});
    }
    return out;
  }

  BraidWord concat(BraidWord const& a, BraidWord const& b) {
    if (a.strands != b.strands) {
      throw Error(ErrorCode::ContextMismatch, "braid words on different strand counts");
    }
    BraidWord out = a;
    out.letters.insert(out.letters.end(), b.letters.begin(), b.letters.end());
    return out;
  }

  BraidWord free_reduce(BraidWord const& b) {
    BraidWord out{b.strands, {}};
    for (auto const& l : b.letters) {
      if (!out.letters.empty() && out.letters.back().index == l.index
          && out.letters.back().exponent == -l.exponent) {
        out.letters.pop_back();
      } else {
        out.letters.push_back(l);
      }
    }
    return out;
  }

  BraidWord embed_to_full_braid(TiedWord const& w) {
    require_valid(w);
    if (w.has_ties()) {
      throw Error(ErrorCode::TieTokenPresent, "'" + render(w) + "' contains ties");
    }
    int const g = w.context().g();
    BraidWord out{g + w.context().n(), {}};
    for (auto const& t : w.letters()) {
      if (t.kind == TokenKind::Sigma) {
        out.letters.push_back({g + t.first, t.exponent});
        continue;
      }
      int const k = t.first;
      for (int i = g; i > k; --i) {
        out.letters.push_back({i, 1});
      }
      out.letters.push_back({k, t.exponent});
      out.letters.push_back({k, t.exponent});
      for (int i = k + 1; i <= g; ++i) {
        out.letters.push_back({i, -1});
      }
    }
    return out;
  }

}  // namespace tiedbraid
