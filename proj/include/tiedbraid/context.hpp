#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace tiedbraid {

  // The ambient manifold a tied braid lives in.  Fixed strands represent the
  // manifold: none for S3, one for the solid torus and lens spaces, g for the
  // handlebody and the complement of the g-component unlink.
  enum class Flavor { S3, SolidTorus, Lens, Handlebody, UnlinkComplement };

  char const* short_name(Flavor f) noexcept;  // s3, st, lens, hb, unlink
  std::optional<Flavor> flavor_from_short_name(std::string_view s);

  class Context {
   public:
    // Throws Error(InvalidContext) when the flavor/g/p combination is illegal.
    static Context make(int g, int n, Flavor flavor,
                        std::optional<int> p = std::nullopt);

    // Parses "g=1 n=3 M=lens p=2", optionally prefixed by "%ctx".
    static Context parse(std::string_view header);

    int g() const noexcept {
      return _g;
    }
    int n() const noexcept {
      return _n;
    }
    Flavor flavor() const noexcept {
      return _flavor;
    }
    std::optional<int> p() const noexcept {
      return _p;
    }

    // Same manifold, different number of moving strands.
    Context with_n(int n) const;

    // "%ctx g=.. n=.. M=.. [p=..]"
    std::string header() const;

    bool operator==(Context const&) const = default;

   private:
    Context(int g, int n, Flavor f, std::optional<int> p)
        : _g(g), _n(n), _flavor(f), _p(p) {}

    int                _g;
    int                _n;
    Flavor             _flavor;
    std::optional<int> _p;
  };

}  // namespace tiedbraid
