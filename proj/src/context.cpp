#include "tiedbraid/context.hpp"

#include <charconv>
#include <sstream>

#include "tiedbraid/error.hpp"

namespace tiedbraid {

  char const* to_string(ErrorCode code) noexcept {
    switch (code) {
      case ErrorCode::InvalidContext: return "InvalidContext";
      case ErrorCode::UnknownToken: return "UnknownToken";
      case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
      case ErrorCode::MalformedIndexPair: return "MalformedIndexPair";
      case ErrorCode::AlphabetForbidden: return "AlphabetForbidden";
      case ErrorCode::ContextMismatch: return "ContextMismatch";
      case ErrorCode::TieTokenPresent: return "TieTokenPresent";
      case ErrorCode::NoMatch: return "NoMatch";
      case ErrorCode::BadInstantiation: return "BadInstantiation";
      case ErrorCode::NotATie: return "NotATie";
      case ErrorCode::FlavorForbidden: return "FlavorForbidden";
      case ErrorCode::NotDestabilizable: return "NotDestabilizable";
      case ErrorCode::TieWouldBeEssential: return "TieWouldBeEssential";
      case ErrorCode::NoJustifyingFixedTie: return "NoJustifyingFixedTie";
    }
    return "Unknown";
  }

  char const* short_name(Flavor f) noexcept {
    switch (f) {
      case Flavor::S3: return "s3";
      case Flavor::SolidTorus: return "st";
      case Flavor::Lens: return "lens";
      case Flavor::Handlebody: return "hb";
      case Flavor::UnlinkComplement: return "unlink";
    }
    return "?";
  }

  std::optional<Flavor> flavor_from_short_name(std::string_view s) {
    for (auto f : {Flavor::S3,
                   Flavor::SolidTorus,
                   Flavor::Lens,
                   Flavor::Handlebody,
                   Flavor::UnlinkComplement}) {
      if (s == short_name(f)) {
        return f;
      }
    }
    return std::nullopt;
  }

  Context Context::make(int g, int n, Flavor flavor, std::optional<int> p) {
    auto fail = [](std::string const& msg) {
      throw Error(ErrorCode::InvalidContext, msg);
    };
    if (n < 1) {
      fail("n must be at least 1");
    }
    switch (flavor) {
      case Flavor::S3:
        if (g != 0) {
          fail("S3 has no fixed strands (g=0)");
        }
        break;
      case Flavor::SolidTorus:
      case Flavor::Lens:
        if (g != 1) {
          fail("solid torus and lens spaces have exactly one fixed strand");
        }
        break;
      case Flavor::Handlebody:
      case Flavor::UnlinkComplement:
        if (g < 1) {
          fail("handlebody and unlink complement need g >= 1");
        }
        break;
    }
    if ((flavor == Flavor::Lens) != p.has_value()) {
      fail("p is required for lens spaces and forbidden otherwise");
    }
    if (p && *p < 1) {
      fail("p must be at least 1");
    }
    return Context(g, n, flavor, p);
  }

  Context Context::parse(std::string_view header) {
    std::istringstream in{std::string(header)};
    std::string        item;
    std::optional<int> g, n, p;
    std::optional<Flavor> flavor;

    auto number = [](std::string_view v) -> int {
      int  x  = 0;
      auto rc = std::from_chars(v.data(), v.data() + v.size(), x);
      if (rc.ec != std::errc() || rc.ptr != v.data() + v.size()) {
        throw Error(ErrorCode::InvalidContext,
                    "bad number '" + std::string(v) + "'");
      }
      return x;
    };

    while (in >> item) {
      if (item == "%ctx") {
        continue;
      }
      auto eq = item.find('=');
      if (eq == std::string::npos) {
        throw Error(ErrorCode::InvalidContext, "expected key=value, got '" + item + "'");
      }
      auto key   = std::string_view(item).substr(0, eq);
      auto value = std::string_view(item).substr(eq + 1);
      if (key == "g") {
        g = number(value);
      } else if (key == "n") {
        n = number(value);
      } else if (key == "p") {
        p = number(value);
      } else if (key == "M") {
        flavor = flavor_from_short_name(value);
        if (!flavor) {
          throw Error(ErrorCode::InvalidContext,
                      "unknown manifold '" + std::string(value) + "'");
        }
      } else {
        throw Error(ErrorCode::InvalidContext, "unknown key '" + std::string(key) + "'");
      }
    }
    if (!g || !n || !flavor) {
      throw Error(ErrorCode::InvalidContext, "context needs g=, n= and M=");
    }
    return make(*g, *n, *flavor, p);
  }

  Context Context::with_n(int n) const {
    return make(_g, n, _flavor, _p);
  }

  std::string Context::header() const {
    std::ostringstream out;
    out << "%ctx g=" << _g << " n=" << _n << " M=" << short_name(_flavor);
    if (_p) {
      out << " p=" << *_p;
    }
    return out.str();
  }

}  // namespace tiedbraid
