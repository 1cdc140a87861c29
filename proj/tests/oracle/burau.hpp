#pragma once

// Reduced Burau representation of the 3-strand braid group over Laurent
// polynomials in t with exact integer coefficients.  It is faithful on
// three strands, so a word is trivial iff its matrix is the identity.

#include <array>
#include <map>

#include <boost/multiprecision/cpp_int.hpp>

#include "tiedbraid/semantics.hpp"

namespace oracle {

  using boost::multiprecision::cpp_int;

  class Laurent {
   public:
    Laurent() = default;
    Laurent(int exponent, cpp_int coefficient) {
      if (coefficient != 0) {
        _terms[exponent] = std::move(coefficient);
      }
    }

    Laurent operator+(Laurent const& o) const {
      Laurent r = *this;
      for (auto const& [e, c] : o._terms) {
        auto& slot = r._terms[e];
        slot += c;
        if (slot == 0) {
          r._terms.erase(e);
        }
      }
      return r;
    }

    Laurent operator*(Laurent const& o) const {
      Laurent r;
      for (auto const& [e1, c1] : _terms) {
        for (auto const& [e2, c2] : o._terms) {
          r = r + Laurent(e1 + e2, c1 * c2);
        }
      }
      return r;
    }

    bool operator==(Laurent const&) const = default;

   private:
    std::map<int, cpp_int> _terms;
  };

  using Matrix = std::array<std::array<Laurent, 2>, 2>;

  inline Matrix identity() {
    return {{{Laurent(0, 1), Laurent()}, {Laurent(), Laurent(0, 1)}}};
  }

  inline Matrix operator*(Matrix const& a, Matrix const& b) {
    Matrix r;
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) {
        r[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
      }
    }
    return r;
  }

  inline Matrix generator(int index, int exponent) {
    Laurent const one(0, 1), zero;
    if (index == 1) {
      return exponent > 0 ? Matrix{{{Laurent(1, -1), one}, {zero, one}}}
                          : Matrix{{{Laurent(-1, -1), Laurent(-1, 1)}, {zero, one}}};
    }
    return exponent > 0 ? Matrix{{{one, zero}, {Laurent(1, 1), Laurent(1, -1)}}}
                        : Matrix{{{one, zero}, {one, Laurent(-1, -1)}}};
  }

  inline Matrix burau(tiedbraid::BraidWord const& b) {
    Matrix m = identity();
    for (auto const& l : b.letters) {
      m = m * generator(l.index, l.exponent);
    }
    return m;
  }

  inline bool burau_trivial(tiedbraid::BraidWord const& b) {
    return burau(b) == identity();
  }

}  // namespace oracle
