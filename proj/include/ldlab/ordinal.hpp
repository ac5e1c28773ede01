#pragma once

#include <string>
#include <vector>

#include "ldlab/bigint.hpp"

namespace ldlab {

// Ordinal below omega^omega in Cantor normal form: sum of w^exp * coef with
// strictly decreasing exponents and positive coefficients. Empty means 0.
struct OrdinalCNF {
  struct Term {
    unsigned exp = 0;
    BigInt coef;
    bool operator==(const Term&) const = default;
  };
  std::vector<Term> terms;

  static OrdinalCNF zero() { return {}; }
  static OrdinalCNF finite(const BigInt& c);
  // w^exp * coef; coef may be zero (gives 0).
  static OrdinalCNF monomial(unsigned exp, const BigInt& coef);

  bool is_zero() const { return terms.empty(); }
  bool operator==(const OrdinalCNF&) const = default;
};

OrdinalCNF ordinal_add(const OrdinalCNF& a, const OrdinalCNF& b);
int ordinal_cmp(const OrdinalCNF& a, const OrdinalCNF& b);
// "w^2*2+w*3+1"; "0" for zero.
std::string render(const OrdinalCNF& a);

}  // namespace ldlab
