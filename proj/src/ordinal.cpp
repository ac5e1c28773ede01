#include "ldlab/ordinal.hpp"

#include "ldlab/errors.hpp"

namespace ldlab {

OrdinalCNF OrdinalCNF::finite(const BigInt& c) { return monomial(0, c); }

OrdinalCNF OrdinalCNF::monomial(unsigned exp, const BigInt& coef) {
  if (coef < 0) throw DomainError("ordinal coefficients are non-negative");
  OrdinalCNF o;
  if (coef > 0) o.terms.push_back({exp, coef});
  return o;
}

OrdinalCNF ordinal_add(const OrdinalCNF& a, const OrdinalCNF& b) {
  if (b.is_zero()) return a;
  const unsigned lead = b.terms.front().exp;
  OrdinalCNF r;
  for (const auto& t : a.terms) {
    if (t.exp > lead) r.terms.push_back(t);
  }
  std::size_t k = 0;
  for (const auto& t : a.terms) {
    if (t.exp == lead) {
      r.terms.push_back({lead, t.coef + b.terms.front().coef});
      k = 1;
    }
  }
  for (; k < b.terms.size(); ++k) r.terms.push_back(b.terms[k]);
  return r;
}

int ordinal_cmp(const OrdinalCNF& a, const OrdinalCNF& b) {
  const std::size_t n = std::min(a.terms.size(), b.terms.size());
  for (std::size_t k = 0; k < n; ++k) {
    const auto& x = a.terms[k];
    const auto& y = b.terms[k];
    if (x.exp != y.exp) return x.exp > y.exp ? 1 : -1;
    if (x.coef != y.coef) return x.coef > y.coef ? 1 : -1;
  }
  if (a.terms.size() == b.terms.size()) return 0;
  return a.terms.size() > b.terms.size() ? 1 : -1;
}

std::string render(const OrdinalCNF& a) {
  if (a.is_zero()) return "0";
  std::string out;
  for (const auto& t : a.terms) {
    if (!out.empty()) out += '+';
    if (t.exp == 0) {
      out += t.coef.str();
      continue;
    }
    out += 'w';
    if (t.exp > 1) out += "^" + std::to_string(t.exp);
    if (t.coef != 1) out += "*" + t.coef.str();
  }
  return out;
}

}  // namespace ldlab
