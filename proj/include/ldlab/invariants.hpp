#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ldlab/bigint.hpp"
#include "ldlab/braid.hpp"
#include "ldlab/freegroup.hpp"
#include "ldlab/homology.hpp"
#include "ldlab/magma.hpp"

namespace ldlab {

// Colours by strand position 1..m (index 0 is position 1).
using ColourVector = std::vector<int>;

// sigma_i: (.., a_i, a_{i+1}, ..) -> (.., a_i*a_{i+1}, a_i, ..). Positive words only.
ColourVector act_positive(const FiniteMagma& M, ColourVector a, const BraidWord& w);
// Adds sigma_i^-1: (.., c, d, ..) -> (.., d, d \ c, ..) where d * (d \ c) = c.
// Requires a rack.
ColourVector act_full(const FiniteMagma& M, ColourVector a, const BraidWord& w);
// As act_full with the left division taken where it exists; absent as soon as
// a negative crossing has no preimage. Requires left-cancellative rows.
std::optional<ColourVector> act_partial(const FiniteMagma& M, ColourVector a, const BraidWord& w);

// x*y = y+1 on Z, or on [lo, hi] with leaving the window meaning undefined.
struct IntegerRack {
  std::optional<std::pair<long, long>> window;
  bool contains(long v) const { return !window || (v >= window->first && v <= window->second); }
};
std::optional<std::vector<long>> act_partial(const IntegerRack& R, std::vector<long> a,
                                             const BraidWord& w);

// Artin action on the free group: x*y = x y x^-1, x \ y = x^-1 y x.
std::vector<FreeWord> act_free(std::vector<FreeWord> a, const BraidWord& w);

constexpr std::uint64_t kMaxColourVectors = 50'000'000;

// Number of colour vectors fixed by the braid, i.e. colourings of its closure.
BigInt count_closure_colourings(const FiniteMagma& M, const BraidWord& w);

// Sum of phi(x, y) over the crossings of a positive word, (x, y) the colours
// entering each crossing at positions (i, i+1).
BigInt cocycle_invariant(const FiniteMagma& M, const IntCochain& phi, const BraidWord& w,
                         const ColourVector& a, bool checked = true);

// Formal combination of generators under * and \ (the left division).
class QuandleTerm {
 public:
  enum class Kind { Generator, Star, Bar };
  static QuandleTerm generator(int g);
  static QuandleTerm star(const QuandleTerm& x, const QuandleTerm& y);
  static QuandleTerm bar(const QuandleTerm& x, const QuandleTerm& y);

  Kind kind() const { return kind_; }
  int gen() const { return gen_; }
  const QuandleTerm& left() const { return *left_; }
  const QuandleTerm& right() const { return *right_; }

  // Subterms parenthesised unless they are generators; no outer parentheses.
  std::string render() const;
  // Evaluation in a rack with colours values[g-1]; the division must exist.
  std::optional<int> evaluate(const FiniteMagma& M, const std::vector<int>& values) const;
  FreeWord to_free() const;
  bool operator==(const QuandleTerm& o) const;

 private:
  Kind kind_ = Kind::Generator;
  int gen_ = 0;
  std::shared_ptr<const QuandleTerm> left_, right_;
};

struct QuandlePresentation {
  int generators = 0;
  // (t_i, a_i): output term at position i equated to the input generator.
  std::vector<std::pair<QuandleTerm, QuandleTerm>> relations;
  // "<a, b | t1 = a, t2 = b>"
  std::string render() const;
};

QuandlePresentation fundamental_quandle(const BraidWord& w);

struct GroupPresentation {
  int generators = 0;
  std::vector<std::pair<FreeWord, FreeWord>> relations;
  // Freely reduced lhs * rhs^-1.
  std::vector<FreeWord> relators() const;
  std::string render() const;
};
GroupPresentation wirtinger_group(const BraidWord& w);

// Whether the quandle relations hold in M under the colour assignment.
bool satisfies_presentation(const FiniteMagma& M, const QuandlePresentation& P,
                            const std::vector<int>& values);

enum class FractionMode { Fraction, Delta };
// Fraction: (mid . b1, mid . b2) for beta = b1^-1 b2 irreducible.
// Delta: (mid . Delta^d, mid . beta0) for beta = Delta^-d beta0.
std::pair<ColourVector, ColourVector> laver_fraction_colouring(int n, const BraidWord& w,
                                                               const ColourVector& mid,
                                                               FractionMode mode);

}  // namespace ldlab
