#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "ldlab/bigint.hpp"

namespace ldlab {

using IntVector = std::vector<BigInt>;
// Sparse integer linear form: (coordinate, coefficient) pairs.
using SparseForm = std::vector<std::pair<std::size_t, BigInt>>;

// Z-basis of {x in Z^dim : f(x) = 0 for every form f}. Forms are applied one
// at a time; each one is absorbed by Euclidean reduction among the current
// basis vectors (pivot = smallest nonzero absolute value, first on ties).
std::vector<IntVector> integer_kernel(std::size_t dim, const std::vector<SparseForm>& forms);

// Row echelon form of a set of generators with the unimodular transform that
// produced it; answers membership in the Z-span with explicit coefficients.
class ZSpan {
 public:
  ZSpan(std::vector<IntVector> generators, std::size_t dim);
  // Coefficients c with sum c_i * generators_i = target, if any.
  std::optional<IntVector> solve(const IntVector& target) const;
  bool contains(const IntVector& target) const { return solve(target).has_value(); }
  std::size_t rank() const { return pivots_.size(); }

 private:
  std::size_t dim_;
  std::size_t count_;
  std::vector<IntVector> rows_;
  std::vector<IntVector> transform_;
  std::vector<std::pair<std::size_t, std::size_t>> pivots_;  // (row, column)
};

}  // namespace ldlab
