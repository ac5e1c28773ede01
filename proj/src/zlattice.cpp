#include "ldlab/zlattice.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include "ldlab/errors.hpp"

namespace ldlab {

namespace {

// Euclidean reduction on the entries vals[idx] of the listed vectors until at
// most one is nonzero; row operations are mirrored on `vecs` (and `aux` if any).
// Returns the index of the surviving nonzero entry, or npos.
std::size_t euclid_reduce(std::vector<std::size_t> idx, std::vector<BigInt>& vals,
                          std::vector<IntVector>& vecs, std::vector<IntVector>* aux) {
  constexpr std::size_t npos = static_cast<std::size_t>(-1);
  for (;;) {
    std::erase_if(idx, [&](std::size_t j) { return vals[j] == 0; });
    if (idx.empty()) return npos;
    if (idx.size() == 1) return idx.front();
    std::size_t piv = idx.front();
    for (std::size_t j : idx)
      if (abs(vals[j]) < abs(vals[piv])) piv = j;
    for (std::size_t j : idx) {
      if (j == piv) continue;
      BigInt q = vals[j] / vals[piv];
      if (q == 0) continue;
      vals[j] -= q * vals[piv];
      auto& target = vecs[j];
      const auto& source = vecs[piv];
      for (std::size_t c = 0; c < target.size(); ++c)
        if (source[c] != 0) target[c] -= q * source[c];
      if (aux) {
        auto& ta = (*aux)[j];
        const auto& sa = (*aux)[piv];
        for (std::size_t c = 0; c < ta.size(); ++c)
          if (sa[c] != 0) ta[c] -= q * sa[c];
      }
    }
  }
}

}  // namespace

std::vector<IntVector> integer_kernel(std::size_t dim, const std::vector<SparseForm>& forms) {
  std::vector<IntVector> basis(dim, IntVector(dim));
  for (std::size_t k = 0; k < dim; ++k) basis[k][k] = 1;
  std::vector<BigInt> vals;
  for (const auto& f : forms) {
    vals.assign(basis.size(), 0);
    std::vector<std::size_t> nz;
    for (std::size_t j = 0; j < basis.size(); ++j) {
      for (const auto& [c, coef] : f) {
        if (c >= dim) throw DomainError("linear form coordinate out of range");
        if (basis[j][c] != 0) vals[j] += coef * basis[j][c];
      }
      if (vals[j] != 0) nz.push_back(j);
    }
    if (nz.empty()) continue;
    const std::size_t keep = euclid_reduce(nz, vals, basis, nullptr);
    // The survivor has f != 0; the others now lie in ker f.
    basis.erase(basis.begin() + static_cast<std::ptrdiff_t>(keep));
  }
  return basis;
}

ZSpan::ZSpan(std::vector<IntVector> generators, std::size_t dim)
    : dim_(dim), count_(generators.size()), rows_(std::move(generators)) {
  for (const auto& r : rows_)
    if (r.size() != dim_) throw DomainError("generator dimension mismatch");
  transform_.assign(count_, IntVector(count_));
  for (std::size_t k = 0; k < count_; ++k) transform_[k][k] = 1;
  std::size_t next = 0;
  std::vector<BigInt> vals(count_);
  for (std::size_t col = 0; col < dim_ && next < count_; ++col) {
    std::vector<std::size_t> idx;
    for (std::size_t r = next; r < count_; ++r) {
      vals[r] = rows_[r][col];
      if (vals[r] != 0) idx.push_back(r);
    }
    if (idx.empty()) continue;
    const std::size_t keep = euclid_reduce(idx, vals, rows_, &transform_);
    std::swap(rows_[keep], rows_[next]);
    std::swap(transform_[keep], transform_[next]);
    pivots_.push_back({next, col});
    ++next;
  }
}

std::optional<IntVector> ZSpan::solve(const IntVector& target) const {
  if (target.size() != dim_) throw DomainError("target dimension mismatch");
  IntVector rest = target;
  IntVector coef(count_);
  for (const auto& [row, col] : pivots_) {
    if (rest[col] == 0) continue;
    const BigInt& p = rows_[row][col];
    if (rest[col] % p != 0) return std::nullopt;
    BigInt q = rest[col] / p;
    for (std::size_t c = 0; c < dim_; ++c)
      if (rows_[row][c] != 0) rest[c] -= q * rows_[row][c];
    for (std::size_t k = 0; k < count_; ++k)
      if (transform_[row][k] != 0) coef[k] += q * transform_[row][k];
  }
  for (const auto& v : rest)
    if (v != 0) return std::nullopt;
  return coef;
}

}  // namespace ldlab
