#pragma once

#include <map>
#include <optional>
#include <vector>

#include "ldlab/bigint.hpp"
#include "ldlab/laver.hpp"
#include "ldlab/magma.hpp"
#include "ldlab/zlattice.hpp"

namespace ldlab {

// 1-based carrier elements; the empty tuple is the generator of C_0 = Z.
using Tuple = std::vector<int>;
// Finitely supported integer combination of tuples of one length.
using IntChain = std::map<Tuple, long long>;

enum class FaceKind { Star, Zero };
enum class BoundaryKind { Star, Zero, Rack };

// Star: (x1..x_{i-1}, x_i*x_{i+1}, ..., x_i*x_k). Zero: x_i omitted.
Tuple face_op(const FiniteMagma& M, FaceKind kind, int i, const Tuple& x);
// Alternating sum of faces; Rack = Star - Zero.
IntChain boundary(const FiniteMagma& M, BoundaryKind kind, const IntChain& c);
IntChain boundary(const FiniteMagma& M, BoundaryKind kind, const Tuple& x);
void add_to(IntChain& acc, const IntChain& c, long long factor = 1);
IntChain basis_chain(const Tuple& x);
// All m^k tuples, leftmost coordinate slowest.
std::vector<Tuple> all_tuples(int m, int k);

constexpr std::size_t kMaxCochainEntries = std::size_t{1} << 24;

// Integer function on k-tuples stored densely; leftmost coordinate slowest.
class IntCochain {
 public:
  IntCochain() = default;
  IntCochain(int m, int k);
  IntCochain(int m, int k, std::vector<BigInt> values);
  static IntCochain constant(int m, int k, const BigInt& c);

  int carrier() const { return m_; }
  int degree() const { return k_; }
  std::size_t index(const Tuple& x) const;
  Tuple tuple_at(std::size_t idx) const;
  const BigInt& at(const Tuple& x) const { return values_[index(x)]; }
  BigInt& at(const Tuple& x) { return values_[index(x)]; }
  const std::vector<BigInt>& values() const { return values_; }
  // Linear extension to chains of matching degree.
  BigInt evaluate(const IntChain& c) const;

  bool operator==(const IntCochain&) const = default;

 private:
  int m_ = 0;
  int k_ = 0;
  std::vector<BigInt> values_;
};

// (delta f)(x) = f(boundary^R x); degree goes up by one.
IntCochain coboundary_of(const FiniteMagma& M, const IntCochain& f);

// First (k+1)-tuple on which phi(boundary^R x) != 0.
std::optional<Tuple> cocycle_violation(const FiniteMagma& M, const IntCochain& phi);
bool is_cocycle(const FiniteMagma& M, const IntCochain& phi);
// phi(x,z) + phi(x*y, x*z) = phi(y,z) + phi(x, y*z)
std::optional<Triple> two_cocycle_violation(const FiniteMagma& M, const IntCochain& phi);
bool is_two_cocycle(const FiniteMagma& M, const IntCochain& phi);
bool is_three_cocycle(const FiniteMagma& M, const IntCochain& phi);

// Largest kernel dimension accepted by the dense integer elimination.
constexpr std::size_t kMaxKernelDim = 4096;

struct CocycleSpace {
  std::size_t rank = 0;
  std::vector<IntCochain> basis;
};
CocycleSpace cocycle_space(const FiniteMagma& M, int degree);
CocycleSpace two_cocycle_space(const FiniteMagma& M);
std::size_t three_cocycle_rank(const FiniteMagma& M);

// psi_{q,n}(x,y) = 1 iff q is in the column of y but not in that of x*y.
IntCochain psi(const LaverTable& A, int q);
IntCochain psi(int q, int n);

// Some f with coboundary_of(f) = phi, if phi is an integral coboundary.
std::optional<IntCochain> coboundary_preimage(const FiniteMagma& M, const IntCochain& phi);

// Whether every vector of `a` lies in the Z-span of `b`.
bool lattice_contains(const std::vector<IntCochain>& b, const std::vector<IntCochain>& a);

enum class Homotopy {
  Prepend,         // x -> (N, x)
  PrependNegated,  // x -> -(N, x)
  Append,          // x -> (-1)^len(x) (x, N)
};
IntChain apply_homotopy(Homotopy h, int top, const IntChain& c);
// Checks theta(boundary c) + boundary(theta c) == sign * c for every basis
// chain c of A_n with degree 0..k, boundary of the given kind.
bool contracting_homotopy_check(int n, int k, Homotopy h, int sign = 1,
                                BoundaryKind kind = BoundaryKind::Star);

}  // namespace ldlab
