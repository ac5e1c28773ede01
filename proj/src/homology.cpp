#include "ldlab/homology.hpp"

#include <string>

#include "ldlab/errors.hpp"
#include "ldlab/resource.hpp"

namespace ldlab {

Tuple face_op(const FiniteMagma& M, FaceKind kind, int i, const Tuple& x) {
  const int k = static_cast<int>(x.size());
  if (i < 1 || i > k) throw DomainError("face index out of range");
  Tuple out;
  out.reserve(x.size() - 1);
  for (int j = 1; j < i; ++j) out.push_back(x[j - 1]);
  for (int j = i + 1; j <= k; ++j)
    out.push_back(kind == FaceKind::Star ? M.op(x[i - 1], x[j - 1]) : x[j - 1]);
  return out;
}

void add_to(IntChain& acc, const IntChain& c, long long factor) {
  for (const auto& [t, v] : c) {
    auto& slot = acc[t];
    slot += factor * v;
    if (slot == 0) acc.erase(t);
  }
}

IntChain basis_chain(const Tuple& x) { return IntChain{{x, 1}}; }

IntChain boundary(const FiniteMagma& M, BoundaryKind kind, const Tuple& x) {
  IntChain out;
  const int k = static_cast<int>(x.size());
  for (int i = 1; i <= k; ++i) {
    const long long sign = (i % 2 == 1) ? 1 : -1;
    if (kind != BoundaryKind::Zero) add_to(out, basis_chain(face_op(M, FaceKind::Star, i, x)), sign);
    if (kind == BoundaryKind::Zero) add_to(out, basis_chain(face_op(M, FaceKind::Zero, i, x)), sign);
    if (kind == BoundaryKind::Rack) add_to(out, basis_chain(face_op(M, FaceKind::Zero, i, x)), -sign);
  }
  return out;
}

IntChain boundary(const FiniteMagma& M, BoundaryKind kind, const IntChain& c) {
  IntChain out;
  for (const auto& [t, v] : c) add_to(out, boundary(M, kind, t), v);
  return out;
}

std::vector<Tuple> all_tuples(int m, int k) {
  std::vector<Tuple> out;
  Tuple t(static_cast<std::size_t>(k), 1);
  for (;;) {
    out.push_back(t);
    int pos = k - 1;
    while (pos >= 0 && t[pos] == m) t[pos--] = 1;
    if (pos < 0) break;
    ++t[pos];
  }
  return out;
}

namespace {

std::size_t checked_power(int m, int k) {
  std::size_t n = 1;
  for (int i = 0; i < k; ++i) {
    n *= static_cast<std::size_t>(m);
    if (n > kMaxCochainEntries)
      throw ResourceError("cochain with " + std::to_string(m) + "^" + std::to_string(k) +
                          " entries exceeds the 2^24 bound");
  }
  return n;
}

}  // namespace

IntCochain::IntCochain(int m, int k) : m_(m), k_(k) {
  if (m < 1 || k < 0) throw DomainError("cochain needs m >= 1 and k >= 0");
  const std::size_t n = checked_power(m, k);
  require_memory(n * sizeof(BigInt), "cochain");
  values_.assign(n, BigInt(0));
}

IntCochain::IntCochain(int m, int k, std::vector<BigInt> values) : IntCochain(m, k) {
  if (values.size() != values_.size()) throw DomainError("cochain value count mismatch");
  values_ = std::move(values);
}

IntCochain IntCochain::constant(int m, int k, const BigInt& c) {
  IntCochain f(m, k);
  for (auto& v : f.values_) v = c;
  return f;
}

std::size_t IntCochain::index(const Tuple& x) const {
  if (static_cast<int>(x.size()) != k_) throw DomainError("tuple length differs from cochain degree");
  std::size_t idx = 0;
  for (int v : x) {
    if (v < 1 || v > m_) throw DomainError("tuple entry outside carrier");
    idx = idx * static_cast<std::size_t>(m_) + static_cast<std::size_t>(v - 1);
  }
  return idx;
}

Tuple IntCochain::tuple_at(std::size_t idx) const {
  Tuple t(static_cast<std::size_t>(k_));
  for (int j = k_ - 1; j >= 0; --j) {
    t[j] = static_cast<int>(idx % static_cast<std::size_t>(m_)) + 1;
    idx /= static_cast<std::size_t>(m_);
  }
  return t;
}

BigInt IntCochain::evaluate(const IntChain& c) const {
  BigInt s = 0;
  for (const auto& [t, v] : c) s += at(t) * v;
  return s;
}

IntCochain coboundary_of(const FiniteMagma& M, const IntCochain& f) {
  if (f.carrier() != M.size()) throw DomainError("cochain carrier differs from magma");
  IntCochain out(M.size(), f.degree() + 1);
  for (std::size_t i = 0; i < out.values().size(); ++i) {
    const Tuple x = out.tuple_at(i);
    out.at(x) = f.evaluate(boundary(M, BoundaryKind::Rack, x));
  }
  return out;
}

std::optional<Tuple> cocycle_violation(const FiniteMagma& M, const IntCochain& phi) {
  if (phi.carrier() != M.size()) throw DomainError("cochain carrier differs from magma");
  for (const auto& x : all_tuples(M.size(), phi.degree() + 1))
    if (phi.evaluate(boundary(M, BoundaryKind::Rack, x)) != 0) return x;
  return std::nullopt;
}

bool is_cocycle(const FiniteMagma& M, const IntCochain& phi) {
  return !cocycle_violation(M, phi).has_value();
}

std::optional<Triple> two_cocycle_violation(const FiniteMagma& M, const IntCochain& phi) {
  if (phi.degree() != 2) throw DomainError("two-cocycle check needs a degree-2 cochain");
  if (phi.carrier() != M.size()) throw DomainError("cochain carrier differs from magma");
  const int m = M.size();
  for (int x = 1; x <= m; ++x)
    for (int y = 1; y <= m; ++y)
      for (int z = 1; z <= m; ++z)
        if (phi.at({x, z}) + phi.at({M.op(x, y), M.op(x, z)}) !=
            phi.at({y, z}) + phi.at({x, M.op(y, z)}))
          return Triple{x, y, z};
  return std::nullopt;
}

bool is_two_cocycle(const FiniteMagma& M, const IntCochain& phi) {
  return !two_cocycle_violation(M, phi).has_value();
}

bool is_three_cocycle(const FiniteMagma& M, const IntCochain& phi) {
  if (phi.degree() != 3) throw DomainError("three-cocycle check needs a degree-3 cochain");
  return is_cocycle(M, phi);
}

CocycleSpace cocycle_space(const FiniteMagma& M, int degree) {
  if (degree < 1) throw DomainError("cocycle degree must be at least 1");
  const int m = M.size();
  const std::size_t dim = checked_power(m, degree);
  checked_power(m, degree + 1);
  if (dim > kMaxKernelDim)
    throw ResourceError("cocycle space of dimension " + std::to_string(dim) +
                        " exceeds the kernel bound " + std::to_string(kMaxKernelDim));
  require_memory(dim * dim * sizeof(BigInt), "integer kernel");
  const IntCochain shape(m, degree);
  std::vector<SparseForm> forms;
  for (const auto& x : all_tuples(m, degree + 1)) {
    SparseForm f;
    for (const auto& [t, v] : boundary(M, BoundaryKind::Rack, x)) f.push_back({shape.index(t), BigInt(v)});
    if (!f.empty()) forms.push_back(std::move(f));
  }
  CocycleSpace out;
  for (auto& v : integer_kernel(dim, forms)) out.basis.emplace_back(m, degree, std::move(v));
  out.rank = out.basis.size();
  return out;
}

CocycleSpace two_cocycle_space(const FiniteMagma& M) { return cocycle_space(M, 2); }

std::size_t three_cocycle_rank(const FiniteMagma& M) { return cocycle_space(M, 3).rank; }

IntCochain psi(const LaverTable& A, int q) {
  const int N = A.size;
  if (q < 1 || q >= N) throw DomainError("psi needs 1 <= q < 2^n");
  // in_col[y] = q occurs in the column of y
  std::vector<bool> in_col(static_cast<std::size_t>(N) + 1, false);
  for (int y = 1; y <= N; ++y)
    for (int p = 1; p <= N; ++p)
      if (A.at(p, y) == q) in_col[y] = true;
  IntCochain f(N, 2);
  for (int x = 1; x <= N; ++x)
    for (int y = 1; y <= N; ++y)
      if (in_col[y] && !in_col[A.at(x, y)]) f.at({x, y}) = 1;
  return f;
}

IntCochain psi(int q, int n) { return psi(build_laver_table(n), q); }

std::optional<IntCochain> coboundary_preimage(const FiniteMagma& M, const IntCochain& phi) {
  const int m = M.size();
  const int k = phi.degree() - 1;
  if (k < 1) throw DomainError("coboundary preimage needs degree >= 2");
  const IntCochain shape(m, k);
  std::vector<IntVector> gens;
  for (std::size_t i = 0; i < shape.values().size(); ++i) {
    IntCochain e(m, k);
    e.at(shape.tuple_at(i)) = 1;
    gens.push_back(coboundary_of(M, e).values());
  }
  ZSpan span(std::move(gens), phi.values().size());
  auto coef = span.solve(phi.values());
  if (!coef) return std::nullopt;
  return IntCochain(m, k, std::move(*coef));
}

bool lattice_contains(const std::vector<IntCochain>& b, const std::vector<IntCochain>& a) {
  if (b.empty()) {
    for (const auto& v : a)
      for (const auto& x : v.values())
        if (x != 0) return false;
    return true;
  }
  std::vector<IntVector> gens;
  for (const auto& v : b) gens.push_back(v.values());
  const std::size_t dim = gens.front().size();
  ZSpan span(std::move(gens), dim);
  for (const auto& v : a)
    if (!span.contains(v.values())) return false;
  return true;
}

IntChain apply_homotopy(Homotopy h, int top, const IntChain& c) {
  IntChain out;
  for (const auto& [t, v] : c) {
    Tuple u;
    long long sign = 1;
    if (h == Homotopy::Append) {
      u = t;
      u.push_back(top);
      sign = (t.size() % 2 == 0) ? 1 : -1;
    } else {
      u.push_back(top);
      u.insert(u.end(), t.begin(), t.end());
      if (h == Homotopy::PrependNegated) sign = -1;
    }
    add_to(out, basis_chain(u), sign * v);
  }
  return out;
}

bool contracting_homotopy_check(int n, int k, Homotopy h, int sign, BoundaryKind kind) {
  const LaverTable A = build_laver_table(n);
  for (int deg = 0; deg <= k; ++deg) {
    for (const auto& x : all_tuples(A.size, deg)) {
      const IntChain c = basis_chain(x);
      IntChain lhs = apply_homotopy(h, A.size, boundary(A.magma, kind, c));
      add_to(lhs, boundary(A.magma, kind, apply_homotopy(h, A.size, c)));
      IntChain rhs;
      add_to(rhs, c, sign);
      if (lhs != rhs) return false;
    }
  }
  return true;
}

}  // namespace ldlab
