#include "ldlab/ybe.hpp"

#include <algorithm>
#include <sstream>

#include "ldlab/errors.hpp"
#include "ldlab/resource.hpp"

namespace ldlab {

SetSolution::SetSolution(int m, std::vector<std::pair<int, int>> images)
    : m_(m), images_(std::move(images)) {
  if (m < 1) throw DomainError("solution carrier must be nonempty");
  if (images_.size() != static_cast<std::size_t>(m) * m)
    throw DomainError("solution needs m^2 images");
  for (const auto& [c, d] : images_)
    if (c < 1 || c > m || d < 1 || d > m) throw DomainError("solution image outside carrier");
}

namespace {

template <class F>
SetSolution tabulate(int m, F&& f) {
  std::vector<std::pair<int, int>> images;
  images.reserve(static_cast<std::size_t>(m) * m);
  for (int a = 1; a <= m; ++a)
    for (int b = 1; b <= m; ++b) images.push_back(f(a, b));
  return SetSolution(m, std::move(images));
}

}  // namespace

SetSolution rack_to_solution(const FiniteMagma& M) {
  return tabulate(M.size(), [&](int a, int b) { return std::pair{M.op(a, b), a}; });
}

SetSolution switch_solution(int m) {
  return tabulate(m, [](int a, int b) { return std::pair{b, a}; });
}

SetSolution identity_solution(int m) {
  return tabulate(m, [](int a, int b) { return std::pair{a, b}; });
}

SetSolution solution_from_operations(const FiniteMagma& op1, const FiniteMagma& op2) {
  if (op1.size() != op2.size()) throw DomainError("operations on different carriers");
  return tabulate(op1.size(), [&](int a, int b) { return std::pair{op1.op(a, b), op2.op(a, b)}; });
}

std::pair<FiniteMagma, FiniteMagma> solution_operations(const SetSolution& rho) {
  const int m = rho.size();
  return {FiniteMagma::from_function(m, [&](int a, int b) { return rho.at(a, b).first; }),
          FiniteMagma::from_function(m, [&](int a, int b) { return rho.at(a, b).second; })};
}

std::optional<Triple> braid_equation_violation(const SetSolution& rho) {
  const int m = rho.size();
  auto r12 = [&](Triple t) {
    auto [c, d] = rho.at(t[0], t[1]);
    return Triple{c, d, t[2]};
  };
  auto r23 = [&](Triple t) {
    auto [c, d] = rho.at(t[1], t[2]);
    return Triple{t[0], c, d};
  };
  for (int a = 1; a <= m; ++a)
    for (int b = 1; b <= m; ++b)
      for (int c = 1; c <= m; ++c) {
        const Triple t{a, b, c};
        if (r12(r23(r12(t))) != r23(r12(r23(t)))) return t;
      }
  return std::nullopt;
}

bool satisfies_braid_equation(const SetSolution& rho) {
  return !braid_equation_violation(rho).has_value();
}

bool is_invertible(const SetSolution& rho) {
  const int m = rho.size();
  std::vector<bool> hit(static_cast<std::size_t>(m) * m, false);
  for (int a = 1; a <= m; ++a)
    for (int b = 1; b <= m; ++b) {
      auto [c, d] = rho.at(a, b);
      const auto idx = static_cast<std::size_t>(pair_index(m, c, d) - 1);
      if (hit[idx]) return false;
      hit[idx] = true;
    }
  return true;
}

BirackCheck birack_exchange_laws(const FiniteMagma& L, const FiniteMagma& R) {
  if (L.size() != R.size()) throw DomainError("operations on different carriers");
  const int m = L.size();
  for (int x = 1; x <= m; ++x)
    for (int y = 1; y <= m; ++y)
      for (int z = 1; z <= m; ++z) {
        const int xly = L.op(x, y), xry = R.op(x, y);
        const int ylz = L.op(y, z), yrz = R.op(y, z);
        const int u = L.op(xry, z);
        if (L.op(xly, u) != L.op(x, ylz)) return {false, "law1", Triple{x, y, z}};
        if (R.op(xly, u) != L.op(R.op(x, ylz), yrz)) return {false, "law2", Triple{x, y, z}};
        if (R.op(xry, z) != R.op(R.op(x, ylz), yrz)) return {false, "law3", Triple{x, y, z}};
      }
  return {};
}

BirackCheck birack_laws_check(const FiniteMagma& L, const FiniteMagma& R) {
  BirackCheck laws = birack_exchange_laws(L, R);
  if (!laws.ok) return laws;
  const int m = L.size();
  for (int a = 1; a <= m; ++a) {
    std::vector<bool> seen_l(static_cast<std::size_t>(m) + 1, false);
    std::vector<bool> seen_r(static_cast<std::size_t>(m) + 1, false);
    for (int b = 1; b <= m; ++b) {
      if (seen_l[L.op(a, b)]) return {false, "left-translations", Triple{a, b, 0}};
      seen_l[L.op(a, b)] = true;
    }
    for (int b = 1; b <= m; ++b) {
      if (seen_r[R.op(b, a)]) return {false, "right-translations", Triple{b, a, 0}};
      seen_r[R.op(b, a)] = true;
    }
  }
  return {};
}

FiniteMagma first_projection(int m) {
  return FiniteMagma::from_function(m, [](int a, int) { return a; });
}

std::vector<MatrixEntry> export_matrix(const SetSolution& rho) {
  const int m = rho.size();
  std::vector<MatrixEntry> out;
  require_memory(static_cast<std::size_t>(m) * m * sizeof(MatrixEntry), "R-matrix");
  out.reserve(static_cast<std::size_t>(m) * m);
  for (int a = 1; a <= m; ++a)
    for (int b = 1; b <= m; ++b) {
      auto [c, d] = rho.at(a, b);
      out.push_back({pair_index(m, c, d), pair_index(m, a, b)});
    }
  return out;
}

std::string render_matrix_coo(const std::vector<MatrixEntry>& entries) {
  std::ostringstream os;
  for (const auto& e : entries) os << e.row << ' ' << e.col << " 1\n";
  return os.str();
}

std::string render_matrix_csv(const std::vector<MatrixEntry>& entries, long dim) {
  require_memory(static_cast<std::size_t>(dim) * static_cast<std::size_t>(dim), "dense R-matrix");
  std::vector<std::vector<char>> dense(static_cast<std::size_t>(dim),
                                       std::vector<char>(static_cast<std::size_t>(dim), 0));
  for (const auto& e : entries) dense[e.row - 1][e.col - 1] = 1;
  std::string out;
  for (const auto& row : dense) {
    for (long j = 0; j < dim; ++j) {
      if (j) out += ',';
      out += row[j] ? '1' : '0';
    }
    out += '\n';
  }
  return out;
}

}  // namespace ldlab
