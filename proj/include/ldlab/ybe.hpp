#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ldlab/magma.hpp"

namespace ldlab {

// rho(a, b) = (rho1(a, b), rho2(a, b)) on {1..m}^2; not assumed bijective.
class SetSolution {
 public:
  SetSolution() = default;
  SetSolution(int m, std::vector<std::pair<int, int>> images);

  int size() const { return m_; }
  std::pair<int, int> at(int a, int b) const {
    return images_[static_cast<std::size_t>(a - 1) * m_ + (b - 1)];
  }
  bool operator==(const SetSolution&) const = default;

 private:
  int m_ = 0;
  std::vector<std::pair<int, int>> images_;
};

// rho(a, b) = (a*b, a)
SetSolution rack_to_solution(const FiniteMagma& M);
SetSolution switch_solution(int m);
SetSolution identity_solution(int m);
// rho(a, b) = (a op1 b, a op2 b)
SetSolution solution_from_operations(const FiniteMagma& op1, const FiniteMagma& op2);
// (rho1, rho2) as two binary operations.
std::pair<FiniteMagma, FiniteMagma> solution_operations(const SetSolution& rho);

// rho12 rho23 rho12 = rho23 rho12 rho23 on all m^3 triples; first failing input.
std::optional<Triple> braid_equation_violation(const SetSolution& rho);
bool satisfies_braid_equation(const SetSolution& rho);
bool is_invertible(const SetSolution& rho);

struct BirackCheck {
  bool ok = true;
  // Which requirement failed first: "law1", "law2", "law3",
  // "left-translations", "right-translations"; empty when ok.
  std::string failure;
  std::optional<Triple> witness;
};
// op1 is the left operation (first output), op2 the right one (second output).
BirackCheck birack_laws_check(const FiniteMagma& op1, const FiniteMagma& op2);
// The three exchange laws only, without the bijectivity requirements.
BirackCheck birack_exchange_laws(const FiniteMagma& op1, const FiniteMagma& op2);

// a * b = a
FiniteMagma first_projection(int m);

struct MatrixEntry {
  long row = 0;
  long col = 0;
  bool operator==(const MatrixEntry&) const = default;
};
// 1-based (a, b) -> (a-1)m + b.
inline long pair_index(int m, int a, int b) { return static_cast<long>(a - 1) * m + b; }
// M[out][in] = 1 iff rho(in) = out; one entry per column, sorted by column.
std::vector<MatrixEntry> export_matrix(const SetSolution& rho);
std::string render_matrix_coo(const std::vector<MatrixEntry>& entries);
std::string render_matrix_csv(const std::vector<MatrixEntry>& entries, long dim);

}  // namespace ldlab
