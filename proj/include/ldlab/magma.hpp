#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace ldlab {

using Triple = std::array<int, 3>;

// Finite carrier {1..m} with one binary operation stored as a dense m*m table.
// No algebraic law is assumed; laws are predicates below.
class FiniteMagma {
 public:
  FiniteMagma() = default;
  FiniteMagma(int m, std::vector<std::uint16_t> table, std::string label = {});

  template <class F>
  static FiniteMagma from_function(int m, F&& f, std::string label = {}) {
    std::vector<std::uint16_t> t(static_cast<std::size_t>(m) * m);
    for (int a = 1; a <= m; ++a)
      for (int b = 1; b <= m; ++b)
        t[static_cast<std::size_t>(a - 1) * m + (b - 1)] =
            static_cast<std::uint16_t>(f(a, b));
    return FiniteMagma(m, std::move(t), std::move(label));
  }

  int size() const { return m_; }
  int op(int a, int b) const {
    return table_[static_cast<std::size_t>(a - 1) * m_ + (b - 1)];
  }
  const std::vector<std::uint16_t>& table() const { return table_; }
  const std::string& label() const { return label_; }
  std::vector<int> row(int a) const;

  bool operator==(const FiniteMagma& other) const {
    return m_ == other.m_ && table_ == other.table_;
  }

 private:
  int m_ = 0;
  std::vector<std::uint16_t> table_;
  std::string label_;
};

// x*(y*z) = (x*y)*(x*z); returns the first failing (x,y,z) in lexicographic order.
std::optional<Triple> ld_violation(const FiniteMagma& M);
bool is_ld(const FiniteMagma& M);
bool rows_are_permutations(const FiniteMagma& M);
bool is_rack(const FiniteMagma& M);
bool is_quandle(const FiniteMagma& M);
bool is_left_cancellative(const FiniteMagma& M);
// (x*y)*(x*z) = (y*x)*(y*z)
std::optional<Triple> rump_violation(const FiniteMagma& M);
bool satisfies_rump_law(const FiniteMagma& M);

// a*b = 2a-b mod k, residues written 1..k.
FiniteMagma dihedral_quandle(int k);
// a*b = (1-t)a + tb mod m; requires gcd(t, m) = 1.
FiniteMagma affine_quandle(int m, int t);
// a*b = a b a^-1 for a group given by its 1-based multiplication table.
FiniteMagma conjugation_rack(const std::vector<std::vector<int>>& group_table);
// x*y = y
FiniteMagma trivial_rack(int m);

enum class LeftInverseStatus { Unique, Absent, Ambiguous };

struct LeftInverse {
  LeftInverseStatus status;
  int value = 0;  // meaningful only for Unique
};

// The unique c with a*c = b.
LeftInverse left_inverse_op(const FiniteMagma& M, int a, int b);

// Parses an m*m CSV table with entries in 1..m.
FiniteMagma magma_from_csv(const std::string& text, std::string label = {});

}  // namespace ldlab
