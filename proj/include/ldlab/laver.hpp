#pragma once

#include <optional>
#include <vector>

#include "ldlab/magma.hpp"

namespace ldlab {

constexpr int kDefaultLaverBound = 13;

// The unique system on {1..N} with p*1 = p+1 mod N and p*(q*1) = (p*q)*(p*1).
struct GeneralTable {
  int N = 0;
  FiniteMagma magma;
  int at(int p, int q) const { return magma.op(p, q); }
};

// A_n = GeneralTable for N = 2^n.
struct LaverTable {
  int n = 0;
  int size = 1;
  FiniteMagma magma;
  int at(int p, int q) const { return magma.op(p, q); }
};

GeneralTable build_general_table(long N);
LaverTable build_laver_table(int n, int bound = kDefaultLaverBound);

// LD law over all triples of the general table for N, with a witness on failure.
std::optional<Triple> ld_violation_for_size(long N);
bool is_ld_for_size(long N);

// Least q with p*q = 2^n.
int period(const LaverTable& table, int p);
// x mod 2^(n-1), with 0 written as 2^(n-1).
int project(int n, int x);
// pi_n(p) is pi_{n-1}(proj(p)) or twice that, for every p.
bool period_doubling_check(int n);
// x_[1] = x, x_[k+1] = x_[k] * x.
std::vector<int> left_powers(const LaverTable& table, int x, int k);

}  // namespace ldlab
