#include "ldlab/laver.hpp"

#include <string>

#include "ldlab/errors.hpp"
#include "ldlab/resource.hpp"

namespace ldlab {

GeneralTable build_general_table(long N) {
  if (N < 1) throw DomainError("table size N must be >= 1");
  if (N > 65535) throw ResourceError("table size N must be <= 65535");
  const std::size_t n = static_cast<std::size_t>(N);
  require_memory(n * n * sizeof(std::uint16_t), "table of size " + std::to_string(N));
  std::vector<std::uint16_t> t(n * n);
  auto cell = [&](std::size_t p, std::size_t q) -> std::uint16_t& {
    return t[(p - 1) * n + (q - 1)];
  };
  // Row N is the identity; every other row p only reads rows > p.
  for (std::size_t q = 1; q <= n; ++q) cell(n, q) = static_cast<std::uint16_t>(q);
  for (std::size_t p = n - 1; p >= 1; --p) {
    cell(p, 1) = static_cast<std::uint16_t>(p + 1);
    for (std::size_t q = 2; q <= n; ++q) cell(p, q) = cell(cell(p, q - 1), p + 1);
  }
  GeneralTable g;
  g.N = static_cast<int>(N);
  g.magma = FiniteMagma(static_cast<int>(N), std::move(t), "general:" + std::to_string(N));
  return g;
}

LaverTable build_laver_table(int n, int bound) {
  if (n < 0) throw DomainError("Laver table index n must be >= 0");
  if (n > bound || n > 15)
    throw ResourceError("Laver table index n=" + std::to_string(n) +
                        " exceeds the configured bound " + std::to_string(bound));
  GeneralTable g = build_general_table(1L << n);
  LaverTable a;
  a.n = n;
  a.size = 1 << n;
  a.magma = FiniteMagma(a.size, g.magma.table(), "laver:" + std::to_string(n));
  return a;
}

std::optional<Triple> ld_violation_for_size(long N) {
  return ld_violation(build_general_table(N).magma);
}

bool is_ld_for_size(long N) { return !ld_violation_for_size(N); }

int period(const LaverTable& table, int p) {
  if (p < 1 || p > table.size) throw DomainError("p out of range 1..2^n");
  for (int q = 1; q <= table.size; ++q)
    if (table.at(p, q) == table.size) return q;
  throw DomainError("row never reaches 2^n");
}

int project(int n, int x) {
  if (n < 1) throw DomainError("projection needs n >= 1");
  if (x < 1 || x > (1 << n)) throw DomainError("x out of range 1..2^n");
  const int half = 1 << (n - 1);
  const int r = x % half;
  return r == 0 ? half : r;
}

bool period_doubling_check(int n) {
  if (n < 1) throw DomainError("period doubling needs n >= 1");
  LaverTable big = build_laver_table(n, n);
  LaverTable small = build_laver_table(n - 1, n);
  for (int p = 1; p <= big.size; ++p) {
    const int a = period(big, p);
    const int b = period(small, project(n, p));
    if (a != b && a != 2 * b) return false;
  }
  return true;
}

std::vector<int> left_powers(const LaverTable& table, int x, int k) {
  if (k < 1) throw DomainError("left_powers needs k >= 1");
  if (x < 1 || x > table.size) throw DomainError("x out of range");
  std::vector<int> out{x};
  while (static_cast<int>(out.size()) < k) out.push_back(table.at(out.back(), x));
  return out;
}

}  // namespace ldlab
