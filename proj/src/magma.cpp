#include "ldlab/magma.hpp"

#include <numeric>
#include <sstream>

#include "ldlab/errors.hpp"
#include "ldlab/resource.hpp"

namespace ldlab {

FiniteMagma::FiniteMagma(int m, std::vector<std::uint16_t> table, std::string label)
    : m_(m), table_(std::move(table)), label_(std::move(label)) {
  if (m < 1 || m > 65535) throw DomainError("magma size must be in 1..65535");
  if (table_.size() != static_cast<std::size_t>(m) * m)
    throw DomainError("magma table must have m*m entries");
  for (auto v : table_)
    if (v < 1 || v > m) throw DomainError("magma table entry out of range 1..m");
}

std::vector<int> FiniteMagma::row(int a) const {
  std::vector<int> r(m_);
  for (int b = 1; b <= m_; ++b) r[b - 1] = op(a, b);
  return r;
}

std::optional<Triple> ld_violation(const FiniteMagma& M) {
  const int m = M.size();
  for (int x = 1; x <= m; ++x)
    for (int y = 1; y <= m; ++y) {
      const int xy = M.op(x, y);
      for (int z = 1; z <= m; ++z)
        if (M.op(x, M.op(y, z)) != M.op(xy, M.op(x, z))) return Triple{x, y, z};
    }
  return std::nullopt;
}

bool is_ld(const FiniteMagma& M) { return !ld_violation(M); }

bool rows_are_permutations(const FiniteMagma& M) {
  const int m = M.size();
  std::vector<char> seen(m + 1);
  for (int a = 1; a <= m; ++a) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int b = 1; b <= m; ++b) {
      int c = M.op(a, b);
      if (seen[c]) return false;
      seen[c] = 1;
    }
  }
  return true;
}

bool is_left_cancellative(const FiniteMagma& M) { return rows_are_permutations(M); }

bool is_rack(const FiniteMagma& M) { return rows_are_permutations(M) && is_ld(M); }

bool is_quandle(const FiniteMagma& M) {
  for (int x = 1; x <= M.size(); ++x)
    if (M.op(x, x) != x) return false;
  return is_rack(M);
}

std::optional<Triple> rump_violation(const FiniteMagma& M) {
  const int m = M.size();
  for (int x = 1; x <= m; ++x)
    for (int y = 1; y <= m; ++y) {
      const int xy = M.op(x, y), yx = M.op(y, x);
      for (int z = 1; z <= m; ++z)
        if (M.op(xy, M.op(x, z)) != M.op(yx, M.op(y, z))) return Triple{x, y, z};
    }
  return std::nullopt;
}

bool satisfies_rump_law(const FiniteMagma& M) { return !rump_violation(M); }

namespace {
int mod1(long long v, int k) {
  long long r = ((v % k) + k) % k;
  return r == 0 ? k : static_cast<int>(r);
}
}  // namespace

FiniteMagma dihedral_quandle(int k) {
  if (k < 1) throw DomainError("dihedral quandle needs k >= 1");
  return FiniteMagma::from_function(
      k, [k](int a, int b) { return mod1(2LL * a - b, k); },
      "dihedral:" + std::to_string(k));
}

FiniteMagma affine_quandle(int m, int t) {
  if (m < 1) throw DomainError("affine quandle needs m >= 1");
  if (std::gcd(((t % m) + m) % m, m) != 1 && m > 1)
    throw DomainError("affine quandle needs gcd(t, m) = 1");
  return FiniteMagma::from_function(
      m, [m, t](int a, int b) { return mod1((1LL - t) * a + 1LL * t * b, m); },
      "affine:" + std::to_string(m) + ":" + std::to_string(t));
}

FiniteMagma conjugation_rack(const std::vector<std::vector<int>>& g) {
  const int n = static_cast<int>(g.size());
  if (n < 1) throw DomainError("group table is empty");
  for (const auto& r : g) {
    if (static_cast<int>(r.size()) != n) throw DomainError("group table is not square");
    for (int v : r)
      if (v < 1 || v > n) throw DomainError("group table entry out of range");
  }
  auto mul = [&](int a, int b) { return g[a - 1][b - 1]; };
  int e = 0;
  for (int c = 1; c <= n && e == 0; ++c) {
    bool ok = true;
    for (int a = 1; a <= n && ok; ++a) ok = mul(c, a) == a && mul(a, c) == a;
    if (ok) e = c;
  }
  if (e == 0) throw DomainError("group table has no identity");
  for (int a = 1; a <= n; ++a)
    for (int b = 1; b <= n; ++b)
      for (int c = 1; c <= n; ++c)
        if (mul(mul(a, b), c) != mul(a, mul(b, c)))
          throw DomainError("group table is not associative");
  std::vector<int> inv(n + 1, 0);
  for (int a = 1; a <= n; ++a)
    for (int b = 1; b <= n; ++b)
      if (mul(a, b) == e) inv[a] = b;
  for (int a = 1; a <= n; ++a)
    if (inv[a] == 0 || mul(inv[a], a) != e) throw DomainError("group table has no inverses");
  return FiniteMagma::from_function(
      n, [&](int a, int b) { return mul(mul(a, b), inv[a]); }, "conjugation");
}

FiniteMagma trivial_rack(int m) {
  return FiniteMagma::from_function(m, [](int, int b) { return b; }, "trivial");
}

LeftInverse left_inverse_op(const FiniteMagma& M, int a, int b) {
  if (a < 1 || a > M.size() || b < 1 || b > M.size())
    throw DomainError("element out of range");
  LeftInverse r{LeftInverseStatus::Absent, 0};
  for (int c = 1; c <= M.size(); ++c) {
    if (M.op(a, c) != b) continue;
    if (r.status == LeftInverseStatus::Unique) return {LeftInverseStatus::Ambiguous, 0};
    r = {LeftInverseStatus::Unique, c};
  }
  return r;
}

FiniteMagma magma_from_csv(const std::string& text, std::string label) {
  std::vector<std::vector<long>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    std::vector<long> row;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) {
      try {
        std::size_t pos = 0;
        row.push_back(std::stol(cell, &pos));
        if (cell.find_first_not_of(" \t", pos) != std::string::npos) throw std::exception();
      } catch (const std::exception&) {
        throw ParseError("invalid CSV cell '" + cell + "' on row " +
                         std::to_string(rows.size() + 1));
      }
    }
    rows.push_back(std::move(row));
  }
  const std::size_t m = rows.size();
  if (m == 0) throw ParseError("empty CSV table");
  require_memory(m * m * sizeof(std::uint16_t), "magma table");
  std::vector<std::uint16_t> t;
  t.reserve(m * m);
  for (std::size_t i = 0; i < m; ++i) {
    if (rows[i].size() != m)
      throw ParseError("CSV row " + std::to_string(i + 1) + " has " +
                       std::to_string(rows[i].size()) + " cells, expected " +
                       std::to_string(m));
    for (long v : rows[i]) {
      if (v < 1 || v > static_cast<long>(m))
        throw DomainError("CSV entry " + std::to_string(v) + " out of range 1.." +
                          std::to_string(m));
      t.push_back(static_cast<std::uint16_t>(v));
    }
  }
  return FiniteMagma(static_cast<int>(m), std::move(t), std::move(label));
}

}  // namespace ldlab
