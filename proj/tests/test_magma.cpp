#include <doctest.h>

#include <algorithm>
#include <array>

#include "gen.hpp"
#include "ldlab/errors.hpp"
#include "ldlab/laver.hpp"
#include "ldlab/magma.hpp"

using namespace ldlab;

namespace {

bool oracle_ld(const FiniteMagma& M) {
  const int m = M.size();
  for (int x = 1; x <= m; ++x)
    for (int y = 1; y <= m; ++y)
      for (int z = 1; z <= m; ++z)
        if (M.op(x, M.op(y, z)) != M.op(M.op(x, y), M.op(x, z))) return false;
  return true;
}

}  // namespace

TEST_CASE("standard racks and quandles") {
  for (int k = 2; k <= 9; ++k) {
    CHECK(is_quandle(dihedral_quandle(k)));
    CHECK(is_rack(trivial_rack(k)));
    CHECK(is_quandle(trivial_rack(k)));
    const FiniteMagma cyclic = FiniteMagma::from_function(k, [k](int, int b) { return b % k + 1; });
    CHECK(is_rack(cyclic));
    CHECK(!is_quandle(cyclic));
  }
  CHECK(dihedral_quandle(3).op(1, 2) == 3);
  CHECK(is_quandle(affine_quandle(5, 2)));
  CHECK(is_quandle(affine_quandle(7, 3)));
  CHECK_THROWS_AS(affine_quandle(4, 2), DomainError);
}

TEST_CASE("conjugation rack of S_3") {
  // S_3 as permutations of {0,1,2}, 1-based indices.
  std::vector<std::array<int, 3>> el;
  std::array<int, 3> p{0, 1, 2};
  do el.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  auto idx = [&](std::array<int, 3> q) {
    return static_cast<int>(std::find(el.begin(), el.end(), q) - el.begin()) + 1;
  };
  std::vector<std::vector<int>> table(6, std::vector<int>(6));
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) {
      std::array<int, 3> c{};
      for (int i = 0; i < 3; ++i) c[i] = el[a][el[b][i]];
      table[a][b] = idx(c);
    }
  const FiniteMagma M = conjugation_rack(table);
  CHECK(is_quandle(M));
  // identity is central
  for (int b = 1; b <= 6; ++b) CHECK(M.op(1, b) == b);
}

TEST_CASE("LD predicate agrees with the triple loop on random magmas") {
  gen::Rng r(11);
  int ld_count = 0;
  for (int trial = 0; trial < 3000; ++trial) {
    const FiniteMagma M = gen::random_magma(r, r.uniform(1, 3));
    const bool ld = oracle_ld(M);
    ld_count += ld;
    REQUIRE(is_ld(M) == ld);
    const auto v = ld_violation(M);
    REQUIRE(v.has_value() == !ld);
    if (v) {
      const auto [x, y, z] = *v;
      CHECK(M.op(x, M.op(y, z)) != M.op(M.op(x, y), M.op(x, z)));
    }
  }
  CHECK(ld_count > 0);
}

TEST_CASE("Laver tables are LD but not racks beyond A_0") {
  for (int n = 0; n <= 5; ++n) {
    const LaverTable A = build_laver_table(n);
    CHECK(is_ld(A.magma));
    CHECK(rows_are_permutations(A.magma) == (n == 0));
    CHECK(!is_left_cancellative(A.magma) == (n > 0));
  }
}

TEST_CASE("left division") {
  const FiniteMagma D = dihedral_quandle(5);
  for (int a = 1; a <= 5; ++a)
    for (int b = 1; b <= 5; ++b) {
      const LeftInverse li = left_inverse_op(D, a, b);
      REQUIRE(li.status == LeftInverseStatus::Unique);
      CHECK(D.op(a, li.value) == b);
    }
  const FiniteMagma A = build_laver_table(2).magma;
  CHECK(left_inverse_op(A, 1, 1).status == LeftInverseStatus::Absent);
  CHECK(left_inverse_op(A, 1, 2).status == LeftInverseStatus::Ambiguous);
  CHECK(left_inverse_op(A, 4, 3).status == LeftInverseStatus::Unique);
}

TEST_CASE("Rump law") {
  CHECK(satisfies_rump_law(trivial_rack(3)));
  const FiniteMagma D = dihedral_quandle(3);
  const auto v = rump_violation(D);
  CHECK(v.has_value() == !satisfies_rump_law(D));
  if (v) {
    const auto [x, y, z] = *v;
    CHECK(D.op(D.op(x, y), D.op(x, z)) != D.op(D.op(y, x), D.op(y, z)));
  }
}

TEST_CASE("CSV tables") {
  const FiniteMagma M = magma_from_csv("2,4,2,4\n3,4,3,4\n4,4,4,4\n1,2,3,4\n");
  CHECK(M == build_laver_table(2).magma);
  CHECK_THROWS_AS(magma_from_csv("1,2\n1\n"), ParseError);
  CHECK_THROWS_AS(magma_from_csv("1,3\n1,1\n"), DomainError);
}
