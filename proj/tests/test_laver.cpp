#include <doctest.h>

#include <set>
#include <string>

#include "data_laver.hpp"
#include "gen.hpp"
#include "ldlab/errors.hpp"
#include "ldlab/laver.hpp"

using namespace ldlab;

namespace {

// Rows filled from the bottom: N*q = q, p*1 = p+1, p*(q+1) = (p*q)*(p+1)
// where p*q > p so its row is already known.
std::vector<std::vector<int>> oracle_laver(int N) {
  std::vector<std::vector<int>> t(N + 1, std::vector<int>(N + 1));
  for (int q = 1; q <= N; ++q) t[N][q] = q;
  for (int p = N - 1; p >= 1; --p) {
    t[p][1] = p + 1;
    for (int q = 1; q < N; ++q) t[p][q + 1] = t[t[p][q]][p + 1];
  }
  return t;
}

std::string csv(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

}  // namespace

TEST_CASE("A_0..A_4 match the printed tables") {
  for (int n = 0; n <= 4; ++n) {
    const LaverTable A = build_laver_table(n);
    REQUIRE(A.size == 1 << n);
    for (int p = 1; p <= A.size; ++p) CHECK(csv(A.magma.row(p)) == kPrintedLaver[n][p - 1]);
  }
}

TEST_CASE("build_laver_table agrees with the bottom-up oracle up to n = 8") {
  for (int n = 0; n <= 8; ++n) {
    const LaverTable A = build_laver_table(n);
    const auto t = oracle_laver(A.size);
    for (int p = 1; p <= A.size; ++p)
      for (int q = 1; q <= A.size; ++q) REQUIRE(A.at(p, q) == t[p][q]);
  }
}

TEST_CASE("first-row periods") {
  CHECK(period(build_laver_table(0), 1) == 1);
  // the printed row (2, 2) of A_1 gives period 1, as pi_n(2^n - 1) = 1 requires
  CHECK(period(build_laver_table(1), 1) == 1);
  CHECK(period(build_laver_table(2), 1) == 2);
  CHECK(period(build_laver_table(3), 1) == 4);
  CHECK(period(build_laver_table(4), 1) == 4);
  CHECK(period(build_laver_table(5), 1) == 8);
}

TEST_CASE("periods are powers of two and rows repeat with their period") {
  for (int n = 0; n <= 8; ++n) {
    const LaverTable A = build_laver_table(n);
    if (n > 0) CHECK(period(A, A.size - 1) == 1);
    CHECK(period(A, A.size) == A.size);
    for (int p = 1; p <= A.size; ++p) {
      const int pi = period(A, p);
      REQUIRE((pi & (pi - 1)) == 0);
      for (int q = 1; q + pi <= A.size; ++q) REQUIRE(A.at(p, q + pi) == A.at(p, q));
      // increasing up to the period
      for (int q = 1; q < pi; ++q) REQUIRE(A.at(p, q) < A.at(p, q + 1));
    }
  }
}

TEST_CASE("LD holds exactly for powers of two") {
  for (long N = 1; N <= 32; ++N) {
    const bool pow2 = (N & (N - 1)) == 0;
    const auto v = ld_violation_for_size(N);
    CHECK(v.has_value() == !pow2);
    if (v) {
      const GeneralTable G = build_general_table(N);
      const auto [x, y, z] = *v;
      CHECK(G.at(x, G.at(y, z)) != G.at(G.at(x, y), G.at(x, z)));
    }
  }
}

TEST_CASE("general table obeys its defining recursion") {
  for (long N : {3L, 5L, 6L, 12L}) {
    const GeneralTable G = build_general_table(N);
    for (int p = 1; p <= N; ++p) {
      CHECK(G.at(p, 1) == p % N + 1);
      for (int q = 1; q < N; ++q) CHECK(G.at(p, q + 1) == G.at(G.at(p, q), G.at(p, 1)));
    }
  }
}

TEST_CASE("projection is a surjective homomorphism") {
  for (int n = 1; n <= 5; ++n) {
    const LaverTable A = build_laver_table(n), B = build_laver_table(n - 1);
    std::set<int> image;
    for (int x = 1; x <= A.size; ++x) {
      image.insert(project(n, x));
      for (int y = 1; y <= A.size; ++y)
        REQUIRE(project(n, A.at(x, y)) == B.at(project(n, x), project(n, y)));
    }
    CHECK(static_cast<int>(image.size()) == B.size);
  }
}

TEST_CASE("first-row value sets project down the chain") {
  auto values = [](int n) {
    const LaverTable A = build_laver_table(n);
    auto r = A.magma.row(1);
    return std::set<int>(r.begin(), r.end());
  };
  CHECK(values(4) == std::set<int>{2, 12, 14, 16});
  CHECK(values(3) == std::set<int>{2, 4, 6, 8});
  CHECK(values(2) == std::set<int>{2, 4});
  std::set<int> down;
  for (int v : values(4)) down.insert(project(4, v));
  CHECK(down == values(3));
  std::set<int> down2;
  for (int v : values(3)) down2.insert(project(3, v));
  CHECK(down2 == values(2));
}

TEST_CASE("periods double or stay under projection") {
  for (int n = 1; n <= 8; ++n) CHECK(period_doubling_check(n));
}

TEST_CASE("left powers") {
  const LaverTable A = build_laver_table(2);
  CHECK(left_powers(A, 1, 4) == std::vector<int>{1, 2, 3, 4});
  const LaverTable B = build_laver_table(3);
  const auto p = left_powers(B, 1, 8);
  for (std::size_t k = 1; k < p.size(); ++k) CHECK(p[k] == B.at(p[k - 1], 1));
}

TEST_CASE("projection edge values") {
  CHECK(project(4, 16) == 8);
  CHECK(project(4, 9) == 1);
  CHECK(project(1, 2) == 1);
}

TEST_CASE("bound on table size") {
  CHECK_THROWS_AS(build_laver_table(20, 13), ResourceError);
  CHECK_THROWS_AS(build_laver_table(-1), DomainError);
}
