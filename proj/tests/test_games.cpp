#include <doctest.h>

#include "gen.hpp"
#include "ldlab/errors.hpp"
#include "ldlab/games.hpp"
#include "ldlab/order.hpp"

using namespace ldlab;

namespace {

Braid B3(std::vector<int> letters) { return Braid::from_letters(3, std::move(letters)); }

long naive_ack(int r, long x) {
  if (r == 0) return x + 1;
  if (x == 0) return naive_ack(r - 1, 1);
  return naive_ack(r - 1, naive_ack(r, x - 1));
}

}  // namespace

TEST_CASE("trace from sigma2^2 sigma1^2") {
  const std::vector<std::vector<int>> expect = {
      {2, 2, 1, 1}, {2, 2, 1}, {2, 2}, {2, 1, 1, 1}, {2, 1, 1}, {2, 1}, {2}, {1, 1, 1, 1, 1, 1, 1},
      {1, 1, 1, 1, 1, 1}, {1, 1, 1, 1, 1}, {1, 1, 1, 1}, {1, 1, 1}, {1, 1}, {1}, {}};
  const auto t = g3_trace(B3({2, 2, 1, 1}), 100);
  REQUIRE(t.size() == expect.size());
  for (std::size_t i = 0; i < t.size(); ++i) CHECK(t[i] == B3(expect[i]));
  CHECK(g3_is_descending(t));
  CHECK(g3_length(B3({2, 2, 1, 1})).steps == 14);
}

TEST_CASE("lengths") {
  CHECK(g3_length(Braid::delta(3)).steps == 30);
  CHECK(g3_length(Braid(3)).steps == 0);
  CHECK(g3_trace(Braid(3), 10).empty());
  CHECK(g3_length(B3({1, 1, 1})).steps == 3);
  const G3Length big = g3_length(B3({1, 1, 2, 2, 1, 1}), BigInt(1) << 60);
  CHECK(big.finished);
  CHECK(big.steps == BigInt(41) * (BigInt(1) << 41) - 2);
  CHECK(big.steps == BigInt("90159953477630"));
  const G3Length capped = g3_length(B3({1, 1, 2, 2, 1, 1}), 1000);
  CHECK(!capped.finished);
  CHECK(capped.steps == 1000);
}

TEST_CASE("epsilon rule lengths") {
  CHECK(g3_length(B3({2, 2, 1, 1}), kDefaultG3Cap, G3Rule::Epsilon).steps == 14);
  CHECK(g3_length(Braid::delta(3), kDefaultG3Cap, G3Rule::Epsilon).steps == 30);
  CHECK(g3_block_minimum(2, G3Rule::Epsilon) == 1);
  CHECK(g3_block_minimum(2, G3Rule::InnerTwo) == 2);
  CHECK(g3_block_minimum(1, G3Rule::InnerTwo) == 0);
}

TEST_CASE("every move lowers the rank") {
  // Blocks grow by t per move, so long prefixes are followed on exponents only.
  for (G3Rule rule : {G3Rule::InnerTwo, G3Rule::Epsilon})
    for (const Braid& b : gen::positive_braids_upto(3, 5)) {
      CHECK(g3_is_descending(g3_trace(b, 40, rule)));
      G3State s = g3_start(b, rule);
      OrdinalCNF prev = rank_from_bp3_exponents(s.exponents);
      for (int k = 0; k < 3000 && !s.finished(); ++k) {
        g3_advance(s);
        const OrdinalCNF cur = rank_from_bp3_exponents(s.exponents);
        REQUIRE(ordinal_cmp(cur, prev) < 0);
        prev = cur;
      }
    }
}

TEST_CASE("traces replay through single moves") {
  for (const Braid& b : gen::positive_braids_upto(3, 4)) {
    const auto t = g3_trace(b, 100);
    for (std::size_t i = 1; i < t.size(); ++i) {
      const auto e = g3_step(bp3_normal_exponents(t[i - 1]), BigInt(i));
      REQUIRE(Braid::from_word(word_from_bp3_exponents(e)) == t[i]);
    }
  }
  CHECK_THROWS_AS(g3_step({}, 1), DomainError);
}

TEST_CASE("fast forward changes nothing") {
  gen::Rng r(61);
  for (int k = 0; k < 60; ++k) {
    const Braid b = Braid::from_word(gen::random_word(r, 3, r.uniform(1, 6), true));
    const BigInt budget = r.uniform(1, 20000);
    G3State fast = g3_start(b), slow = g3_start(b);
    g3_run(fast, budget, true);
    g3_run(slow, budget, false);
    REQUIRE(fast == slow);
  }
}

TEST_CASE("checkpoint and resume over a 10^7 prefix") {
  const Braid b = B3({1, 1, 2, 2, 1, 1});
  G3State straight = g3_start(b);
  g3_run(straight, 10'000'000, false);
  G3State chunked = g3_start(b);
  for (int i = 0; i < 4; ++i) {
    g3_run(chunked, 2'500'000, false);
    chunked = g3_restore(g3_checkpoint(chunked));
  }
  CHECK(chunked == straight);
  CHECK(straight.steps == 10'000'000);
  g3_run(chunked, BigInt(1) << 60, true);
  CHECK(chunked.finished());
  CHECK(chunked.steps == BigInt("90159953477630"));
}

TEST_CASE("restore rejects malformed checkpoints") {
  CHECK_THROWS_AS(g3_restore("not json"), ParseError);
  CHECK_THROWS_AS(g3_restore(R"({"exponents": ["0", "1"], "steps": "3", "rule": "inner-two"})"), ParseError);
  CHECK_THROWS_AS(g3_restore(R"({"exponents": ["1"], "steps": "x", "rule": "inner-two"})"), ParseError);
  CHECK_THROWS_AS(g3_restore(R"({"exponents": ["1"], "steps": "3", "rule": "other"})"), ParseError);
  const G3State s = g3_restore(R"({"exponents": ["2", "2"], "steps": "0", "rule": "epsilon"})");
  CHECK(s.rule == G3Rule::Epsilon);
  CHECK(s.next_t() == 1);
}

TEST_CASE("Ackermann functions") {
  CHECK(ackermann(0, 5) == 6);
  CHECK(ackermann(1, 3) == 5);
  for (int r = 0; r <= 3; ++r)
    for (long x = 0; x <= (r == 3 ? 5 : 8); ++x) CHECK(ackermann(r, x) == naive_ack(r, x));
  CHECK(ackermann(3, 10) == (BigInt(1) << 13) - 3);
  CHECK(ackermann_diag(2) == 7);
  CHECK(ackermann_diag(3) == 61);
  CHECK_THROWS_AS(ackermann(3, 40, 1000), ResourceError);
}
