#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ldlab/bigint.hpp"
#include "ldlab/braid.hpp"

namespace ldlab {

// Minimal size of a block below the leading one, which may always shrink to 0.
// InnerTwo: 0 for the final sigma_1 block, 2 for the others; reproduces the
// lengths 14, 30 and 90159953477630. Epsilon: epsilon_r, so 1 for block 2.
enum class G3Rule { InnerTwo, Epsilon };

// BP_3 normal-form exponents (e_p, ..., e_1) after `steps` moves; the next
// move uses t = steps + 1.
struct G3State {
  std::vector<BigInt> exponents;
  BigInt steps = 0;
  G3Rule rule = G3Rule::InnerTwo;

  bool finished() const { return exponents.empty(); }
  BigInt next_t() const { return steps + 1; }
  bool operator==(const G3State&) const = default;
};

G3State g3_start(const Braid& beta, G3Rule rule = G3Rule::InnerTwo);
int g3_block_minimum(std::size_t r, G3Rule rule);
// Index into exponents of the critical block: the rightmost block above its minimum.
std::size_t g3_critical(const std::vector<BigInt>& exponents, G3Rule rule = G3Rule::InnerTwo);
// One move with parameter t; throws DomainError on the trivial braid.
std::vector<BigInt> g3_step(const std::vector<BigInt>& exponents, const BigInt& t,
                            G3Rule rule = G3Rule::InnerTwo);
// Advance by one move, using next_t().
void g3_advance(G3State& s);
// Advance by up to `budget` moves. With fast_forward, runs where only the
// final sigma_1 block shrinks are taken in one jump; the result is identical.
void g3_run(G3State& s, const BigInt& budget, bool fast_forward = true);

constexpr std::uint64_t kDefaultG3Cap = 1'000'000'000;

struct G3Length {
  BigInt steps;
  bool finished = false;  // false: stopped at the cap with `steps` moves made
};
G3Length g3_length(const Braid& beta, const BigInt& cap = kDefaultG3Cap,
                   G3Rule rule = G3Rule::InnerTwo, bool fast_forward = true);

// States from beta down to 1, at most `limit` of them; empty for beta = 1.
std::vector<Braid> g3_trace(const Braid& beta, std::size_t limit, G3Rule rule = G3Rule::InnerTwo);
// rank_bp3 strictly decreasing along the sequence.
bool g3_is_descending(const std::vector<Braid>& trace);

// JSON object {"exponents": [...], "steps": "...", "rule": "..."}, integers as strings.
std::string g3_checkpoint(const G3State& s);
G3State g3_restore(const std::string& json_text);

constexpr std::uint64_t kAckermannBudget = 100'000'000;
// Ack_0(x) = x+1, Ack_r(0) = Ack_{r-1}(1), Ack_r(x+1) = Ack_{r-1}(Ack_r(x)); r <= 3.
BigInt ackermann(int r, std::uint64_t x, std::uint64_t budget = kAckermannBudget);
BigInt ackermann_diag(std::uint64_t x, std::uint64_t budget = kAckermannBudget);

}  // namespace ldlab
