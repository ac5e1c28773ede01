#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ldlab/braid.hpp"

namespace ldlab {

constexpr std::size_t kDefaultClassBound = 1'000'000;

// Positive braids conjugate to a positive braid, each with a conjugator c
// such that member = c^-1 * beta * c.
struct ConjClass {
  int n = 3;
  std::vector<Braid> members;      // sorted by Braid::operator<
  std::vector<Braid> conjugators;  // parallel to members
};

// Closure of {beta} under conjugation by simple braids, keeping positive results.
ConjClass positive_conjugates(const Braid& beta, std::size_t bound = kDefaultClassBound);

enum class MuOrder { Flipped, D };
// Least positive conjugate; the flipped order reproduces the published table.
Braid mu(const Braid& beta, MuOrder order = MuOrder::Flipped,
         std::size_t bound = kDefaultClassBound);
bool is_conjugacy_min(const Braid& beta, MuOrder order = MuOrder::Flipped);

// mu(beta Delta^2) against sigma1 sigma2^2 sigma1 mu(beta) sigma1^2 in B_3,
// and against the flipped prefix sigma2 sigma1^2 sigma2 mu(beta) sigma1^2.
struct ConjectureCheck {
  Braid beta, mu_beta, lhs, rhs, rhs_flipped_prefix;
  bool holds = false;
  bool holds_flipped_prefix = false;
  // mu(mu(beta)) = mu(beta), mu constant on the class, exponent sums kept.
  bool consistent = false;
};
ConjectureCheck conjecture_mu_delta(const Braid& beta);

struct ConjectureSweep {
  std::vector<ConjectureCheck> rows;
  std::size_t counterexamples = 0;
  std::size_t flipped_prefix_counterexamples = 0;
  std::size_t inconsistencies = 0;
};
// Every positive 3-strand braid with at most max_len crossings, in flipped order.
ConjectureSweep sweep_conjecture(int max_len);

// All distinct positive n-strand braids with exactly len crossings.
std::vector<Braid> positive_braids_of_length(int n, int len);

}  // namespace ldlab
