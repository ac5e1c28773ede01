#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ldlab/bigint.hpp"
#include "ldlab/braid.hpp"
#include "ldlab/ordinal.hpp"

namespace ldlab {

// -1, 0, 1 rendered as "<", "=", ">".
std::string render_cmp(int c);

// The i such that w contains sigma_i, no sigma_i^-1 and no sigma_j^{+-1} with j < i.
std::optional<int> sigma_positive_index(const BraidWord& w);

// (beta_p, ..., beta_1), each an (n-1)-strand positive braid, with
// beta = flip^{p-1}(beta_p) ... flip(beta_2) beta_1 and beta_p nontrivial.
struct SplittingSeq {
  int n = 3;
  std::vector<Braid> entries;
};

SplittingSeq splitting(const Braid& beta);
Braid recompose(const SplittingSeq& s);
// Recomposition plus maximality of every stripped divisor: after removing
// beta_1..beta_r and flipping, sigma_1 is the only generator right-dividing
// what is left.
bool is_normal_splitting(const SplittingSeq& s, const Braid& beta);

// Fully expanded splitting; leaves (n = 2) carry the sigma_1 exponent.
struct SplitTree {
  int n = 2;
  long exponent = 0;
  std::vector<SplitTree> children;
};
SplitTree split_tree(const Braid& beta);
// ShortLex on (beta_p, ..., beta_1), recursively.
int compare_trees(const SplitTree& a, const SplitTree& b);

// Flipped D-order on positive braids.
int compare_flipped(const Braid& a, const Braid& b);
// D-order on arbitrary braids.
int compare_D(const Braid& a, const Braid& b);
int compare_D(const BraidWord& u, const BraidWord& v);

// Exponents (e_p, ..., e_1) of the BP_3 normal form
// sigma_{parity(p)}^{e_p} ... sigma_2^{e_2} sigma_1^{e_1}.
std::vector<BigInt> bp3_normal_exponents(const Braid& beta);
// epsilon_1 = 0, epsilon_2 = 1, epsilon_r = 2 for r >= 3.
int bp3_epsilon(std::size_t r);
// Throws DomainError if the exponents violate the normal-form constraints.
void check_bp3_exponents(const std::vector<BigInt>& e);
BraidWord word_from_bp3_exponents(const std::vector<BigInt>& e);
OrdinalCNF rank_from_bp3_exponents(const std::vector<BigInt>& e);
OrdinalCNF rank_bp3(const Braid& beta);

BraidWord alternating_normal_form(const Braid& beta);

// Largest k with Delta^{2k} <=_D beta.
long d_floor(const Braid& beta);

}  // namespace ldlab
