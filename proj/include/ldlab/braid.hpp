#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace ldlab {

constexpr int kMaxStrands = 16;

// Letters i > 0 stand for sigma_i, i < 0 for sigma_|i|^-1; 1 <= |i| <= n-1.
struct BraidWord {
  int n = 2;
  std::vector<int> letters;

  bool operator==(const BraidWord&) const = default;
};

// Throws DomainError unless n is supported and every letter is in range.
void validate(const BraidWord& w);
BraidWord parse_braid_word(const std::string& text, int strands);
std::string render_word(const std::vector<int>& letters);
inline std::string render_word(const BraidWord& w) { return render_word(w.letters); }
bool is_positive_word(const BraidWord& w);
BraidWord inverse_word(const BraidWord& w);
int exponent_sum(const BraidWord& w);

// Positive braid in which every pair of strands crosses at most once.
// Stored as the array of strands read by position after the crossings:
// at(k) is the (0-based) starting position of the strand ending at position k.
class PermBraid {
 public:
  PermBraid() : PermBraid(2) {}
  explicit PermBraid(int n);
  static PermBraid delta(int n);
  static PermBraid generator(int n, int i);
  // 1-based one-line notation: image[i-1] = final position of strand i.
  static PermBraid from_one_line(const std::vector<int>& image);
  // All n! permutation braids in lexicographic order of their arrays.
  static std::vector<PermBraid> all(int n);

  int n() const { return n_; }
  int at(int k) const { return a_[k]; }
  bool is_identity() const;
  bool is_delta() const;
  int length() const;  // number of crossings

  bool left_divisible_by(int i) const;   // sigma_i is a prefix
  bool right_divisible_by(int i) const;  // sigma_i is a suffix
  // s * s.right_complement() = Delta
  PermBraid right_complement() const;
  // s.left_complement() * s = Delta
  PermBraid left_complement() const;
  // Delta s Delta^-1, i.e. sigma_i -> sigma_{n-i}
  PermBraid tau() const;
  // Product of the underlying permutations; a braid product only when lengths add.
  PermBraid compose(const PermBraid& b) const;
  PermBraid inverse_perm() const;
  // Move sigma_i from the left end of *this onto the right end of `left`.
  void swap_positions(int i);  // this * sigma_i
  void swap_values(int i);     // sigma_i^-1 * this (when sigma_i is a prefix)

  std::vector<int> word() const;
  std::vector<int> one_line() const;
  std::string render() const;

  auto operator<=>(const PermBraid&) const = default;

 private:
  std::uint8_t n_ = 2;
  std::array<std::uint8_t, kMaxStrands> a_{};
};

// Makes (a, b) left-weighted without changing the product ab. Returns whether
// anything moved.
bool make_left_weighted(PermBraid& a, PermBraid& b);
bool is_left_weighted(const PermBraid& a, const PermBraid& b);

// Garside left normal form Delta^inf * f_1 ... f_k: factors are neither trivial
// nor Delta, consecutive pairs are left-weighted. Canonical for the braid.
class Braid {
 public:
  Braid() : Braid(2) {}
  explicit Braid(int n);
  static Braid from_word(const BraidWord& w);
  static Braid from_letters(int n, const std::vector<int>& letters) {
    return from_word(BraidWord{n, letters});
  }
  static Braid delta(int n, int power = 1);
  static Braid generator(int n, int i);
  static Braid from_simple(const PermBraid& s);

  int strands() const { return n_; }
  int inf() const { return inf_; }
  int sup() const { return inf_ + static_cast<int>(factors_.size()); }
  const std::vector<PermBraid>& factors() const { return factors_; }
  bool is_identity() const { return inf_ == 0 && factors_.empty(); }
  bool is_positive() const { return inf_ >= 0; }
  // Image in Z of the abelianisation; the letter count for positive braids.
  long exponent_sum() const;

  Braid operator*(const Braid& b) const;
  Braid& operator*=(const Braid& b);
  Braid inverse() const;
  void mul_simple(const PermBraid& s);
  void mul_delta(int k);
  // Delta-conjugation sigma_i -> sigma_{n-i}.
  Braid flip() const;

  BraidWord word() const;
  // "d | p1 ; p2 ; ..." with each factor in one-line notation.
  std::string render() const;
  // Left normal form invariants; used by tests.
  bool is_normal() const;

  bool operator==(const Braid&) const = default;
  bool operator<(const Braid& o) const;

 private:
  int n_ = 2;
  int inf_ = 0;
  std::vector<PermBraid> factors_;
};

Braid normal_form(const BraidWord& w);
bool equal(const BraidWord& u, const BraidWord& v);
bool is_positive(const BraidWord& w);

// All operations below require positive arguments unless stated.
bool left_divides(const Braid& a, const Braid& b);
bool right_divides(const Braid& a, const Braid& b);
bool has_left_generator(const Braid& b, int i);
bool has_right_generator(const Braid& b, int i);
Braid left_gcd(const Braid& a, const Braid& b);
// Largest right divisor lying in BP_k (generators sigma_1..sigma_{k-1}).
Braid max_right_divisor_in_parabolic(const Braid& beta, int k);
// beta = remainder * divisor with divisor the maximal BP_k right divisor.
std::pair<Braid, Braid> split_parabolic_right(const Braid& beta, int k);

Braid flip(const Braid& beta);
// sigma_i -> sigma_{i+1}, landing in B_ambient.
Braid shift(const Braid& beta, int ambient);
// beta * sh(gamma) * sigma_1 * sh(beta)^-1 in B_ambient.
Braid shifted_conj(const Braid& beta, const Braid& gamma, int ambient);
// Same braid viewed with a different strand count; letters must fit.
Braid with_strands(const Braid& beta, int n);

// beta = first^-1 * second with first, second positive and coprime on the left.
std::pair<Braid, Braid> fraction_decomposition(const Braid& beta);

struct DeltaDecomposition {
  int d = 0;
  Braid beta0;
};
// beta = Delta^-d * beta0 with beta0 positive, d >= 0, and Delta not a prefix
// of beta0 when d > 0.
DeltaDecomposition delta_decomposition(const Braid& beta);

}  // namespace ldlab
