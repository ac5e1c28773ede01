#include "ldlab/braid.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <sstream>

#include "ldlab/errors.hpp"

namespace ldlab {

void validate(const BraidWord& w) {
  if (w.n < 1 || w.n > kMaxStrands)
    throw DomainError("strand count must be in 1.." + std::to_string(kMaxStrands));
  for (int l : w.letters)
    if (l == 0 || std::abs(l) > w.n - 1)
      throw DomainError("generator index " + std::to_string(l) + " out of range for " +
                        std::to_string(w.n) + " strands");
}

BraidWord parse_braid_word(const std::string& text, int strands) {
  if (strands < 1 || strands > kMaxStrands)
    throw ParseError("strand count must be in 1.." + std::to_string(kMaxStrands));
  BraidWord w{strands, {}};
  std::istringstream in(text);
  std::string tok;
  int position = 0;
  while (in >> tok) {
    ++position;
    long v = 0;
    std::size_t used = 0;
    try {
      v = std::stol(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != tok.size())
      throw ParseError("token " + std::to_string(position) + " '" + tok +
                       "' is not an integer");
    if (v == 0)
      throw ParseError("token " + std::to_string(position) + " is 0; generators are nonzero");
    if (std::abs(v) > strands - 1)
      throw ParseError("token " + std::to_string(position) + " '" + tok +
                       "': generator index out of range for " + std::to_string(strands) +
                       " strands");
    w.letters.push_back(static_cast<int>(v));
  }
  return w;
}

std::string render_word(const std::vector<int>& letters) {
  std::string out;
  for (std::size_t k = 0; k < letters.size(); ++k) {
    if (k) out += ' ';
    out += std::to_string(letters[k]);
  }
  return out;
}

bool is_positive_word(const BraidWord& w) {
  return std::all_of(w.letters.begin(), w.letters.end(), [](int l) { return l > 0; });
}

BraidWord inverse_word(const BraidWord& w) {
  BraidWord r{w.n, {}};
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) r.letters.push_back(-*it);
  return r;
}

int exponent_sum(const BraidWord& w) {
  int s = 0;
  for (int l : w.letters) s += l > 0 ? 1 : -1;
  return s;
}

// ---------------------------------------------------------------- PermBraid

PermBraid::PermBraid(int n) {
  if (n < 1 || n > kMaxStrands)
    throw DomainError("strand count must be in 1.." + std::to_string(kMaxStrands));
  n_ = static_cast<std::uint8_t>(n);
  for (int k = 0; k < n; ++k) a_[k] = static_cast<std::uint8_t>(k);
}

PermBraid PermBraid::delta(int n) {
  PermBraid p(n);
  for (int k = 0; k < n; ++k) p.a_[k] = static_cast<std::uint8_t>(n - 1 - k);
  return p;
}

PermBraid PermBraid::generator(int n, int i) {
  if (i < 1 || i > n - 1) throw DomainError("generator index out of range");
  PermBraid p(n);
  p.swap_positions(i);
  return p;
}

PermBraid PermBraid::from_one_line(const std::vector<int>& image) {
  const int n = static_cast<int>(image.size());
  PermBraid p(n);
  std::vector<char> seen(n, 0);
  for (int s = 0; s < n; ++s) {
    const int pos = image[s] - 1;
    if (pos < 0 || pos >= n || seen[pos]) throw DomainError("not a permutation");
    seen[pos] = 1;
    p.a_[pos] = static_cast<std::uint8_t>(s);
  }
  return p;
}

std::vector<PermBraid> PermBraid::all(int n) {
  std::vector<PermBraid> out;
  PermBraid p(n);
  do {
    out.push_back(p);
  } while (std::next_permutation(p.a_.begin(), p.a_.begin() + n));
  return out;
}

bool PermBraid::is_identity() const {
  for (int k = 0; k < n_; ++k)
    if (a_[k] != k) return false;
  return true;
}

bool PermBraid::is_delta() const {
  for (int k = 0; k < n_; ++k)
    if (a_[k] != n_ - 1 - k) return false;
  return true;
}

int PermBraid::length() const {
  int inv = 0;
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j)
      if (a_[i] > a_[j]) ++inv;
  return inv;
}

bool PermBraid::left_divisible_by(int i) const {
  // strands i-1 and i (0-based starts) end in swapped order
  int pos_lo = -1, pos_hi = -1;
  for (int k = 0; k < n_; ++k) {
    if (a_[k] == i - 1) pos_lo = k;
    if (a_[k] == i) pos_hi = k;
  }
  return pos_lo > pos_hi;
}

bool PermBraid::right_divisible_by(int i) const { return a_[i - 1] > a_[i]; }

PermBraid PermBraid::inverse_perm() const {
  PermBraid r(n_);
  for (int k = 0; k < n_; ++k) r.a_[a_[k]] = static_cast<std::uint8_t>(k);
  return r;
}

PermBraid PermBraid::right_complement() const {
  PermBraid pos = inverse_perm();
  PermBraid r(n_);
  for (int k = 0; k < n_; ++k) r.a_[k] = pos.a_[n_ - 1 - k];
  return r;
}

PermBraid PermBraid::left_complement() const {
  PermBraid pos = inverse_perm();
  PermBraid r(n_);
  for (int j = 0; j < n_; ++j) r.a_[j] = static_cast<std::uint8_t>(n_ - 1 - pos.a_[j]);
  return r;
}

PermBraid PermBraid::tau() const {
  PermBraid r(n_);
  for (int k = 0; k < n_; ++k) r.a_[k] = static_cast<std::uint8_t>(n_ - 1 - a_[n_ - 1 - k]);
  return r;
}

PermBraid PermBraid::compose(const PermBraid& b) const {
  PermBraid r(n_);
  for (int k = 0; k < n_; ++k) r.a_[k] = a_[b.a_[k]];
  return r;
}

void PermBraid::swap_positions(int i) { std::swap(a_[i - 1], a_[i]); }

void PermBraid::swap_values(int i) {
  for (int k = 0; k < n_; ++k) {
    if (a_[k] == i - 1)
      a_[k] = static_cast<std::uint8_t>(i);
    else if (a_[k] == i)
      a_[k] = static_cast<std::uint8_t>(i - 1);
  }
}

std::vector<int> PermBraid::word() const {
  std::vector<int> w;
  PermBraid p = *this;
  while (!p.is_identity()) {
    for (int i = 1; i < n_; ++i) {
      if (p.right_divisible_by(i)) {
        w.push_back(i);
        p.swap_positions(i);
        break;
      }
    }
  }
  std::reverse(w.begin(), w.end());
  return w;
}

std::vector<int> PermBraid::one_line() const {
  std::vector<int> image(n_);
  for (int k = 0; k < n_; ++k) image[a_[k]] = k + 1;
  return image;
}

std::string PermBraid::render() const {
  std::string out;
  auto img = one_line();
  for (int k = 0; k < n_; ++k) {
    if (k) out += ' ';
    out += std::to_string(img[k]);
  }
  return out;
}

bool is_left_weighted(const PermBraid& a, const PermBraid& b) {
  for (int i = 1; i < a.n(); ++i)
    if (b.left_divisible_by(i) && !a.right_divisible_by(i)) return false;
  return true;
}

bool make_left_weighted(PermBraid& a, PermBraid& b) {
  bool changed = false;
  for (bool moved = true; moved;) {
    moved = false;
    for (int i = 1; i < a.n(); ++i) {
      if (b.left_divisible_by(i) && !a.right_divisible_by(i)) {
        a.swap_positions(i);
        b.swap_values(i);
        moved = changed = true;
      }
    }
  }
  return changed;
}

// -------------------------------------------------------------------- Braid

Braid::Braid(int n) : n_(n) {
  if (n < 1 || n > kMaxStrands)
    throw DomainError("strand count must be in 1.." + std::to_string(kMaxStrands));
}

Braid Braid::from_simple(const PermBraid& s) {
  Braid b(s.n());
  b.mul_simple(s);
  return b;
}

Braid Braid::delta(int n, int power) {
  Braid b(n);
  b.inf_ = power;
  return b;
}

Braid Braid::generator(int n, int i) {
  Braid b(n);
  if (i > 0) {
    b.mul_simple(PermBraid::generator(n, i));
  } else {
    b.mul_simple(PermBraid::generator(n, -i).right_complement());
    b.mul_delta(-1);
  }
  return b;
}

Braid Braid::from_word(const BraidWord& w) {
  validate(w);
  Braid b(w.n);
  for (int l : w.letters) {
    if (l > 0) {
      b.mul_simple(PermBraid::generator(w.n, l));
    } else {
      // sigma_i^-1 = sigma_i^* Delta^-1
      b.mul_simple(PermBraid::generator(w.n, -l).right_complement());
      b.mul_delta(-1);
    }
  }
  return b;
}

long Braid::exponent_sum() const {
  long s = static_cast<long>(inf_) * n_ * (n_ - 1) / 2;
  for (const auto& f : factors_) s += f.length();
  return s;
}

void Braid::mul_delta(int k) {
  inf_ += k;
  if (k % 2 != 0)
    for (auto& f : factors_) f = f.tau();
}

void Braid::mul_simple(const PermBraid& s) {
  if (s.n() != n_) throw DomainError("strand count mismatch");
  if (s.is_identity()) return;
  if (s.is_delta()) {
    mul_delta(1);
    return;
  }
  factors_.push_back(s);
  for (std::size_t j = factors_.size() - 1; j >= 1; --j)
    if (!make_left_weighted(factors_[j - 1], factors_[j])) break;
  std::size_t lead = 0;
  while (lead < factors_.size() && factors_[lead].is_delta()) ++lead;
  if (lead) {
    inf_ += static_cast<int>(lead);
    factors_.erase(factors_.begin(), factors_.begin() + lead);
  }
  std::erase_if(factors_, [](const PermBraid& f) { return f.is_identity(); });
}

Braid Braid::operator*(const Braid& b) const {
  Braid r = *this;
  r *= b;
  return r;
}

Braid& Braid::operator*=(const Braid& b) {
  if (b.n_ != n_) throw DomainError("strand count mismatch");
  mul_delta(b.inf_);
  for (const auto& f : b.factors_) mul_simple(f);
  return *this;
}

Braid Braid::inverse() const {
  // (Delta^d f_1..f_k)^-1 = Delta^-(k+d) tau^(k+d)(f_k^*) ... tau^(1+d)(f_1^*)
  const int k = static_cast<int>(factors_.size());
  Braid r(n_);
  r.inf_ = -(k + inf_);
  for (int j = k; j >= 1; --j) {
    PermBraid s = factors_[j - 1].right_complement();
    if (((j + inf_) % 2 + 2) % 2 == 1) s = s.tau();
    r.mul_simple(s);
  }
  return r;
}

Braid Braid::flip() const {
  Braid r = *this;
  for (auto& f : r.factors_) f = f.tau();
  return r;
}

BraidWord Braid::word() const {
  BraidWord w{n_, {}};
  const auto dw = PermBraid::delta(n_).word();
  if (inf_ >= 0) {
    for (int t = 0; t < inf_; ++t) w.letters.insert(w.letters.end(), dw.begin(), dw.end());
  } else {
    for (int t = 0; t < -inf_; ++t)
      for (auto it = dw.rbegin(); it != dw.rend(); ++it) w.letters.push_back(-*it);
  }
  for (const auto& f : factors_) {
    auto fw = f.word();
    w.letters.insert(w.letters.end(), fw.begin(), fw.end());
  }
  return w;
}

std::string Braid::render() const {
  std::string out = std::to_string(inf_) + " |";
  for (std::size_t k = 0; k < factors_.size(); ++k) {
    if (k) out += " ;";
    out += ' ';
    out += factors_[k].render();
  }
  return out;
}

bool Braid::is_normal() const {
  for (std::size_t k = 0; k < factors_.size(); ++k) {
    if (factors_[k].is_identity() || factors_[k].is_delta()) return false;
    if (k && !is_left_weighted(factors_[k - 1], factors_[k])) return false;
  }
  return true;
}

bool Braid::operator<(const Braid& o) const {
  if (n_ != o.n_) return n_ < o.n_;
  if (inf_ != o.inf_) return inf_ < o.inf_;
  return factors_ < o.factors_;
}

// ---------------------------------------------------------------- free functions

Braid normal_form(const BraidWord& w) { return Braid::from_word(w); }

bool equal(const BraidWord& u, const BraidWord& v) {
  if (u.n != v.n) throw DomainError("strand count mismatch");
  return normal_form(u) == normal_form(v);
}

bool is_positive(const BraidWord& w) { return normal_form(w).is_positive(); }

namespace {
void require_positive(const Braid& b, const char* what) {
  if (!b.is_positive()) throw DomainError(std::string(what) + " requires a positive braid");
}
}  // namespace

bool left_divides(const Braid& a, const Braid& b) { return (a.inverse() * b).is_positive(); }

bool right_divides(const Braid& a, const Braid& b) { return (b * a.inverse()).is_positive(); }

bool has_left_generator(const Braid& b, int i) {
  if (b.inf() > 0) return true;
  if (b.inf() < 0) return false;
  return !b.factors().empty() && b.factors().front().left_divisible_by(i);
}

bool has_right_generator(const Braid& b, int i) {
  return (b * Braid::generator(b.strands(), -i)).is_positive();
}

Braid left_gcd(const Braid& a0, const Braid& b0) {
  require_positive(a0, "left_gcd");
  require_positive(b0, "left_gcd");
  if (a0.strands() != b0.strands()) throw DomainError("strand count mismatch");
  const int n = a0.strands();
  Braid a = a0, b = b0, g(n);
  const int common = std::min(a.inf(), b.inf());
  if (common > 0) {
    g = Braid::delta(n, common);
    a = Braid::delta(n, -common) * a;
    b = Braid::delta(n, -common) * b;
  }
  for (bool found = true; found;) {
    found = false;
    for (int i = 1; i < n; ++i) {
      if (has_left_generator(a, i) && has_left_generator(b, i)) {
        g.mul_simple(PermBraid::generator(n, i));
        Braid inv = Braid::generator(n, -i);
        a = inv * a;
        b = inv * b;
        found = true;
        break;
      }
    }
  }
  return g;
}

std::pair<Braid, Braid> split_parabolic_right(const Braid& beta, int k) {
  require_positive(beta, "max_right_divisor_in_parabolic");
  const int n = beta.strands();
  if (k < 1 || k > n) throw DomainError("parabolic index k out of range");
  Braid rem = beta;
  std::vector<int> stripped;
  for (bool found = true; found;) {
    found = false;
    for (int i = 1; i <= k - 1; ++i) {
      Braid t = rem * Braid::generator(n, -i);
      if (t.is_positive()) {
        rem = std::move(t);
        stripped.push_back(i);
        found = true;
        break;
      }
    }
  }
  std::reverse(stripped.begin(), stripped.end());
  return {rem, Braid::from_letters(n, stripped)};
}

Braid max_right_divisor_in_parabolic(const Braid& beta, int k) {
  return split_parabolic_right(beta, k).second;
}

Braid flip(const Braid& beta) { return beta.flip(); }

// Via the minimal fraction, so a braid of a smaller parabolic can also shrink.
Braid with_strands(const Braid& beta, int n) {
  auto rewidth = [n](const Braid& p) {
    BraidWord w = p.word();
    w.n = n;
    return Braid::from_word(w);
  };
  if (beta.is_positive()) return rewidth(beta);
  const auto [den, num] = fraction_decomposition(beta);
  return rewidth(den).inverse() * rewidth(num);
}

namespace {

Braid shift_positive(const Braid& p, int ambient) {
  BraidWord w = p.word();
  w.n = ambient;
  for (int& l : w.letters) {
    l = l > 0 ? l + 1 : l - 1;
    if (std::abs(l) >= ambient) throw DomainError("ambient strand count too small for the shifted braid");
  }
  return Braid::from_word(w);
}

}  // namespace

// Shifts the minimal left fraction: its parts stay in the smallest parabolic
// containing beta, whereas Delta^inf would use every generator.
Braid shift(const Braid& beta, int ambient) {
  const auto [den, num] = fraction_decomposition(beta);
  return shift_positive(den, ambient).inverse() * shift_positive(num, ambient);
}

Braid shifted_conj(const Braid& beta, const Braid& gamma, int ambient) {
  if (ambient < std::max(beta.strands(), gamma.strands()) + 1)
    throw DomainError("ambient strand count too small for shifted conjugacy");
  Braid b = with_strands(beta, ambient);
  Braid g = with_strands(gamma, ambient);
  return b * shift(g, ambient) * Braid::generator(ambient, 1) * shift(b, ambient).inverse();
}

std::pair<Braid, Braid> fraction_decomposition(const Braid& beta) {
  const int n = beta.strands();
  if (beta.is_positive()) return {Braid(n), beta};
  const int r = -beta.inf();
  Braid first = Braid::delta(n, r);
  Braid second = first * beta;
  Braid g = left_gcd(first, second);
  Braid gi = g.inverse();
  return {gi * first, gi * second};
}

DeltaDecomposition delta_decomposition(const Braid& beta) {
  DeltaDecomposition out;
  out.d = std::max(0, -beta.inf());
  out.beta0 = Braid::delta(beta.strands(), out.d) * beta;
  return out;
}

}  // namespace ldlab
