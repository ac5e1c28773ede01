#include "ldlab/order.hpp"

#include <algorithm>

#include "ldlab/errors.hpp"

namespace ldlab {

std::string render_cmp(int c) { return c < 0 ? "<" : (c > 0 ? ">" : "="); }

std::optional<int> sigma_positive_index(const BraidWord& w) {
  if (w.letters.empty()) return std::nullopt;
  int i = std::abs(w.letters.front());
  for (int l : w.letters) i = std::min(i, std::abs(l));
  for (int l : w.letters)
    if (l == -i) return std::nullopt;
  return i;
}

namespace {

void require_positive(const Braid& b, const char* what) {
  if (!b.is_positive()) throw DomainError(std::string(what) + " requires a positive braid");
}

Braid flip_power(const Braid& b, std::size_t k) { return k % 2 ? b.flip() : b; }

}  // namespace

SplittingSeq splitting(const Braid& beta) {
  require_positive(beta, "splitting");
  const int n = beta.strands();
  if (n < 3) throw DomainError("splitting needs at least 3 strands");
  SplittingSeq s{n, {}};
  Braid rem = beta;
  while (!rem.is_identity()) {
    auto [r, d] = split_parabolic_right(rem, n - 1);
    s.entries.push_back(with_strands(d, n - 1));
    rem = r.flip();
  }
  std::reverse(s.entries.begin(), s.entries.end());
  return s;
}

Braid recompose(const SplittingSeq& s) {
  Braid out(s.n);
  const std::size_t p = s.entries.size();
  for (std::size_t k = 0; k < p; ++k)
    out *= flip_power(with_strands(s.entries[k], s.n), p - 1 - k);
  return out;
}

bool is_normal_splitting(const SplittingSeq& s, const Braid& beta) {
  if (!(recompose(s) == beta)) return false;
  const std::size_t p = s.entries.size();
  if (p == 0) return beta.is_identity();
  if (s.entries.front().is_identity()) return false;
  Braid rem = beta;
  for (std::size_t r = 1; r <= p; ++r) {
    rem = (rem * with_strands(s.entries[p - r], s.n).inverse());
    if (!rem.is_positive()) return false;
    rem = rem.flip();
    if (r == p) return rem.is_identity();
    if (!has_right_generator(rem, 1)) return false;
    for (int i = 2; i < s.n; ++i)
      if (has_right_generator(rem, i)) return false;
  }
  return true;
}

SplitTree split_tree(const Braid& beta) {
  require_positive(beta, "split_tree");
  SplitTree t;
  t.n = beta.strands();
  if (t.n <= 2) {
    t.exponent = beta.exponent_sum();
    return t;
  }
  for (const auto& e : splitting(beta).entries) t.children.push_back(split_tree(e));
  return t;
}

int compare_trees(const SplitTree& a, const SplitTree& b) {
  if (a.n <= 2) return a.exponent < b.exponent ? -1 : (a.exponent > b.exponent ? 1 : 0);
  if (a.children.size() != b.children.size())
    return a.children.size() < b.children.size() ? -1 : 1;
  for (std::size_t k = 0; k < a.children.size(); ++k)
    if (int c = compare_trees(a.children[k], b.children[k])) return c;
  return 0;
}

int compare_flipped(const Braid& a, const Braid& b) {
  if (a.strands() != b.strands()) throw DomainError("strand count mismatch");
  require_positive(a, "compare_flipped");
  require_positive(b, "compare_flipped");
  return compare_trees(split_tree(a), split_tree(b));
}

int compare_D(const Braid& a, const Braid& b) {
  if (a.strands() != b.strands()) throw DomainError("strand count mismatch");
  const int n = a.strands();
  if (n == 1) return 0;
  // Left-multiplying by the central Delta^{2K} makes both positive.
  const int need = std::max({0, -a.inf(), -b.inf()});
  const int K = (need + 1) / 2;
  Braid shift = Braid::delta(n, 2 * K);
  return compare_flipped((shift * a).flip(), (shift * b).flip());
}

int compare_D(const BraidWord& u, const BraidWord& v) {
  return compare_D(Braid::from_word(u), Braid::from_word(v));
}

int bp3_epsilon(std::size_t r) { return r == 1 ? 0 : (r == 2 ? 1 : 2); }

std::vector<BigInt> bp3_normal_exponents(const Braid& beta) {
  if (beta.strands() != 3) throw DomainError("BP3 normal form needs a 3-strand braid");
  std::vector<BigInt> e;
  for (const auto& entry : splitting(beta).entries) e.push_back(entry.exponent_sum());
  return e;
}

void check_bp3_exponents(const std::vector<BigInt>& e) {
  const std::size_t p = e.size();
  if (p == 0) return;
  if (e.front() < 1) throw DomainError("leading BP3 exponent must be >= 1");
  for (std::size_t r = 1; r < p; ++r)
    if (e[p - r] < bp3_epsilon(r))
      throw DomainError("BP3 exponent e_" + std::to_string(r) + " below its minimum");
}

BraidWord word_from_bp3_exponents(const std::vector<BigInt>& e) {
  check_bp3_exponents(e);
  BraidWord w{3, {}};
  const std::size_t p = e.size();
  for (std::size_t k = 0; k < p; ++k) {
    const std::size_t r = p - k;
    const int letter = r % 2 ? 1 : 2;
    if (e[k] > 1000000) throw ResourceError("exponent too large to expand into a word");
    const long count = e[k].convert_to<long>();
    w.letters.insert(w.letters.end(), count, letter);
  }
  return w;
}

OrdinalCNF rank_from_bp3_exponents(const std::vector<BigInt>& e) {
  check_bp3_exponents(e);
  const std::size_t p = e.size();
  OrdinalCNF out;
  if (p == 0) return out;
  out = OrdinalCNF::monomial(static_cast<unsigned>(p - 1), e.front());
  for (std::size_t r = p - 1; r >= 1; --r)
    out = ordinal_add(out, OrdinalCNF::monomial(static_cast<unsigned>(r - 1),
                                                e[p - r] - bp3_epsilon(r)));
  return out;
}

OrdinalCNF rank_bp3(const Braid& beta) {
  return rank_from_bp3_exponents(bp3_normal_exponents(beta));
}

BraidWord alternating_normal_form(const Braid& beta) {
  require_positive(beta, "alternating_normal_form");
  const int n = beta.strands();
  BraidWord w{n, {}};
  if (n <= 2) {
    w.letters.assign(beta.exponent_sum(), 1);
    return w;
  }
  const auto s = splitting(beta);
  const std::size_t p = s.entries.size();
  for (std::size_t k = 0; k < p; ++k) {
    BraidWord sub = alternating_normal_form(s.entries[k]);
    const bool flipped = (p - 1 - k) % 2 == 1;
    for (int l : sub.letters) w.letters.push_back(flipped ? n - l : l);
  }
  return w;
}

long d_floor(const Braid& beta) {
  const int n = beta.strands();
  auto floor_div2 = [](long x) { return x >= 0 ? x / 2 : -((-x + 1) / 2); };
  long lo = floor_div2(beta.inf());      // Delta^{2lo} <=_D beta
  long hi = floor_div2(beta.sup()) + 1;  // Delta^{2hi} >_D beta
  while (hi - lo > 1) {
    const long mid = lo + (hi - lo) / 2;
    if (compare_D(Braid::delta(n, static_cast<int>(2 * mid)), beta) <= 0)
      lo = mid;
    else
      hi = mid;
  }
  return lo;
}

}  // namespace ldlab
