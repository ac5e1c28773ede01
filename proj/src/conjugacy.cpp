#include "ldlab/conjugacy.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "ldlab/errors.hpp"
#include "ldlab/order.hpp"

namespace ldlab {

ConjClass positive_conjugates(const Braid& beta, std::size_t bound) {
  if (!beta.is_positive()) throw DomainError("positive conjugates need a positive braid");
  const int n = beta.strands();
  std::vector<PermBraid> simples;
  for (const auto& s : PermBraid::all(n))
    if (!s.is_identity()) simples.push_back(s);
  std::map<Braid, Braid> found{{beta, Braid(n)}};
  std::deque<Braid> queue{beta};
  while (!queue.empty()) {
    const Braid x = queue.front();
    queue.pop_front();
    const Braid cx = found.at(x);
    for (const auto& s : simples) {
      const Braid S = Braid::from_simple(s);
      Braid y = S.inverse() * x * S;
      if (!y.is_positive() || found.count(y)) continue;
      if (found.size() >= bound)
        throw ResourceError("positive conjugacy class exceeds " + std::to_string(bound) + " members");
      found.emplace(y, cx * S);
      queue.push_back(std::move(y));
    }
  }
  ConjClass out;
  out.n = n;
  for (auto& [m, c] : found) {
    out.members.push_back(m);
    out.conjugators.push_back(c);
  }
  return out;
}

Braid mu(const Braid& beta, MuOrder order, std::size_t bound) {
  const ConjClass cls = positive_conjugates(beta, bound);
  const Braid* best = &cls.members.front();
  for (const auto& m : cls.members) {
    const int c = order == MuOrder::Flipped ? compare_flipped(m, *best) : compare_D(m, *best);
    if (c < 0) best = &m;
  }
  return *best;
}

bool is_conjugacy_min(const Braid& beta, MuOrder order) { return mu(beta, order) == beta; }

ConjectureCheck conjecture_mu_delta(const Braid& beta) {
  if (beta.strands() != 3 || !beta.is_positive())
    throw DomainError("the conjecture is stated for positive 3-strand braids");
  ConjectureCheck r;
  r.beta = beta;
  const ConjClass cls = positive_conjugates(beta);
  r.mu_beta = mu(beta);
  r.lhs = mu(beta * Braid::delta(3, 2));
  r.rhs = Braid::from_letters(3, {1, 2, 2, 1}) * r.mu_beta * Braid::from_letters(3, {1, 1});
  r.rhs_flipped_prefix =
      Braid::from_letters(3, {2, 1, 1, 2}) * r.mu_beta * Braid::from_letters(3, {1, 1});
  r.holds = r.lhs == r.rhs;
  r.holds_flipped_prefix = r.lhs == r.rhs_flipped_prefix;
  bool ok = mu(r.mu_beta) == r.mu_beta && r.mu_beta.exponent_sum() == beta.exponent_sum() &&
            r.lhs.exponent_sum() == beta.exponent_sum() + 6;
  for (const auto& m : cls.members) ok = ok && mu(m) == r.mu_beta;
  r.consistent = ok;
  return r;
}

std::vector<Braid> positive_braids_of_length(int n, int len) {
  std::set<Braid> level{Braid(n)};
  for (int step = 0; step < len; ++step) {
    std::set<Braid> next;
    for (const auto& b : level)
      for (int i = 1; i < n; ++i) next.insert(b * Braid::generator(n, i));
    level = std::move(next);
  }
  return {level.begin(), level.end()};
}

ConjectureSweep sweep_conjecture(int max_len) {
  if (max_len < 0) throw DomainError("sweep length must be non-negative");
  std::vector<Braid> all;
  for (int len = 0; len <= max_len; ++len) {
    auto part = positive_braids_of_length(3, len);
    all.insert(all.end(), part.begin(), part.end());
  }
  std::sort(all.begin(), all.end(),
            [](const Braid& a, const Braid& b) { return compare_flipped(a, b) < 0; });
  ConjectureSweep out;
  for (const auto& b : all) {
    out.rows.push_back(conjecture_mu_delta(b));
    if (!out.rows.back().holds) ++out.counterexamples;
    if (!out.rows.back().holds_flipped_prefix) ++out.flipped_prefix_counterexamples;
    if (!out.rows.back().consistent) ++out.inconsistencies;
  }
  return out;
}

}  // namespace ldlab
