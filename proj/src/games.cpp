#include "ldlab/games.hpp"

#include <json.hpp>

#include "ldlab/errors.hpp"
#include "ldlab/order.hpp"

namespace ldlab {

G3State g3_start(const Braid& beta, G3Rule rule) {
  if (beta.strands() != 3 || !beta.is_positive())
    throw DomainError("G3 sequences start from a positive 3-strand braid");
  return G3State{bp3_normal_exponents(beta), 0, rule};
}

int g3_block_minimum(std::size_t r, G3Rule rule) {
  if (rule == G3Rule::Epsilon) return bp3_epsilon(r);
  return r == 1 ? 0 : 2;
}

std::size_t g3_critical(const std::vector<BigInt>& e, G3Rule rule) {
  const std::size_t p = e.size();
  // e[p - r] is block r
  for (std::size_t r = 1; r < p; ++r)
    if (e[p - r] > g3_block_minimum(r, rule)) return p - r;
  return 0;
}

std::vector<BigInt> g3_step(const std::vector<BigInt>& exponents, const BigInt& t, G3Rule rule) {
  if (exponents.empty()) throw DomainError("G3 step on the trivial braid");
  std::vector<BigInt> e = exponents;
  const std::size_t c = g3_critical(e, rule);
  --e[c];
  if (c + 1 < e.size()) e[c + 1] += t;
  std::size_t lead = 0;
  while (lead < e.size() && e[lead] == 0) ++lead;
  e.erase(e.begin(), e.begin() + static_cast<std::ptrdiff_t>(lead));
  return e;
}

void g3_advance(G3State& s) {
  s.exponents = g3_step(s.exponents, s.next_t(), s.rule);
  ++s.steps;
}

void g3_run(G3State& s, const BigInt& budget, bool fast_forward) {
  BigInt left = budget;
  while (left > 0 && !s.finished()) {
    const std::size_t c = g3_critical(s.exponents, s.rule);
    if (fast_forward && c + 1 == s.exponents.size()) {
      // Only the final block moves until it is exhausted.
      BigInt k = s.exponents.back();
      if (k > left) k = left;
      s.exponents.back() -= k;
      s.steps += k;
      left -= k;
      if (s.exponents.size() == 1 && s.exponents.back() == 0) s.exponents.clear();
      continue;
    }
    g3_advance(s);
    --left;
  }
}

G3Length g3_length(const Braid& beta, const BigInt& cap, G3Rule rule, bool fast_forward) {
  G3State s = g3_start(beta, rule);
  g3_run(s, cap, fast_forward);
  return {s.steps, s.finished()};
}

std::vector<Braid> g3_trace(const Braid& beta, std::size_t limit, G3Rule rule) {
  G3State s = g3_start(beta, rule);
  std::vector<Braid> out;
  if (s.finished()) return out;
  for (;;) {
    if (out.size() >= limit) break;
    out.push_back(Braid::from_word(word_from_bp3_exponents(s.exponents)));
    if (s.finished()) break;
    g3_advance(s);
  }
  return out;
}

bool g3_is_descending(const std::vector<Braid>& trace) {
  for (std::size_t i = 1; i < trace.size(); ++i)
    if (ordinal_cmp(rank_bp3(trace[i]), rank_bp3(trace[i - 1])) >= 0) return false;
  return true;
}

std::string g3_checkpoint(const G3State& s) {
  nlohmann::json j;
  j["exponents"] = nlohmann::json::array();
  for (const auto& e : s.exponents) j["exponents"].push_back(e.str());
  j["steps"] = s.steps.str();
  j["rule"] = s.rule == G3Rule::InnerTwo ? "inner-two" : "epsilon";
  return j.dump();
}

G3State g3_restore(const std::string& text) {
  G3State s;
  try {
    const auto j = nlohmann::json::parse(text);
    for (const auto& e : j.at("exponents")) s.exponents.emplace_back(e.get<std::string>());
    s.steps = BigInt(j.at("steps").get<std::string>());
    const std::string rule = j.value("rule", std::string("inner-two"));
    if (rule != "inner-two" && rule != "epsilon") throw ParseError("unknown rule " + rule);
    s.rule = rule == "epsilon" ? G3Rule::Epsilon : G3Rule::InnerTwo;
  } catch (const std::exception& ex) {
    throw ParseError(std::string("bad G3 checkpoint: ") + ex.what());
  }
  try {
    check_bp3_exponents(s.exponents);
  } catch (const DomainError& ex) {
    throw ParseError(std::string("bad G3 checkpoint: ") + ex.what());
  }
  if (s.steps < 0) throw ParseError("bad G3 checkpoint: negative step count");
  return s;
}

BigInt ackermann(int r, std::uint64_t x, std::uint64_t budget) {
  if (r < 0 || r > 3) throw DomainError("Ackermann level must be in 0..3");
  std::vector<int> stack{r};
  std::uint64_t ops = 0;
  while (!stack.empty()) {
    if (++ops > budget) throw ResourceError("Ackermann evaluation exceeds its step budget");
    const int level = stack.back();
    stack.pop_back();
    if (level == 0) {
      ++x;
    } else if (x == 0) {
      stack.push_back(level - 1);
      x = 1;
    } else {
      stack.push_back(level - 1);
      stack.push_back(level);
      --x;
    }
  }
  return BigInt(x);
}

BigInt ackermann_diag(std::uint64_t x, std::uint64_t budget) {
  if (x > 3) throw DomainError("Ackermann diagonal is limited to x <= 3");
  return ackermann(static_cast<int>(x), x, budget);
}

}  // namespace ldlab
