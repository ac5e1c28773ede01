#include "ldlab/invariants.hpp"

#include "ldlab/errors.hpp"
#include "ldlab/laver.hpp"

namespace ldlab {

namespace {

void check_colours(const FiniteMagma& M, const ColourVector& a, const BraidWord& w) {
  validate(w);
  if (static_cast<int>(a.size()) != w.n)
    throw DomainError("colour vector has " + std::to_string(a.size()) + " entries for " +
                      std::to_string(w.n) + " strands");
  for (int v : a)
    if (v < 1 || v > M.size()) throw DomainError("colour outside carrier");
}

}  // namespace

ColourVector act_positive(const FiniteMagma& M, ColourVector a, const BraidWord& w) {
  check_colours(M, a, w);
  for (int l : w.letters) {
    if (l < 0) throw DomainError("negative letter in a positive-only action");
    const int x = a[l - 1], y = a[l];
    a[l - 1] = M.op(x, y);
    a[l] = x;
  }
  return a;
}

ColourVector act_full(const FiniteMagma& M, ColourVector a, const BraidWord& w) {
  if (!is_rack(M)) throw DomainError("full braid action needs a rack");
  check_colours(M, a, w);
  for (int l : w.letters) {
    const int i = (l > 0 ? l : -l) - 1;
    const int x = a[i], y = a[i + 1];
    if (l > 0) {
      a[i] = M.op(x, y);
      a[i + 1] = x;
    } else {
      a[i] = y;
      a[i + 1] = left_inverse_op(M, y, x).value;
    }
  }
  return a;
}

std::optional<ColourVector> act_partial(const FiniteMagma& M, ColourVector a, const BraidWord& w) {
  if (!is_left_cancellative(M)) throw DomainError("partial action needs left-cancellative rows");
  check_colours(M, a, w);
  for (int l : w.letters) {
    const int i = (l > 0 ? l : -l) - 1;
    const int x = a[i], y = a[i + 1];
    if (l > 0) {
      a[i] = M.op(x, y);
      a[i + 1] = x;
    } else {
      const LeftInverse c = left_inverse_op(M, y, x);
      if (c.status != LeftInverseStatus::Unique) return std::nullopt;
      a[i] = y;
      a[i + 1] = c.value;
    }
  }
  return a;
}

std::optional<std::vector<long>> act_partial(const IntegerRack& R, std::vector<long> a,
                                             const BraidWord& w) {
  validate(w);
  if (static_cast<int>(a.size()) != w.n) throw DomainError("colour vector length differs from strand count");
  for (long v : a)
    if (!R.contains(v)) return std::nullopt;
  for (int l : w.letters) {
    const int i = (l > 0 ? l : -l) - 1;
    const long x = a[i], y = a[i + 1];
    // x*y = y+1, so the c with y*c = x is x-1
    const long moved = l > 0 ? y + 1 : x - 1;
    if (!R.contains(moved)) return std::nullopt;
    if (l > 0) {
      a[i] = moved;
      a[i + 1] = x;
    } else {
      a[i] = y;
      a[i + 1] = moved;
    }
  }
  return a;
}

std::vector<FreeWord> act_free(std::vector<FreeWord> a, const BraidWord& w) {
  validate(w);
  if (static_cast<int>(a.size()) != w.n) throw DomainError("colour vector length differs from strand count");
  for (int l : w.letters) {
    const int i = (l > 0 ? l : -l) - 1;
    FreeWord x = a[i], y = a[i + 1];
    if (l > 0) {
      a[i] = free_conj(x, y);
      a[i + 1] = std::move(x);
    } else {
      a[i + 1] = free_conj_inv(y, x);
      a[i] = std::move(y);
    }
  }
  return a;
}

BigInt count_closure_colourings(const FiniteMagma& M, const BraidWord& w) {
  if (!is_rack(M)) throw DomainError("closure colourings need a rack");
  validate(w);
  const int s = M.size();
  std::uint64_t total = 1;
  for (int i = 0; i < w.n; ++i) {
    total *= static_cast<std::uint64_t>(s);
    if (total > kMaxColourVectors)
      throw ResourceError("colour enumeration exceeds " + std::to_string(kMaxColourVectors) + " vectors");
  }
  // Precomputed left division keeps the inner loop table-only.
  std::vector<int> div(static_cast<std::size_t>(s) * s);
  for (int y = 1; y <= s; ++y)
    for (int c = 1; c <= s; ++c) div[static_cast<std::size_t>(y - 1) * s + (M.op(y, c) - 1)] = c;
  BigInt count = 0;
  ColourVector a(static_cast<std::size_t>(w.n), 1), b;
  for (std::uint64_t k = 0; k < total; ++k) {
    b = a;
    for (int l : w.letters) {
      const int i = (l > 0 ? l : -l) - 1;
      const int x = b[i], y = b[i + 1];
      if (l > 0) {
        b[i] = M.op(x, y);
        b[i + 1] = x;
      } else {
        b[i] = y;
        b[i + 1] = div[static_cast<std::size_t>(y - 1) * s + (x - 1)];
      }
    }
    if (a == b) ++count;
    for (int pos = w.n - 1; pos >= 0; --pos) {
      if (a[pos] < s) {
        ++a[pos];
        break;
      }
      a[pos] = 1;
    }
  }
  return count;
}

BigInt cocycle_invariant(const FiniteMagma& M, const IntCochain& phi, const BraidWord& w,
                         const ColourVector& a0, bool checked) {
  if (phi.degree() != 2 || phi.carrier() != M.size())
    throw DomainError("cocycle invariant needs a degree-2 cochain on the same carrier");
  if (checked && !is_two_cocycle(M, phi)) throw DomainError("cochain is not a rack 2-cocycle");
  check_colours(M, a0, w);
  ColourVector a = a0;
  BigInt sum = 0;
  for (int l : w.letters) {
    if (l < 0) throw DomainError("cocycle invariant is defined on positive words");
    const int x = a[l - 1], y = a[l];
    sum += phi.at({x, y});
    a[l - 1] = M.op(x, y);
    a[l] = x;
  }
  return sum;
}

QuandleTerm QuandleTerm::generator(int g) {
  QuandleTerm t;
  t.gen_ = g;
  return t;
}

QuandleTerm QuandleTerm::star(const QuandleTerm& x, const QuandleTerm& y) {
  QuandleTerm t;
  t.kind_ = Kind::Star;
  t.left_ = std::make_shared<const QuandleTerm>(x);
  t.right_ = std::make_shared<const QuandleTerm>(y);
  return t;
}

QuandleTerm QuandleTerm::bar(const QuandleTerm& x, const QuandleTerm& y) {
  QuandleTerm t = star(x, y);
  t.kind_ = Kind::Bar;
  return t;
}

namespace {

std::string render_sub(const QuandleTerm& t) {
  return t.kind() == QuandleTerm::Kind::Generator ? t.render() : "(" + t.render() + ")";
}

}  // namespace

std::string QuandleTerm::render() const {
  if (kind_ == Kind::Generator) return generator_name(gen_);
  return render_sub(*left_) + (kind_ == Kind::Star ? "*" : "\\") + render_sub(*right_);
}

std::optional<int> QuandleTerm::evaluate(const FiniteMagma& M, const std::vector<int>& values) const {
  if (kind_ == Kind::Generator) return values.at(static_cast<std::size_t>(gen_ - 1));
  const auto x = left_->evaluate(M, values);
  const auto y = right_->evaluate(M, values);
  if (!x || !y) return std::nullopt;
  if (kind_ == Kind::Star) return M.op(*x, *y);
  const LeftInverse c = left_inverse_op(M, *x, *y);
  if (c.status != LeftInverseStatus::Unique) return std::nullopt;
  return c.value;
}

FreeWord QuandleTerm::to_free() const {
  if (kind_ == Kind::Generator) return free_gen(gen_);
  const FreeWord x = left_->to_free(), y = right_->to_free();
  return kind_ == Kind::Star ? free_conj(x, y) : free_conj_inv(x, y);
}

bool QuandleTerm::operator==(const QuandleTerm& o) const {
  if (kind_ != o.kind_) return false;
  if (kind_ == Kind::Generator) return gen_ == o.gen_;
  return *left_ == *o.left_ && *right_ == *o.right_;
}

namespace {

std::string presentation_text(int generators, const std::vector<std::string>& relations) {
  std::string s = "<";
  for (int g = 1; g <= generators; ++g) s += (g > 1 ? ", " : "") + generator_name(g);
  s += " | ";
  for (std::size_t i = 0; i < relations.size(); ++i) s += (i ? ", " : "") + relations[i];
  return s + ">";
}

}  // namespace

std::string QuandlePresentation::render() const {
  std::vector<std::string> rel;
  for (const auto& [t, a] : relations) rel.push_back(t.render() + " = " + a.render());
  return presentation_text(generators, rel);
}

QuandlePresentation fundamental_quandle(const BraidWord& w) {
  validate(w);
  std::vector<QuandleTerm> a;
  for (int g = 1; g <= w.n; ++g) a.push_back(QuandleTerm::generator(g));
  for (int l : w.letters) {
    const int i = (l > 0 ? l : -l) - 1;
    QuandleTerm x = a[i], y = a[i + 1];
    if (l > 0) {
      a[i] = QuandleTerm::star(x, y);
      a[i + 1] = std::move(x);
    } else {
      a[i + 1] = QuandleTerm::bar(y, x);
      a[i] = std::move(y);
    }
  }
  QuandlePresentation P;
  P.generators = w.n;
  for (int g = 1; g <= w.n; ++g) P.relations.push_back({a[g - 1], QuandleTerm::generator(g)});
  return P;
}

std::vector<FreeWord> GroupPresentation::relators() const {
  std::vector<FreeWord> out;
  for (const auto& [l, r] : relations) out.push_back(free_mul(l, free_inverse(r)));
  return out;
}

std::string GroupPresentation::render() const {
  std::vector<std::string> rel;
  for (const auto& [l, r] : relations) rel.push_back(render_free(l) + " = " + render_free(r));
  return presentation_text(generators, rel);
}

GroupPresentation wirtinger_group(const BraidWord& w) {
  const QuandlePresentation Q = fundamental_quandle(w);
  GroupPresentation G;
  G.generators = Q.generators;
  for (const auto& [t, a] : Q.relations) G.relations.push_back({t.to_free(), a.to_free()});
  return G;
}

bool satisfies_presentation(const FiniteMagma& M, const QuandlePresentation& P,
                            const std::vector<int>& values) {
  for (const auto& [t, a] : P.relations) {
    const auto l = t.evaluate(M, values);
    const auto r = a.evaluate(M, values);
    if (!l || !r || *l != *r) return false;
  }
  return true;
}

std::pair<ColourVector, ColourVector> laver_fraction_colouring(int n, const BraidWord& w,
                                                               const ColourVector& mid,
                                                               FractionMode mode) {
  const LaverTable A = build_laver_table(n);
  const Braid beta = Braid::from_word(w);
  if (mode == FractionMode::Fraction) {
    const auto [b1, b2] = fraction_decomposition(beta);
    return {act_positive(A.magma, mid, b1.word()), act_positive(A.magma, mid, b2.word())};
  }
  const DeltaDecomposition dd = delta_decomposition(beta);
  return {act_positive(A.magma, mid, Braid::delta(w.n, dd.d).word()),
          act_positive(A.magma, mid, dd.beta0.word())};
}

}  // namespace ldlab
