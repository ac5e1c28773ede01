#include "ldlab/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <json.hpp>
#include <optional>
#include <sstream>

#include "ldlab/conjugacy.hpp"
#include "ldlab/errors.hpp"
#include "ldlab/games.hpp"
#include "ldlab/homology.hpp"
#include "ldlab/invariants.hpp"
#include "ldlab/laver.hpp"
#include "ldlab/order.hpp"
#include "ldlab/ybe.hpp"

namespace ldlab {

using nlohmann::json;

namespace {

int parse_int(const std::string& text, const std::string& what) {
  std::size_t used = 0;
  long v = 0;
  try {
    v = std::stol(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (text.empty() || used != text.size() || v < -1000000000L || v > 1000000000L)
    throw ParseError(what + " '" + text + "' is not an integer");
  return static_cast<int>(v);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DomainError("cannot read file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

FiniteMagma parse_rack_spec(const std::string& spec) {
  const auto colon = spec.find(':');
  if (colon == std::string::npos) throw ParseError("rack specifier '" + spec + "' lacks a ':'");
  const std::string kind = spec.substr(0, colon);
  const std::string rest = spec.substr(colon + 1);
  if (kind == "file") return magma_from_csv(read_file(rest), spec);
  std::vector<int> args;
  std::stringstream ss(rest);
  std::string part;
  while (std::getline(ss, part, ':')) args.push_back(parse_int(part, "rack parameter"));
  auto expect = [&](std::size_t k) {
    if (args.size() != k)
      throw ParseError("rack specifier '" + spec + "' needs " + std::to_string(k) + " parameter(s)");
  };
  if (kind == "dihedral") {
    expect(1);
    return dihedral_quandle(args[0]);
  }
  if (kind == "affine") {
    expect(2);
    return affine_quandle(args[0], args[1]);
  }
  if (kind == "laver") {
    expect(1);
    return build_laver_table(args[0]).magma;
  }
  if (kind == "trivial") {
    expect(1);
    return trivial_rack(args[0]);
  }
  throw ParseError("unknown rack family '" + kind + "'");
}

std::vector<int> parse_colour_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    part.erase(std::remove_if(part.begin(), part.end(), [](unsigned char c) { return std::isspace(c); }),
               part.end());
    out.push_back(parse_int(part, "colour"));
  }
  if (out.empty()) throw ParseError("empty colour list");
  return out;
}

namespace {

struct Options {
  std::string format = "text";
  int n = -1;
  int p = -1;
  int q = -1;
  int strands = 3;
  int degree = 2;
  int maxlen = 5;
  std::string rack;
  std::string colors;
  std::string mid;
  std::string mode = "fraction";
  std::string rule = "inner-two";
  std::string cap = std::to_string(kDefaultG3Cap);
  std::string resume;
  std::string save;
  bool trace = false;
  bool group = false;
  bool no_fast_forward = false;
  std::vector<std::string> words;
  int ack_r = -1;
  long long ack_x = -1;
  long long diag = -1;
};

std::string csv_row(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

std::string grid_csv(const IntCochain& f) {
  const int m = f.carrier();
  std::string s;
  for (int x = 1; x <= m; ++x) {
    for (int y = 1; y <= m; ++y) s += (y > 1 ? "," : "") + f.at({x, y}).str();
    s += '\n';
  }
  return s;
}

json grid_json(const IntCochain& f) {
  json rows = json::array();
  const int m = f.carrier();
  for (int x = 1; x <= m; ++x) {
    json row = json::array();
    for (int y = 1; y <= m; ++y) row.push_back(f.at({x, y}).str());
    rows.push_back(row);
  }
  return rows;
}

json nf_json(const Braid& b) {
  json factors = json::array();
  for (const auto& f : b.factors()) factors.push_back(f.one_line());
  return {{"strands", b.strands()}, {"inf", b.inf()}, {"factors", factors}, {"text", b.render()}};
}

std::string anf_text(const Braid& b) { return render_word(alternating_normal_form(b)); }

class Runner {
 public:
  Runner(const Options& o, std::ostream& out) : o_(o), out_(out) {}

  void emit(const std::string& schema, const json& data, const std::string& text) {
    if (o_.format == "json")
      out_ << json{{"schema", schema + "/1"}, {"data", data}}.dump() << '\n';
    else
      out_ << text;
  }

  BraidWord word(std::size_t k, int strands) const {
    if (k >= o_.words.size()) throw ParseError("missing braid word argument");
    return parse_braid_word(o_.words[k], strands);
  }

  int require_n() const {
    if (o_.n < 0) throw ParseError("--n is required");
    return o_.n;
  }

  void laver_table() {
    const LaverTable A = build_laver_table(require_n());
    std::string text;
    json rows = json::array();
    for (int p = 1; p <= A.size; ++p) {
      text += csv_row(A.magma.row(p)) + '\n';
      rows.push_back(A.magma.row(p));
    }
    emit("laver.table", {{"n", A.n}, {"size", A.size}, {"rows", rows}}, text);
  }

  void laver_period() {
    const LaverTable A = build_laver_table(require_n());
    const int pi = period(A, o_.p);
    emit("laver.period", {{"n", A.n}, {"p", o_.p}, {"period", pi}}, std::to_string(pi) + '\n');
  }

  void cocycle_rank() {
    const FiniteMagma M = parse_rack_spec(o_.rack);
    if (o_.degree < 1) throw DomainError("degree must be at least 1");
    const std::size_t r = cocycle_space(M, o_.degree).rank;
    emit("cocycle.rank", {{"rack", o_.rack}, {"degree", o_.degree}, {"rank", r}}, std::to_string(r) + '\n');
  }

  void cocycle_basis() {
    if (o_.degree != 2) throw DomainError("basis export is available for degree 2");
    const FiniteMagma M = parse_rack_spec(o_.rack);
    const CocycleSpace S = two_cocycle_space(M);
    std::string text;
    json basis = json::array();
    for (std::size_t i = 0; i < S.basis.size(); ++i) {
      if (i) text += '\n';
      text += grid_csv(S.basis[i]);
      basis.push_back(grid_json(S.basis[i]));
    }
    emit("cocycle.basis", {{"rack", o_.rack}, {"rank", S.rank}, {"basis", basis}}, text);
  }

  void cocycle_psi() {
    const IntCochain f = psi(o_.q, require_n());
    emit("cocycle.psi", {{"n", o_.n}, {"q", o_.q}, {"grid", grid_json(f)}}, grid_csv(f));
  }

  void braid_nf() {
    const Braid b = Braid::from_word(word(0, o_.strands));
    emit("braid.nf", nf_json(b), b.render() + '\n');
  }

  void braid_eq() {
    const bool e = equal(word(0, o_.strands), word(1, o_.strands));
    emit("braid.eq", {{"equal", e}}, std::string(e ? "true" : "false") + '\n');
  }

  void order_compare() {
    const int c = compare_D(word(0, o_.strands), word(1, o_.strands));
    emit("order.compare", {{"cmp", render_cmp(c)}}, render_cmp(c) + '\n');
  }

  void order_rank3() {
    const Braid b = Braid::from_word(word(0, 3));
    const std::string r = render(rank_bp3(b));
    emit("order.rank3", {{"rank", r}}, r + '\n');
  }

  void order_anf() {
    const Braid b = Braid::from_word(word(0, o_.strands));
    const BraidWord w = alternating_normal_form(b);
    emit("order.anf", {{"word", w.letters}}, render_word(w) + '\n');
  }

  void order_floor() {
    const long k = d_floor(Braid::from_word(word(0, o_.strands)));
    emit("order.floor", {{"floor", k}}, std::to_string(k) + '\n');
  }

  void ybe_matrix() {
    const SetSolution rho = rack_to_solution(parse_rack_spec(o_.rack));
    const auto entries = export_matrix(rho);
    const long dim = static_cast<long>(rho.size()) * rho.size();
    json coo = json::array();
    for (const auto& e : entries) coo.push_back({e.row, e.col});
    const std::string text = o_.format == "csv" ? render_matrix_csv(entries, dim) : render_matrix_coo(entries);
    emit("ybe.matrix", {{"dim", dim}, {"entries", coo}}, text);
  }

  void ybe_check() {
    const FiniteMagma M = parse_rack_spec(o_.rack);
    const SetSolution rho = rack_to_solution(M);
    const bool braid_ok = satisfies_braid_equation(rho);
    const bool inv = is_invertible(rho);
    const BirackCheck bc = birack_laws_check(M, first_projection(M.size()));
    std::string text = std::string("braid_equation=") + (braid_ok ? "true" : "false") + '\n' +
                       "invertible=" + (inv ? "true" : "false") + '\n' +
                       "birack=" + (bc.ok ? "true" : "false (" + bc.failure + ")") + '\n';
    emit("ybe.check",
         {{"braid_equation", braid_ok}, {"invertible", inv}, {"birack", bc.ok}, {"birack_failure", bc.failure}},
         text);
  }

  void color_count() {
    const FiniteMagma M = parse_rack_spec(o_.rack);
    const BigInt c = count_closure_colourings(M, word(0, o_.strands));
    emit("color.count", {{"count", c.str()}}, c.str() + '\n');
  }

  void color_act() {
    const FiniteMagma M = parse_rack_spec(o_.rack);
    const ColourVector a = parse_colour_list(o_.colors);
    const BraidWord w = word(0, static_cast<int>(a.size()));
    const ColourVector r = is_positive_word(w) ? act_positive(M, a, w) : act_full(M, a, w);
    emit("color.act", {{"colors", r}}, csv_row(r) + '\n');
  }

  void color_laver() {
    const ColourVector mid = parse_colour_list(o_.mid);
    const BraidWord w = word(0, static_cast<int>(mid.size()));
    if (o_.mode != "fraction" && o_.mode != "delta") throw ParseError("--mode must be fraction or delta");
    const auto [l, r] = laver_fraction_colouring(require_n(), w, mid,
                                                 o_.mode == "delta" ? FractionMode::Delta : FractionMode::Fraction);
    emit("color.laver", {{"mode", o_.mode}, {"left", l}, {"right", r}},
         "left=" + csv_row(l) + "\nright=" + csv_row(r) + '\n');
  }

  void quandle_present() {
    const BraidWord w = word(0, o_.strands);
    if (o_.group) {
      const GroupPresentation G = wirtinger_group(w);
      json rel = json::array();
      for (const auto& [l, r] : G.relations) rel.push_back({render_free(l), render_free(r)});
      emit("quandle.group", {{"generators", G.generators}, {"relations", rel}}, G.render() + '\n');
      return;
    }
    const QuandlePresentation P = fundamental_quandle(w);
    json rel = json::array();
    for (const auto& [t, a] : P.relations) rel.push_back({t.render(), a.render()});
    emit("quandle.present", {{"generators", P.generators}, {"relations", rel}}, P.render() + '\n');
  }

  Braid positive_input() const {
    const Braid b = Braid::from_word(word(0, o_.strands));
    if (!b.is_positive()) throw DomainError("input braid is not positive");
    return b;
  }

  void conj_class() {
    const ConjClass C = positive_conjugates(positive_input());
    std::vector<Braid> members = C.members;
    std::sort(members.begin(), members.end(),
              [](const Braid& a, const Braid& b) { return compare_flipped(a, b) < 0; });
    std::string text;
    json list = json::array();
    for (const auto& m : members) {
      text += anf_text(m) + '\n';
      list.push_back(alternating_normal_form(m).letters);
    }
    emit("conj.class", {{"size", members.size()}, {"members", list}}, text);
  }

  void conj_mu() {
    const Braid m = mu(positive_input());
    emit("conj.mu", {{"mu", alternating_normal_form(m).letters}}, anf_text(m) + '\n');
  }

  void conj_sweep() {
    const ConjectureSweep S = sweep_conjecture(o_.maxlen);
    std::string text = "beta | mu | mu(beta D^2) | s1 s2^2 s1 mu s1^2 | holds | s2 s1^2 s2 mu s1^2 | holds\n";
    json rows = json::array();
    for (const auto& r : S.rows) {
      text += anf_text(r.beta) + " | " + anf_text(r.mu_beta) + " | " + anf_text(r.lhs) + " | " +
              anf_text(r.rhs) + " | " + (r.holds ? "yes" : "no") + " | " + anf_text(r.rhs_flipped_prefix) +
              " | " + (r.holds_flipped_prefix ? "yes" : "no") + '\n';
      rows.push_back({{"beta", alternating_normal_form(r.beta).letters},
                      {"mu", alternating_normal_form(r.mu_beta).letters},
                      {"lhs", alternating_normal_form(r.lhs).letters},
                      {"holds", r.holds},
                      {"holds_flipped_prefix", r.holds_flipped_prefix},
                      {"consistent", r.consistent}});
    }
    text += "rows=" + std::to_string(S.rows.size()) + " counterexamples=" + std::to_string(S.counterexamples) +
            " flipped_prefix_counterexamples=" + std::to_string(S.flipped_prefix_counterexamples) +
            " inconsistencies=" + std::to_string(S.inconsistencies) + '\n';
    emit("conj.sweep", {{"rows", rows},
                        {"counterexamples", S.counterexamples},
                        {"flipped_prefix_counterexamples", S.flipped_prefix_counterexamples},
                        {"inconsistencies", S.inconsistencies}},
         text);
  }

  void game_g3() {
    BigInt cap;
    try {
      cap = BigInt(o_.cap);
    } catch (const std::exception&) {
      throw ParseError("--cap '" + o_.cap + "' is not an integer");
    }
    if (cap < 0) throw ParseError("--cap must be non-negative");
    if (o_.rule != "inner-two" && o_.rule != "epsilon") throw ParseError("--rule must be inner-two or epsilon");
    const G3Rule rule = o_.rule == "epsilon" ? G3Rule::Epsilon : G3Rule::InnerTwo;
    G3State s = o_.resume.empty() ? g3_start(Braid::from_word(word(0, 3)), rule) : g3_restore(read_file(o_.resume));
    std::string text;
    json trace = json::array();
    if (o_.trace) {
      BigInt left = cap;
      if (!s.finished()) {
        for (;;) {
          const BraidWord w = word_from_bp3_exponents(s.exponents);
          text += render_word(w) + '\n';
          trace.push_back(w.letters);
          if (s.finished() || left == 0) break;
          g3_advance(s);
          --left;
        }
      }
    } else {
      g3_run(s, cap, !o_.no_fast_forward);
    }
    if (!o_.save.empty()) {
      std::ofstream f(o_.save, std::ios::binary);
      if (!f) throw DomainError("cannot write checkpoint '" + o_.save + "'");
      f << g3_checkpoint(s) << '\n';
    }
    text += s.finished() ? "steps=" + s.steps.str() + '\n' : "aborted at=" + s.steps.str() + '\n';
    json data = {{"finished", s.finished()}, {"steps", s.steps.str()}};
    if (o_.trace) data["trace"] = trace;
    emit("game.g3", data, text);
  }

  void ack() {
    BigInt v;
    if (o_.diag >= 0)
      v = ackermann_diag(static_cast<std::uint64_t>(o_.diag));
    else if (o_.ack_r >= 0 && o_.ack_x >= 0)
      v = ackermann(o_.ack_r, static_cast<std::uint64_t>(o_.ack_x));
    else
      throw ParseError("ack needs --r and --x, or --diag");
    emit("ack", {{"value", v.str()}}, v.str() + '\n');
  }

 private:
  const Options& o_;
  std::ostream& out_;
};

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Laver tables, rack cohomology, Yang-Baxter solutions and braid orderings", "ldlab"};
  app.require_subcommand(1);
  Options o;
  std::function<void(Runner&)> action;

  auto fmt = [&](CLI::App* c, std::vector<std::string> allowed) {
    c->add_option("--format", o.format, "output format")->check(CLI::IsMember(allowed));
  };
  auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& help, void (Runner::*fn)()) {
    CLI::App* c = parent->add_subcommand(name, help);
    c->callback([&action, fn] { action = [fn](Runner& r) { (r.*fn)(); }; });
    return c;
  };
  auto words = [&](CLI::App* c, const std::string& help) {
    c->add_option("words", o.words, help)->allow_extra_args();
  };
  auto strands = [&](CLI::App* c) { c->add_option("--strands", o.strands, "strand count"); };

  CLI::App* laver = app.add_subcommand("laver", "Laver tables")->require_subcommand(1);
  {
    auto* c = leaf(laver, "table", "print A_n", &Runner::laver_table);
    c->add_option("--n", o.n, "table index")->required();
    fmt(c, {"text", "csv", "json"});
    c = leaf(laver, "period", "period of a row of A_n", &Runner::laver_period);
    c->add_option("--n", o.n, "table index")->required();
    c->add_option("--p", o.p, "row")->required();
    fmt(c, {"text", "json"});
  }
  CLI::App* cocycle = app.add_subcommand("cocycle", "rack cocycles")->require_subcommand(1);
  {
    auto* c = leaf(cocycle, "rank", "rank of the integral cocycle module", &Runner::cocycle_rank);
    c->add_option("--rack", o.rack, "rack specifier")->required();
    c->add_option("--degree", o.degree, "cochain degree")->check(CLI::Range(1, 4));
    fmt(c, {"text", "json"});
    c = leaf(cocycle, "basis", "integral basis of 2-cocycles", &Runner::cocycle_basis);
    c->add_option("--rack", o.rack, "rack specifier")->required();
    c->add_option("--degree", o.degree, "cochain degree")->check(CLI::Range(2, 2));
    fmt(c, {"text", "csv", "json"});
    c = leaf(cocycle, "psi", "the cocycle psi_{q,n}", &Runner::cocycle_psi);
    c->add_option("--n", o.n, "table index")->required();
    c->add_option("--q", o.q, "value q")->required();
    fmt(c, {"text", "csv", "json"});
  }
  CLI::App* braid = app.add_subcommand("braid", "braid words")->require_subcommand(1);
  {
    auto* c = leaf(braid, "nf", "Garside normal form", &Runner::braid_nf);
    strands(c);
    words(c, "braid word");
    fmt(c, {"text", "json"});
    c = leaf(braid, "eq", "word problem", &Runner::braid_eq);
    strands(c);
    words(c, "two braid words");
    fmt(c, {"text", "json"});
  }
  CLI::App* order = app.add_subcommand("order", "braid orderings")->require_subcommand(1);
  {
    auto* c = leaf(order, "compare", "D-order comparison", &Runner::order_compare);
    strands(c);
    words(c, "two braid words");
    fmt(c, {"text", "json"});
    c = leaf(order, "rank3", "ordinal rank of a positive 3-strand braid", &Runner::order_rank3);
    words(c, "braid word");
    fmt(c, {"text", "json"});
    c = leaf(order, "anf", "alternating normal form", &Runner::order_anf);
    strands(c);
    words(c, "braid word");
    fmt(c, {"text", "json"});
    c = leaf(order, "floor", "D-floor", &Runner::order_floor);
    strands(c);
    words(c, "braid word");
    fmt(c, {"text", "json"});
  }
  CLI::App* ybe = app.add_subcommand("ybe", "Yang-Baxter solutions")->require_subcommand(1);
  {
    auto* c = leaf(ybe, "matrix", "pseudo-R-matrix of a rack", &Runner::ybe_matrix);
    c->add_option("--rack", o.rack, "rack specifier")->required();
    o.format = "coo";
    fmt(c, {"coo", "csv", "json", "text"});
    c = leaf(ybe, "check", "braid equation, invertibility, birack laws", &Runner::ybe_check);
    c->add_option("--rack", o.rack, "rack specifier")->required();
    fmt(c, {"text", "json"});
  }
  CLI::App* color = app.add_subcommand("color", "colourings")->require_subcommand(1);
  {
    auto* c = leaf(color, "count", "colourings of a braid closure", &Runner::color_count);
    c->add_option("--rack", o.rack, "rack specifier")->required();
    strands(c);
    words(c, "braid word");
    fmt(c, {"text", "json"});
    c = leaf(color, "act", "Hurwitz action on a colour vector", &Runner::color_act);
    c->add_option("--rack", o.rack, "rack specifier")->required();
    c->add_option("--colors", o.colors, "comma-separated colours")->required();
    words(c, "braid word");
    fmt(c, {"text", "json"});
    c = leaf(color, "laver", "Laver-table colouring from the middle", &Runner::color_laver);
    c->add_option("--n", o.n, "table index")->required();
    c->add_option("--mid", o.mid, "middle colours")->required();
    c->add_option("--mode", o.mode, "fraction or delta");
    words(c, "braid word");
    fmt(c, {"text", "json"});
  }
  CLI::App* quandle = app.add_subcommand("quandle", "fundamental quandle")->require_subcommand(1);
  {
    auto* c = leaf(quandle, "present", "presentation of the closure", &Runner::quandle_present);
    strands(c);
    c->add_flag("--group", o.group, "Wirtinger group instead");
    words(c, "braid word");
    fmt(c, {"text", "json"});
  }
  CLI::App* conj = app.add_subcommand("conj", "positive conjugacy")->require_subcommand(1);
  {
    auto* c = leaf(conj, "class", "positive conjugates", &Runner::conj_class);
    strands(c);
    words(c, "braid word");
    fmt(c, {"text", "json"});
    c = leaf(conj, "mu", "least positive conjugate", &Runner::conj_mu);
    strands(c);
    words(c, "braid word");
    fmt(c, {"text", "json"});
    c = leaf(conj, "sweep-conjecture", "test the Delta^2 rule on short braids", &Runner::conj_sweep);
    c->add_option("--maxlen", o.maxlen, "maximal length")->check(CLI::Range(0, 9));
    fmt(c, {"text", "json"});
  }
  CLI::App* game = app.add_subcommand("game", "G3 sequences")->require_subcommand(1);
  {
    auto* c = leaf(game, "g3", "run a G3 sequence", &Runner::game_g3);
    words(c, "braid word");
    c->add_flag("--trace", o.trace, "print every state");
    c->add_option("--cap", o.cap, "maximal number of moves in this run");
    c->add_option("--rule", o.rule, "inner-two or epsilon");
    c->add_option("--resume", o.resume, "continue from a checkpoint file");
    c->add_option("--save", o.save, "write a checkpoint file at the end");
    c->add_flag("--no-fast-forward", o.no_fast_forward, "make every move individually");
    fmt(c, {"text", "json"});
  }
  {
    auto* c = app.add_subcommand("ack", "Ackermann functions");
    c->callback([&action] { action = [](Runner& r) { r.ack(); }; });
    c->add_option("--r", o.ack_r, "level")->check(CLI::Range(0, 3));
    c->add_option("--x", o.ack_x, "argument")->check(CLI::NonNegativeNumber);
    c->add_option("--diag", o.diag, "diagonal argument")->check(CLI::NonNegativeNumber);
    fmt(c, {"text", "json"});
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }
  if (!action) {
    err << "error: no command given\n";
    return 2;
  }
  try {
    Runner runner(o, out);
    action(runner);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const ResourceError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace ldlab
