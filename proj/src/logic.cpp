#include "maxdeg/logic.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <optional>
#include <unordered_map>
#include <vector>

#include "maxdeg/errors.hpp"

namespace maxdeg {

// ---------------------------------------------------------------- AST

Formula Formula::exists(std::string var, Formula body) {
  return Formula(std::make_shared<const Node>(
      Node{Kind::exists, std::move(var), {}, std::make_shared<const Formula>(std::move(body)), {}}));
}

Formula Formula::forall(std::string var, Formula body) {
  return Formula(std::make_shared<const Node>(
      Node{Kind::forall, std::move(var), {}, std::make_shared<const Formula>(std::move(body)), {}}));
}

Formula Formula::conj(Formula a, Formula b) {
  return Formula(std::make_shared<const Node>(Node{Kind::conj, {}, {},
                                                   std::make_shared<const Formula>(std::move(a)),
                                                   std::make_shared<const Formula>(std::move(b))}));
}

Formula Formula::disj(Formula a, Formula b) {
  return Formula(std::make_shared<const Node>(Node{Kind::disj, {}, {},
                                                   std::make_shared<const Formula>(std::move(a)),
                                                   std::make_shared<const Formula>(std::move(b))}));
}

Formula Formula::implies(Formula a, Formula b) {
  return Formula(std::make_shared<const Node>(Node{Kind::implies, {}, {},
                                                   std::make_shared<const Formula>(std::move(a)),
                                                   std::make_shared<const Formula>(std::move(b))}));
}

Formula Formula::negation(Formula a) {
  return Formula(std::make_shared<const Node>(
      Node{Kind::negation, {}, {}, std::make_shared<const Formula>(std::move(a)), {}}));
}

Formula Formula::edge(std::string x, std::string y) {
  return Formula(std::make_shared<const Node>(Node{Kind::edge, std::move(x), std::move(y), {}, {}}));
}

Formula Formula::equal(std::string x, std::string y) {
  return Formula(
      std::make_shared<const Node>(Node{Kind::equal, std::move(x), std::move(y), {}, {}}));
}

Formula Formula::degree(std::string x, DegreeRelation rel, int bound) {
  if (bound < 0) throw ContractViolation("degree bound must be non-negative");
  return Formula(
      std::make_shared<const Node>(Node{Kind::degree, std::move(x), {}, {}, {}, rel, bound}));
}

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Formula::Kind::exists:
    case Formula::Kind::forall:
      return a.var() == b.var() && a.left() == b.left();
    case Formula::Kind::conj:
    case Formula::Kind::disj:
    case Formula::Kind::implies:
      return a.left() == b.left() && a.right() == b.right();
    case Formula::Kind::negation:
      return a.left() == b.left();
    case Formula::Kind::edge:
    case Formula::Kind::equal:
      return a.var() == b.var() && a.var2() == b.var2();
    case Formula::Kind::degree:
      return a.var() == b.var() && a.relation() == b.relation() && a.bound() == b.bound();
  }
  return false;
}

// ---------------------------------------------------------------- parser

namespace {

enum class Tok { ident, edge_sym, lparen, rparen, comma, dot, bang, amp, bar, arrow, eq, ge, le,
                 number, kw_exists, kw_forall, kw_deg, end };

struct Token {
  Tok type;
  std::string text;
  std::size_t pos;
};

std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    const char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    if (c >= 'a' && c <= 'z') {
      while (i < s.size() && ((s[i] >= 'a' && s[i] <= 'z') || (s[i] >= '0' && s[i] <= '9'))) ++i;
      std::string word(s.substr(start, i - start));
      Tok t = Tok::ident;
      if (word == "exists") t = Tok::kw_exists;
      else if (word == "forall") t = Tok::kw_forall;
      else if (word == "deg") t = Tok::kw_deg;
      out.push_back({t, std::move(word), start});
      continue;
    }
    if (c >= '0' && c <= '9') {
      while (i < s.size() && s[i] >= '0' && s[i] <= '9') ++i;
      out.push_back({Tok::number, std::string(s.substr(start, i - start)), start});
      continue;
    }
    auto two = [&](char next) { return i + 1 < s.size() && s[i + 1] == next; };
    switch (c) {
      case 'E': out.push_back({Tok::edge_sym, "E", start}); ++i; break;
      case '(': out.push_back({Tok::lparen, "(", start}); ++i; break;
      case ')': out.push_back({Tok::rparen, ")", start}); ++i; break;
      case ',': out.push_back({Tok::comma, ",", start}); ++i; break;
      case '.': out.push_back({Tok::dot, ".", start}); ++i; break;
      case '!': out.push_back({Tok::bang, "!", start}); ++i; break;
      case '&': out.push_back({Tok::amp, "&", start}); ++i; break;
      case '|': out.push_back({Tok::bar, "|", start}); ++i; break;
      case '=': out.push_back({Tok::eq, "=", start}); ++i; break;
      case '-':
        if (!two('>')) throw ParseError("expected '->'", start);
        out.push_back({Tok::arrow, "->", start});
        i += 2;
        break;
      case '>':
        if (!two('=')) throw ParseError("expected '>='", start);
        out.push_back({Tok::ge, ">=", start});
        i += 2;
        break;
      case '<':
        if (!two('=')) throw ParseError("expected '<='", start);
        out.push_back({Tok::le, "<=", start});
        i += 2;
        break;
      default:
        throw ParseError(std::string("unexpected character '") + c + "'", start);
    }
  }
  out.push_back({Tok::end, "", s.size()});
  return out;
}

class Parser {
 public:
  Parser(std::string_view text, bool sentence) : tokens_(tokenize(text)), sentence_(sentence) {}

  Formula run() {
    Formula f = implication();
    if (peek().type != Tok::end) throw ParseError("unexpected '" + peek().text + "'", peek().pos);
    return f;
  }

 private:
  const Token& peek() const { return tokens_[at_]; }
  const Token& take() { return tokens_[at_++]; }

  const Token& expect(Tok t, const char* what) {
    if (peek().type != t)
      throw ParseError(std::string("expected ") + what +
                           (peek().type == Tok::end ? " at end of input" : ""),
                       peek().pos);
    return take();
  }

  std::string variable_use() {
    const Token& t = expect(Tok::ident, "variable");
    if (sentence_ && std::find(scope_.begin(), scope_.end(), t.text) == scope_.end())
      throw ParseError("free variable '" + t.text + "' in sentence", t.pos);
    return t.text;
  }

  Formula implication() {
    Formula lhs = disjunction();
    if (peek().type == Tok::arrow) {
      take();
      return Formula::implies(std::move(lhs), implication());
    }
    return lhs;
  }

  Formula disjunction() {
    Formula f = conjunction();
    while (peek().type == Tok::bar) {
      take();
      f = Formula::disj(std::move(f), conjunction());
    }
    return f;
  }

  Formula conjunction() {
    Formula f = unary();
    while (peek().type == Tok::amp) {
      take();
      f = Formula::conj(std::move(f), unary());
    }
    return f;
  }

  Formula unary() {
    const Token& t = peek();
    switch (t.type) {
      case Tok::bang:
        take();
        return Formula::negation(unary());
      case Tok::kw_exists:
      case Tok::kw_forall: {
        take();
        const std::string var = expect(Tok::ident, "variable").text;
        expect(Tok::dot, "'.'");
        scope_.push_back(var);
        Formula body = implication();
        scope_.pop_back();
        return t.type == Tok::kw_exists ? Formula::exists(var, std::move(body))
                                        : Formula::forall(var, std::move(body));
      }
      case Tok::lparen: {
        take();
        Formula f = implication();
        expect(Tok::rparen, "')'");
        return f;
      }
      case Tok::edge_sym: {
        take();
        expect(Tok::lparen, "'('");
        std::string x = variable_use();
        expect(Tok::comma, "','");
        std::string y = variable_use();
        expect(Tok::rparen, "')'");
        return Formula::edge(std::move(x), std::move(y));
      }
      case Tok::kw_deg: {
        take();
        expect(Tok::lparen, "'('");
        std::string x = variable_use();
        expect(Tok::rparen, "')'");
        DegreeRelation rel;
        switch (peek().type) {
          case Tok::eq: rel = DegreeRelation::exactly; break;
          case Tok::ge: rel = DegreeRelation::at_least; break;
          case Tok::le: rel = DegreeRelation::at_most; break;
          default: throw ParseError("expected '=', '>=' or '<=' after deg(...)", peek().pos);
        }
        take();
        const Token& num = expect(Tok::number, "integer");
        if (num.text.size() > 6) throw ParseError("degree bound too large", num.pos);
        return Formula::degree(std::move(x), rel, std::stoi(num.text));
      }
      case Tok::ident: {
        std::string x = variable_use();
        expect(Tok::eq, "'='");
        std::string y = variable_use();
        return Formula::equal(std::move(x), std::move(y));
      }
      default:
        throw ParseError(t.type == Tok::end ? "unexpected end of input"
                                            : "unexpected '" + t.text + "'",
                         t.pos);
    }
  }

  std::vector<Token> tokens_;
  std::size_t at_ = 0;
  bool sentence_;
  std::vector<std::string> scope_;
};

}  // namespace

Formula parse_formula(std::string_view text) { return Parser(text, false).run(); }
Formula parse(std::string_view text) { return Parser(text, true).run(); }

// ---------------------------------------------------------------- printer

namespace {

int precedence(Formula::Kind k) {
  switch (k) {
    case Formula::Kind::implies: return 1;
    case Formula::Kind::disj: return 2;
    case Formula::Kind::conj: return 3;
    case Formula::Kind::negation:
    case Formula::Kind::exists:
    case Formula::Kind::forall: return 4;
    default: return 5;
  }
}

// True when the printed text ends inside a quantifier body that would
// swallow anything appended after it.
bool ends_open(const Formula& f) {
  if (f.is_quantifier()) return true;
  if (f.kind() == Formula::Kind::negation) return ends_open(f.left());
  if (f.is_binary()) return ends_open(f.right());
  return false;
}

void print(const Formula& f, std::string& out);

void print_operand(const Formula& f, int min_prec, bool left_side, std::string& out) {
  const bool parens = precedence(f.kind()) < min_prec || (left_side && ends_open(f));
  if (parens) out += '(';
  print(f, out);
  if (parens) out += ')';
}

const char* relation_text(DegreeRelation r) {
  switch (r) {
    case DegreeRelation::at_least: return ">=";
    case DegreeRelation::at_most: return "<=";
    case DegreeRelation::exactly: return "=";
  }
  return "?";
}

void print(const Formula& f, std::string& out) {
  using K = Formula::Kind;
  switch (f.kind()) {
    case K::exists:
    case K::forall:
      out += f.kind() == K::exists ? "exists " : "forall ";
      out += f.var();
      out += ". ";
      print(f.left(), out);
      return;
    case K::negation:
      out += '!';
      print_operand(f.left(), 4, false, out);
      return;
    case K::conj:
    case K::disj:
    case K::implies: {
      const int p = precedence(f.kind());
      const bool right_assoc = f.kind() == K::implies;
      print_operand(f.left(), right_assoc ? p + 1 : p, true, out);
      out += f.kind() == K::conj ? " & " : f.kind() == K::disj ? " | " : " -> ";
      print_operand(f.right(), right_assoc ? p : p + 1, false, out);
      return;
    }
    case K::edge:
      out += "E(" + f.var() + "," + f.var2() + ")";
      return;
    case K::equal:
      out += f.var() + " = " + f.var2();
      return;
    case K::degree:
      out += "deg(" + f.var() + ") " + relation_text(f.relation()) + " " +
             std::to_string(f.bound());
      return;
  }
}

void collect(const Formula& f, std::set<std::string>& bound, std::set<std::string>& free,
             std::set<std::string>& all) {
  using K = Formula::Kind;
  auto use = [&](const std::string& v) {
    all.insert(v);
    if (!bound.count(v)) free.insert(v);
  };
  switch (f.kind()) {
    case K::exists:
    case K::forall: {
      all.insert(f.var());
      const bool was_bound = bound.count(f.var()) > 0;
      bound.insert(f.var());
      collect(f.left(), bound, free, all);
      if (!was_bound) bound.erase(f.var());
      return;
    }
    case K::negation:
      collect(f.left(), bound, free, all);
      return;
    case K::conj:
    case K::disj:
    case K::implies:
      collect(f.left(), bound, free, all);
      collect(f.right(), bound, free, all);
      return;
    case K::edge:
    case K::equal:
      use(f.var());
      use(f.var2());
      return;
    case K::degree:
      use(f.var());
      return;
  }
}

int degree_rank(DegreeRelation rel, int c) {
  if (rel == DegreeRelation::at_least) return c;
  return c + 1;
}

}  // namespace

std::string to_string(const Formula& f) {
  std::string out;
  print(f, out);
  return out;
}

std::set<std::string> free_variables(const Formula& f) {
  std::set<std::string> bound, free, all;
  collect(f, bound, free, all);
  return free;
}

std::set<std::string> variables(const Formula& f) {
  std::set<std::string> bound, free, all;
  collect(f, bound, free, all);
  return all;
}

int qrank(const Formula& f) {
  using K = Formula::Kind;
  switch (f.kind()) {
    case K::exists:
    case K::forall: return 1 + qrank(f.left());
    case K::negation: return qrank(f.left());
    case K::conj:
    case K::disj:
    case K::implies: return std::max(qrank(f.left()), qrank(f.right()));
    case K::edge:
    case K::equal: return 0;
    case K::degree: return degree_rank(f.relation(), f.bound());
  }
  return 0;
}

// ---------------------------------------------------------------- macros

namespace {

// Names for c fresh variables: "y" (or "z", ...) when c == 1, else p1..pc.
std::vector<std::string> fresh_names(int c, const std::set<std::string>& taken) {
  static const char* const prefixes[] = {"y", "z", "w", "u", "v", "t", "s"};
  for (int round = 0;; ++round) {
    for (const char* base : prefixes) {
      std::string p = base;
      if (round > 0) p += std::string(static_cast<std::size_t>(round), 'q');
      std::vector<std::string> names;
      if (c == 1) {
        names.push_back(p);
      } else {
        for (int i = 1; i <= c; ++i) names.push_back(p + std::to_string(i));
      }
      if (std::none_of(names.begin(), names.end(),
                       [&](const std::string& n) { return taken.count(n) > 0; }))
        return names;
    }
  }
}

Formula at_least(const std::string& x, int c, const std::set<std::string>& taken) {
  if (c == 0) return Formula::equal(x, x);
  const std::vector<std::string> ys = fresh_names(c, taken);
  std::optional<Formula> body;
  auto add = [&](Formula f) { body = body ? Formula::conj(*body, std::move(f)) : std::move(f); };
  for (int i = 0; i < c; ++i)
    for (int j = i + 1; j < c; ++j) add(Formula::negation(Formula::equal(ys[i], ys[j])));
  for (int i = 0; i < c; ++i) add(Formula::edge(x, ys[i]));
  Formula out = *body;
  for (int i = c - 1; i >= 0; --i) out = Formula::exists(ys[i], std::move(out));
  return out;
}

}  // namespace

DegreeExpansion expand_degree(const std::string& x, DegreeRelation rel, int c, int max_degree,
                              const std::set<std::string>& taken) {
  if (c < 0) throw ContractViolation("degree bound must be non-negative");
  std::set<std::string> avoid = taken;
  avoid.insert(x);
  DegreeExpansion out{Formula::equal(x, x), degree_rank(rel, c), c > max_degree};
  switch (rel) {
    case DegreeRelation::at_least:
      out.formula = at_least(x, c, avoid);
      break;
    case DegreeRelation::at_most:
      out.formula = Formula::negation(at_least(x, c + 1, avoid));
      break;
    case DegreeRelation::exactly:
      out.formula = c == 0 ? Formula::negation(at_least(x, 1, avoid))
                           : Formula::conj(at_least(x, c, avoid),
                                           Formula::negation(at_least(x, c + 1, avoid)));
      break;
  }
  return out;
}

Formula desugar_degree(const Formula& f) {
  const std::set<std::string> taken = variables(f);
  std::function<Formula(const Formula&)> go = [&](const Formula& g) -> Formula {
    using K = Formula::Kind;
    switch (g.kind()) {
      case K::exists: return Formula::exists(g.var(), go(g.left()));
      case K::forall: return Formula::forall(g.var(), go(g.left()));
      case K::negation: return Formula::negation(go(g.left()));
      case K::conj: return Formula::conj(go(g.left()), go(g.right()));
      case K::disj: return Formula::disj(go(g.left()), go(g.right()));
      case K::implies: return Formula::implies(go(g.left()), go(g.right()));
      case K::edge:
      case K::equal: return g;
      case K::degree:
        return expand_degree(g.var(), g.relation(), g.bound(), g.bound(), taken).formula;
    }
    return g;
  };
  return go(f);
}

// ---------------------------------------------------------------- eval

namespace {

struct Op {
  Formula::Kind kind;
  int a = -1, b = -1;          // variable slots
  int left = -1, right = -1;   // child ops
  DegreeRelation relation = DegreeRelation::at_least;
  int bound = 0;
  enum class Guard { none, neighbours, equal } guard = Guard::none;
  int guard_slot = -1;
};

class Program {
 public:
  explicit Program(const Formula& f) { root_ = compile(f); }

  bool run(const Graph& g, std::uint64_t budget) {
    g_ = &g;
    budget_ = budget;
    work_ = 0;
    values_.assign(static_cast<std::size_t>(slots_), -1);
    return exec(root_);
  }

 private:
  int compile(const Formula& f) {
    using K = Formula::Kind;
    Op op{f.kind()};
    switch (f.kind()) {
      case K::exists:
      case K::forall: {
        const int slot = static_cast<int>(scope_.size());
        slots_ = std::max(slots_, slot + 1);
        // Look for a guard before the variable shadows anything.
        find_guard(f, op);
        scope_.push_back({f.var(), slot});
        op.a = slot;
        op.left = compile(f.left());
        scope_.pop_back();
        break;
      }
      case K::negation:
        op.left = compile(f.left());
        break;
      case K::conj:
      case K::disj:
      case K::implies:
        op.left = compile(f.left());
        op.right = compile(f.right());
        break;
      case K::edge:
      case K::equal:
        op.a = lookup(f.var());
        op.b = lookup(f.var2());
        break;
      case K::degree:
        op.a = lookup(f.var());
        op.relation = f.relation();
        op.bound = f.bound();
        break;
    }
    ops_.push_back(op);
    return static_cast<int>(ops_.size()) - 1;
  }

  int lookup(const std::string& name) const {
    for (auto it = scope_.rbegin(); it != scope_.rend(); ++it)
      if (it->first == name) return it->second;
    throw ContractViolation("eval: free variable '" + name + "'");
  }

  static void conjuncts(const Formula& f, std::vector<const Formula*>& out) {
    if (f.kind() == Formula::Kind::conj) {
      conjuncts(f.left(), out);
      conjuncts(f.right(), out);
    } else {
      out.push_back(&f);
    }
  }

  void find_guard(const Formula& q, Op& op) const {
    std::vector<const Formula*> parts;
    if (q.kind() == Formula::Kind::exists) {
      conjuncts(q.left(), parts);
    } else if (q.left().kind() == Formula::Kind::implies) {
      conjuncts(q.left().left(), parts);
    }
    const std::string& v = q.var();
    for (const Formula* p : parts) {
      if (p->kind() != Formula::Kind::edge && p->kind() != Formula::Kind::equal) continue;
      std::string other;
      if (p->var() == v && p->var2() != v) other = p->var2();
      else if (p->var2() == v && p->var() != v) other = p->var();
      else continue;
      op.guard = p->kind() == Formula::Kind::edge ? Op::Guard::neighbours : Op::Guard::equal;
      op.guard_slot = lookup(other);
      if (op.guard == Op::Guard::equal) return;
    }
  }

  void tick() {
    if (++work_ > budget_) throw BudgetExceeded("eval: work budget exhausted");
  }

  bool quantify(const Op& op, bool want) {
    // Returns `want` as soon as one candidate's body evaluates to it.
    auto visit = [&](int v) {
      tick();
      values_[op.a] = v;
      return exec(op.left) == want;
    };
    switch (op.guard) {
      case Op::Guard::none:
        for (int v = 0; v < g_->order(); ++v)
          if (visit(v)) return true;
        return false;
      case Op::Guard::equal:
        return visit(values_[op.guard_slot]);
      case Op::Guard::neighbours:
        for (int v : g_->neighbors(values_[op.guard_slot]))
          if (visit(v)) return true;
        return false;
    }
    return false;
  }

  bool exec(int index) {
    const Op& op = ops_[index];
    using K = Formula::Kind;
    switch (op.kind) {
      case K::exists: return quantify(op, true);
      case K::forall: return !quantify(op, false);
      case K::negation: return !exec(op.left);
      case K::conj: return exec(op.left) && exec(op.right);
      case K::disj: return exec(op.left) || exec(op.right);
      case K::implies: return !exec(op.left) || exec(op.right);
      case K::edge: return g_->adjacent(values_[op.a], values_[op.b]);
      case K::equal: return values_[op.a] == values_[op.b];
      case K::degree: {
        const int d = g_->degree(values_[op.a]);
        switch (op.relation) {
          case DegreeRelation::at_least: return d >= op.bound;
          case DegreeRelation::at_most: return d <= op.bound;
          case DegreeRelation::exactly: return d == op.bound;
        }
      }
    }
    return false;
  }

  std::vector<Op> ops_;
  int root_ = -1;
  int slots_ = 0;
  std::vector<std::pair<std::string, int>> scope_;
  const Graph* g_ = nullptr;
  std::vector<int> values_;
  std::uint64_t budget_ = 0, work_ = 0;
};

}  // namespace

bool eval(const Graph& g, const Formula& sentence, const EvalOptions& options) {
  Program program(sentence);
  return program.run(g, options.work_budget);
}

// ---------------------------------------------------------------- EF game

const char* to_string(Winner w) { return w == Winner::duplicator ? "Duplicator" : "Spoiler"; }

namespace {

class Game {
 public:
  Game(const Graph& g, const Graph& h, std::uint64_t budget) : g_(g), h_(h), budget_(budget) {}

  bool duplicator_wins(std::vector<std::pair<int, int>>& pairs, int rounds) {
    if (rounds == 0) return true;
    std::vector<std::pair<int, int>> key_pairs = pairs;
    std::sort(key_pairs.begin(), key_pairs.end());
    std::string key(1, static_cast<char>(rounds));
    for (auto [a, b] : key_pairs) {
      key.append(reinterpret_cast<const char*>(&a), sizeof a);
      key.append(reinterpret_cast<const char*>(&b), sizeof b);
    }
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    if (++positions_ > budget_) throw BudgetExceeded("ef_game: position budget exhausted");

    bool result = spoiler_side_fails(pairs, rounds, false) && spoiler_side_fails(pairs, rounds, true);
    memo_.emplace(std::move(key), result);
    return result;
  }

 private:
  // Duplicator answers every fresh Spoiler move on one side.
  bool spoiler_side_fails(std::vector<std::pair<int, int>>& pairs, int rounds, bool in_h) {
    const Graph& from = in_h ? h_ : g_;
    const Graph& to = in_h ? g_ : h_;
    auto mine = [&](const std::pair<int, int>& p) { return in_h ? p.second : p.first; };
    auto theirs = [&](const std::pair<int, int>& p) { return in_h ? p.first : p.second; };
    for (int a = 0; a < from.order(); ++a) {
      if (std::any_of(pairs.begin(), pairs.end(), [&](const auto& p) { return mine(p) == a; }))
        continue;
      bool answered = false;
      for (int b = 0; b < to.order() && !answered; ++b) {
        bool ok = true;
        for (const auto& p : pairs) {
          if (theirs(p) == b || from.adjacent(a, mine(p)) != to.adjacent(b, theirs(p))) {
            ok = false;
            break;
          }
        }
        if (!ok) continue;
        pairs.push_back(in_h ? std::pair{b, a} : std::pair{a, b});
        answered = duplicator_wins(pairs, rounds - 1);
        pairs.pop_back();
      }
      if (!answered) return false;
    }
    return true;
  }

  const Graph& g_;
  const Graph& h_;
  std::uint64_t budget_;
  std::uint64_t positions_ = 0;
  std::unordered_map<std::string, bool> memo_;
};

}  // namespace

Winner ef_game(const Graph& g, const Graph& h, int rounds, const GameOptions& options) {
  if (rounds < 0) throw ContractViolation("ef_game: rounds must be non-negative");
  if (g == h) return Winner::duplicator;
  Game game(g, h, options.position_budget);
  std::vector<std::pair<int, int>> pairs;
  return game.duplicator_wins(pairs, rounds) ? Winner::duplicator : Winner::spoiler;
}

}  // namespace maxdeg
