#pragma once

// First-order sentences over the edge relation: parsing, printing,
// quantifier rank, degree macros, model checking and the
// Ehrenfeucht-Fraisse game.
//
// Concrete syntax (precedence ! > & > | > ->, "->" right-associative,
// quantifier bodies extend as far right as possible):
//   formula := "exists" var "." formula | "forall" var "." formula
//            | formula ("&" | "|" | "->") formula | "!" formula | "(" formula ")"
//            | "E(" var "," var ")" | var "=" var
//            | "deg(" var ")" ("=" | ">=" | "<=") int
//   var     := [a-z][a-z0-9]*   (keywords excluded)

#include <cstdint>
#include <memory>
#include <set>
#include <string>
#include <string_view>

#include "maxdeg/graph.hpp"

namespace maxdeg {

enum class DegreeRelation { at_least, at_most, exactly };

class Formula {
 public:
  enum class Kind { exists, forall, conj, disj, implies, negation, edge, equal, degree };

  static Formula exists(std::string var, Formula body);
  static Formula forall(std::string var, Formula body);
  static Formula conj(Formula a, Formula b);
  static Formula disj(Formula a, Formula b);
  static Formula implies(Formula a, Formula b);
  static Formula negation(Formula a);
  static Formula edge(std::string x, std::string y);
  static Formula equal(std::string x, std::string y);
  static Formula degree(std::string x, DegreeRelation rel, int bound);

  Kind kind() const { return node_->kind; }
  // Bound variable of a quantifier, first variable of an atom.
  const std::string& var() const { return node_->var; }
  // Second variable of E or =.
  const std::string& var2() const { return node_->var2; }
  // Quantifier body, negated formula, or left operand.
  const Formula& left() const { return *node_->left; }
  const Formula& right() const { return *node_->right; }
  DegreeRelation relation() const { return node_->relation; }
  int bound() const { return node_->bound; }

  bool is_quantifier() const { return kind() == Kind::exists || kind() == Kind::forall; }
  bool is_binary() const {
    return kind() == Kind::conj || kind() == Kind::disj || kind() == Kind::implies;
  }

  friend bool operator==(const Formula& a, const Formula& b);

 private:
  struct Node {
    Kind kind;
    std::string var, var2;
    std::shared_ptr<const Formula> left, right;
    DegreeRelation relation = DegreeRelation::at_least;
    int bound = 0;
  };
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

// Any formula; free variables allowed.
Formula parse_formula(std::string_view text);
// A sentence; a free variable is a ParseError at its first occurrence.
Formula parse(std::string_view text);

// Minimal parenthesisation; parse(to_string(f)) == f.
std::string to_string(const Formula& f);

std::set<std::string> free_variables(const Formula& f);
std::set<std::string> variables(const Formula& f);

// Rank of the formula after degree macros are expanded.
int qrank(const Formula& f);

struct DegreeExpansion {
  Formula formula;
  int rank = 0;
  bool exceeds_max_degree = false;  // c > R: false on every graph of the ensemble
};

// deg(x) >= c  ->  exists y1..yc (pairwise distinct & E(x, y_i))
// deg(x) <= c  ->  !(deg(x) >= c+1)
// deg(x) =  c  ->  deg(x) >= c & !(deg(x) >= c+1)
// c = 0: ">= 0" is x = x, "= 0" and "<= 0" are !exists y E(x, y).
// Fresh names avoid everything in `taken`.
DegreeExpansion expand_degree(const std::string& x, DegreeRelation rel, int c, int max_degree,
                              const std::set<std::string>& taken = {});

// Replaces every degree macro by its expansion.
Formula desugar_degree(const Formula& f);

struct EvalOptions {
  // Total quantifier-candidate visits allowed.
  std::uint64_t work_budget = 2'000'000'000;
};

// Truth of a sentence. Quantifiers whose body pins the variable to a
// neighbour of (or equality with) an outer variable range over that
// neighbourhood only. Throws BudgetExceeded, ContractViolation on free vars.
bool eval(const Graph& g, const Formula& sentence, const EvalOptions& options = {});

enum class Winner { duplicator, spoiler };
const char* to_string(Winner w);

struct GameOptions {
  std::uint64_t position_budget = 5'000'000;
};

// k-round Ehrenfeucht-Fraisse game by memoised search over partial maps.
// Throws BudgetExceeded.
Winner ef_game(const Graph& g, const Graph& h, int rounds, const GameOptions& options = {});

}  // namespace maxdeg
