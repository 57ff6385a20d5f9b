#pragma once

// Random first-order sentences of bounded quantifier rank, and a naive
// evaluator that tries every assignment with no shortcuts.

#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "maxdeg/graph.hpp"
#include "maxdeg/logic.hpp"

namespace gen {

class SentenceGenerator {
 public:
  SentenceGenerator(std::uint64_t seed, bool degree_atoms = true)
      : rng_(seed), degree_atoms_(degree_atoms) {}

  // A sentence of rank at most `rank` (rank >= 1).
  maxdeg::Formula sentence(int rank) {
    std::vector<std::string> scope;
    return formula(rank, scope, 3);
  }

 private:
  int pick(int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng_); }

  maxdeg::Formula quantified(int rank, std::vector<std::string>& scope, int size) {
    // Mostly fresh names, sometimes a shadowing reuse.
    std::string v = (!scope.empty() && pick(6) == 0) ? scope[pick(static_cast<int>(scope.size()))]
                                                     : "x" + std::to_string(scope.size());
    scope.push_back(v);
    maxdeg::Formula body = formula(rank - 1, scope, size);
    scope.pop_back();
    return pick(2) ? maxdeg::Formula::exists(v, body) : maxdeg::Formula::forall(v, body);
  }

  maxdeg::Formula formula(int rank, std::vector<std::string>& scope, int size) {
    if (scope.empty()) {
      if (size > 0 && pick(4) == 0) {
        maxdeg::Formula a = formula(rank, scope, size - 1);
        maxdeg::Formula b = formula(rank, scope, size - 1);
        return pick(2) ? maxdeg::Formula::conj(a, b) : maxdeg::Formula::disj(a, b);
      }
      return quantified(rank, scope, size);
    }
    const int choice = pick(size > 0 ? 7 : 3);
    if (choice <= 1 || (choice >= 5 && rank == 0)) return atom(rank, scope);
    if (choice == 2 && rank > 0) return quantified(rank, scope, size);
    if (choice == 2) return atom(rank, scope);
    if (choice == 3) return maxdeg::Formula::negation(formula(rank, scope, size - 1));
    maxdeg::Formula a = formula(rank, scope, size - 1);
    maxdeg::Formula b = formula(rank, scope, size - 1);
    switch (pick(3)) {
      case 0: return maxdeg::Formula::conj(a, b);
      case 1: return maxdeg::Formula::disj(a, b);
      default: return maxdeg::Formula::implies(a, b);
    }
  }

  maxdeg::Formula atom(int rank, const std::vector<std::string>& scope) {
    const std::string& x = scope[pick(static_cast<int>(scope.size()))];
    const std::string& y = scope[pick(static_cast<int>(scope.size()))];
    if (degree_atoms_ && pick(5) == 0) {
      // deg(x) >= c costs rank c, the other two cost c + 1.
      const int rel = pick(3);
      const int top = rel == 0 ? rank : rank - 1;
      if (top >= 0) {
        const int c = pick(top + 1);
        return maxdeg::Formula::degree(x, static_cast<maxdeg::DegreeRelation>(rel), c);
      }
    }
    return pick(3) ? maxdeg::Formula::edge(x, y) : maxdeg::Formula::equal(x, y);
  }

  std::mt19937_64 rng_;
  bool degree_atoms_;
};

// Plain recursive evaluation over all assignments; degree atoms are
// answered from the graph directly.
inline bool naive_eval(const maxdeg::Graph& g, const maxdeg::Formula& f,
                       std::map<std::string, int>& env) {
  using K = maxdeg::Formula::Kind;
  switch (f.kind()) {
    case K::exists:
    case K::forall: {
      const bool want = f.kind() == K::exists;
      const auto saved = env.find(f.var()) != env.end() ? std::optional<int>(env[f.var()])
                                                        : std::nullopt;
      bool result = !want;
      for (int v = 0; v < g.order(); ++v) {
        env[f.var()] = v;
        if (naive_eval(g, f.left(), env) == want) {
          result = want;
          break;
        }
      }
      if (saved) env[f.var()] = *saved;
      else env.erase(f.var());
      return result;
    }
    case K::negation: return !naive_eval(g, f.left(), env);
    case K::conj: return naive_eval(g, f.left(), env) && naive_eval(g, f.right(), env);
    case K::disj: return naive_eval(g, f.left(), env) || naive_eval(g, f.right(), env);
    case K::implies: return !naive_eval(g, f.left(), env) || naive_eval(g, f.right(), env);
    case K::edge: return g.adjacent(env.at(f.var()), env.at(f.var2()));
    case K::equal: return env.at(f.var()) == env.at(f.var2());
    case K::degree: {
      const int d = g.degree(env.at(f.var()));
      switch (f.relation()) {
        case maxdeg::DegreeRelation::at_least: return d >= f.bound();
        case maxdeg::DegreeRelation::at_most: return d <= f.bound();
        case maxdeg::DegreeRelation::exactly: return d == f.bound();
      }
    }
  }
  return false;
}

inline bool naive_eval(const maxdeg::Graph& g, const maxdeg::Formula& f) {
  std::map<std::string, int> env;
  return naive_eval(g, f, env);
}

}  // namespace gen
