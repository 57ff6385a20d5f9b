#pragma once

// Exact and asymptotic evaluation of the closed-form quantities behind the
// bounded-degree ensemble: matching counts, degree-class weights, falling
// factorials, the cycle/path Poisson means, the simplicity constant, and the
// truncated Poisson masses that give class limit probabilities.
//
// Approximants (Stirling, matching ratio, falling factorial) drop their
// o(1) terms and exist to be compared against the exact values.

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace maxdeg {

struct StructureProfile;

// (d_0, ..., d_R): number of vertices of each degree.
class DegreeClass {
 public:
  explicit DegreeClass(std::vector<std::int64_t> counts);

  int max_degree() const noexcept { return static_cast<int>(counts_.size()) - 1; }
  std::int64_t order() const noexcept { return order_; }
  std::int64_t twice_edges() const noexcept { return twice_edges_; }
  bool even() const noexcept { return twice_edges_ % 2 == 0; }
  std::int64_t operator[](int degree) const { return counts_[degree]; }
  const std::vector<std::int64_t>& counts() const noexcept { return counts_; }

  // "d0;d1;...;dR"
  std::string to_string() const;

  friend bool operator==(const DegreeClass&, const DegreeClass&) = default;
  friend auto operator<=>(const DegreeClass&, const DegreeClass&) = default;

 private:
  std::vector<std::int64_t> counts_;
  std::int64_t order_ = 0;
  std::int64_t twice_edges_ = 0;
};

// Exact rational value with a natural-log shadow (log(0) = -inf).
struct ExactWeight {
  mpq_class value;
  double log_value = 0.0;
};

double log_of(const mpz_class& x);
double log_of(const mpq_class& x);

// M(2m) = (2m)! / (m! 2^m), the perfect matchings on 2m points.
mpz_class matchings(std::int64_t two_m);
// log M(2m) via log-gamma.
double log_matchings(std::int64_t two_m);
// (2m/e)^m * sqrt(2).
double matchings_stirling(std::int64_t two_m);
double log_matchings_stirling(std::int64_t two_m);

// M(2m) / M(2m - 2p) evaluated exactly, then rounded.
double matching_ratio(std::int64_t m, std::int64_t p);
// |M(2m)/M(2m-2p) - (2m)^p| / (2m)^p
double matching_ratio_relative_error(std::int64_t m, std::int64_t p);

// multinomial(n; d) * M(2m) / prod_i (i!)^{d_i}.
ExactWeight degree_class_weight(const DegreeClass& d);
// The same quantity evaluated with log-gamma only.
double degree_class_log_weight(const DegreeClass& d);

// Exact configuration mass of the class: multinomial(n; d) * M(2m).
mpz_class degree_class_configurations(const DegreeClass& d);

mpz_class falling_factorial(std::int64_t n, std::int64_t k);
// n^k * exp(-k^2 / 2n)
double falling_factorial_approx(std::int64_t n, std::int64_t k);

// log of (R-1)^a / a! * sqrt(Rn)^b / b! * exp(-(a+b)^2/2n + (b+2a)^2/4Rn)
// with a = d_{R-2}, b = d_{R-1}; the n-only factor C_n is left out.
double asymptotic_class_logweight(std::int64_t n, int R, std::int64_t d_r2, std::int64_t d_r1);

// Cycle mean (R-1)^p / 2p and degree-(R-1) path mean (R-1)^(p+1) / 2.
mpq_class lambda_p(int R, int p);
mpq_class mu_p(int R, int p);

int degree_poisson_mean(int R);
double poisson_pmf(std::int64_t x, double mean);

// exp(-(R-1)/2 - (R-1)^2/4)
double simplicity_constant(int R);

// Poisson pmf below the cap k, the complementary tail mass at x == k.
double truncated_poisson(int k, int x, double mean);

// P_k(q, R-1) * prod_p P_k(r_p, lambda_p) * prod_p P_k(s_p, mu_p)
double profile_limit_probability(const StructureProfile& profile, int R);
double profile_limit_log_probability(const StructureProfile& profile, int R);

}  // namespace maxdeg
