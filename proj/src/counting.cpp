#include "maxdeg/counting.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "maxdeg/census.hpp"
#include "maxdeg/errors.hpp"

namespace maxdeg {

namespace {

mpz_class factorial(std::int64_t n) {
  mpz_class out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
  return out;
}

mpz_class power(const mpz_class& base, std::int64_t e) {
  mpz_class out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(e));
  return out;
}

double log_factorial(std::int64_t n) { return std::lgamma(static_cast<double>(n) + 1.0); }

void require_even(std::int64_t two_m, const char* who) {
  if (two_m < 0 || two_m % 2 != 0)
    throw ContractViolation(std::string(who) + ": point count must be even and non-negative");
}

}  // namespace

DegreeClass::DegreeClass(std::vector<std::int64_t> counts) : counts_(std::move(counts)) {
  if (counts_.empty()) throw ContractViolation("degree class needs at least d_0");
  for (std::size_t i = 0; i < counts_.size(); ++i) {
    if (counts_[i] < 0) throw ContractViolation("degree class entries must be non-negative");
    order_ += counts_[i];
    twice_edges_ += static_cast<std::int64_t>(i) * counts_[i];
  }
}

std::string DegreeClass::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < counts_.size(); ++i) {
    if (i) out += ';';
    out += std::to_string(counts_[i]);
  }
  return out;
}

double log_of(const mpz_class& x) {
  if (sgn(x) <= 0) {
    if (sgn(x) == 0) return -std::numeric_limits<double>::infinity();
    throw ContractViolation("log_of: negative argument");
  }
  long exp2 = 0;
  const double mant = mpz_get_d_2exp(&exp2, x.get_mpz_t());
  return std::log(mant) + static_cast<double>(exp2) * std::numbers::ln2;
}

double log_of(const mpq_class& x) { return log_of(x.get_num()) - log_of(x.get_den()); }

mpz_class matchings(std::int64_t two_m) {
  require_even(two_m, "matchings");
  mpz_class out;
  mpz_2fac_ui(out.get_mpz_t(), static_cast<unsigned long>(two_m > 0 ? two_m - 1 : 0));
  return out;
}

double log_matchings(std::int64_t two_m) {
  require_even(two_m, "log_matchings");
  const std::int64_t m = two_m / 2;
  return log_factorial(two_m) - log_factorial(m) - static_cast<double>(m) * std::numbers::ln2;
}

double log_matchings_stirling(std::int64_t two_m) {
  require_even(two_m, "matchings_stirling");
  if (two_m < 2) throw ContractViolation("matchings_stirling: needs 2m >= 2");
  const double m = static_cast<double>(two_m / 2);
  return m * (std::log(2.0 * m) - 1.0) + 0.5 * std::numbers::ln2;
}

double matchings_stirling(std::int64_t two_m) { return std::exp(log_matchings_stirling(two_m)); }

namespace {

mpz_class matching_ratio_exact(std::int64_t m, std::int64_t p) {
  if (m < 0 || p < 0 || p > m) throw ContractViolation("matching_ratio: needs 0 <= p <= m");
  // M(2m) / M(2m-2p) = (2m-1)(2m-3)...(2m-2p+1)
  mpz_class out = 1;
  for (std::int64_t i = 0; i < p; ++i) out *= static_cast<unsigned long>(2 * m - 1 - 2 * i);
  return out;
}

}  // namespace

double matching_ratio(std::int64_t m, std::int64_t p) {
  return matching_ratio_exact(m, p).get_d();
}

double matching_ratio_relative_error(std::int64_t m, std::int64_t p) {
  const mpz_class exact = matching_ratio_exact(m, p);
  const mpz_class approx = power(mpz_class(static_cast<unsigned long>(2 * m)), p);
  mpq_class rel(exact - approx, approx);
  rel.canonicalize();
  return std::abs(rel.get_d());
}

mpz_class degree_class_configurations(const DegreeClass& d) {
  if (!d.even()) throw ContractViolation("degree class has odd degree sum");
  mpz_class multinomial = factorial(d.order());
  for (std::int64_t c : d.counts()) multinomial /= factorial(c);
  return multinomial * matchings(d.twice_edges());
}

ExactWeight degree_class_weight(const DegreeClass& d) {
  mpz_class den = 1;
  for (int i = 2; i <= d.max_degree(); ++i)
    if (d[i] > 0) den *= power(factorial(i), d[i]);
  ExactWeight w;
  w.value = mpq_class(degree_class_configurations(d), den);
  w.value.canonicalize();
  w.log_value = log_of(w.value);
  return w;
}

double degree_class_log_weight(const DegreeClass& d) {
  if (!d.even()) throw ContractViolation("degree class has odd degree sum");
  double out = log_factorial(d.order()) + log_matchings(d.twice_edges());
  for (int i = 0; i <= d.max_degree(); ++i)
    out -= log_factorial(d[i]) + static_cast<double>(d[i]) * log_factorial(i);
  return out;
}

mpz_class falling_factorial(std::int64_t n, std::int64_t k) {
  if (k < 0 || k > n) throw ContractViolation("falling_factorial: needs 0 <= k <= n");
  mpz_class out = 1;
  for (std::int64_t i = 0; i < k; ++i) out *= static_cast<unsigned long>(n - i);
  return out;
}

double falling_factorial_approx(std::int64_t n, std::int64_t k) {
  if (k < 0 || k > n) throw ContractViolation("falling_factorial_approx: needs 0 <= k <= n");
  if (k == 0) return 1.0;
  const double nn = static_cast<double>(n);
  const double kk = static_cast<double>(k);
  return std::exp(kk * std::log(nn) - kk * kk / (2.0 * nn));
}

double asymptotic_class_logweight(std::int64_t n, int R, std::int64_t d_r2, std::int64_t d_r1) {
  if (n <= 0 || R < 2 || d_r2 < 0 || d_r1 < 0)
    throw ContractViolation("asymptotic_class_logweight: needs n > 0, R >= 2, counts >= 0");
  const double nn = static_cast<double>(n);
  const double a = static_cast<double>(d_r2);
  const double b = static_cast<double>(d_r1);
  const double rn = static_cast<double>(R) * nn;
  double out = 0.0;
  if (d_r2 > 0) out += a * std::log(static_cast<double>(R - 1));
  out -= log_factorial(d_r2);
  out += b * 0.5 * std::log(rn) - log_factorial(d_r1);
  out += -(a + b) * (a + b) / (2.0 * nn) + (b + 2.0 * a) * (b + 2.0 * a) / (4.0 * rn);
  return out;
}

mpq_class lambda_p(int R, int p) {
  if (R < 2 || p < 1) throw ContractViolation("lambda_p: needs R >= 2, p >= 1");
  mpq_class out(power(mpz_class(R - 1), p), mpz_class(2 * p));
  out.canonicalize();
  return out;
}

mpq_class mu_p(int R, int p) {
  if (R < 2 || p < 1) throw ContractViolation("mu_p: needs R >= 2, p >= 1");
  mpq_class out(power(mpz_class(R - 1), p + 1), mpz_class(2));
  out.canonicalize();
  return out;
}

int degree_poisson_mean(int R) {
  if (R < 2) throw ContractViolation("degree_poisson_mean: needs R >= 2");
  return R - 1;
}

double poisson_pmf(std::int64_t x, double mean) {
  if (x < 0) return 0.0;
  if (mean == 0.0) return x == 0 ? 1.0 : 0.0;
  return std::exp(static_cast<double>(x) * std::log(mean) - mean - log_factorial(x));
}

double simplicity_constant(int R) {
  if (R < 2) throw ContractViolation("simplicity_constant: needs R >= 2");
  const double r1 = R - 1;
  return std::exp(-r1 / 2.0 - r1 * r1 / 4.0);
}

double truncated_poisson(int k, int x, double mean) {
  if (k < 0 || x < 0 || x > k) throw ContractViolation("truncated_poisson: needs 0 <= x <= k");
  if (!(mean > 0.0)) throw ContractViolation("truncated_poisson: needs mean > 0");
  if (x < k) return poisson_pmf(x, mean);
  double below = 0.0;
  for (int i = 0; i < k; ++i) below += poisson_pmf(i, mean);
  return std::max(0.0, 1.0 - below);
}

double profile_limit_log_probability(const StructureProfile& profile, int R) {
  if (!profile.well_formed()) throw ContractViolation("profile_limit_probability: malformed profile");
  if (R < 2) throw ContractViolation("profile_limit_probability: needs R >= 2");
  const int k = profile.k;
  const auto m = static_cast<int>(profile.length());
  double out = std::log(truncated_poisson(k, profile.q, R - 1));
  for (int p = 3; p <= m; ++p)
    out += std::log(truncated_poisson(k, profile.cycles[p], lambda_p(R, p).get_d()));
  for (int p = 1; p <= m; ++p)
    out += std::log(truncated_poisson(k, profile.paths[p], mu_p(R, p).get_d()));
  return out;
}

double profile_limit_probability(const StructureProfile& profile, int R) {
  return std::exp(profile_limit_log_probability(profile, R));
}

}  // namespace maxdeg
