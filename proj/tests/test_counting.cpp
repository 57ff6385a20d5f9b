#include <doctest.h>

#include <cmath>

#include "maxdeg/census.hpp"
#include "maxdeg/counting.hpp"
#include "maxdeg/errors.hpp"
#include "maxdeg/oracle.hpp"

using namespace maxdeg;

namespace {

DegreeClass cls(std::vector<std::int64_t> d) { return DegreeClass(std::move(d)); }

// Every (d_0..d_R) with the given order, even sum or not.
std::vector<DegreeClass> all_classes(int n, int R) {
  std::vector<DegreeClass> out;
  std::vector<std::int64_t> d(R + 1, 0);
  std::function<void(int, int)> rec = [&](int i, int left) {
    if (i == R) {
      d[R] = left;
      out.emplace_back(d);
      return;
    }
    for (int c = 0; c <= left; ++c) {
      d[i] = c;
      rec(i + 1, left - c);
    }
  };
  rec(0, n);
  return out;
}

}  // namespace

TEST_CASE("matching counts are odd double factorials") {
  const long want[] = {1, 1, 3, 15, 105, 945, 10395};
  for (int m = 0; m <= 6; ++m) CHECK(matchings(2 * m) == want[m]);
  CHECK_THROWS_AS(matchings(7), ContractViolation);
  CHECK_THROWS_AS(matchings(-2), ContractViolation);
  CHECK(log_matchings(20) == doctest::Approx(std::log(654729075.0)).epsilon(1e-12));
}

TEST_CASE("matching counts agree with matching enumeration") {
  for (int m = 1; m <= 5; ++m) {
    const auto table = oracle::enumerate_configurations(std::vector<int>(2 * m, 1));
    CHECK(mpz_class(static_cast<long>(table.configurations.size())) == matchings(2 * m));
  }
}

TEST_CASE("Stirling form approaches the exact count") {
  double previous = 1.0;
  for (std::int64_t m : {5, 50, 500, 5000, 50000}) {
    const double rel = std::abs(std::exp(log_matchings(2 * m) - log_matchings_stirling(2 * m)) - 1);
    CHECK(rel < 1.0 / (10.0 * static_cast<double>(m)));
    CHECK(rel < previous);
    previous = rel;
  }
}

TEST_CASE("matching quotient behaves like (2m)^p") {
  CHECK(matching_ratio(5, 2) == doctest::Approx(9.0 * 7.0));
  for (int p : {1, 2, 5}) {
    double previous = 1.0;
    for (std::int64_t m : {10, 100, 1000, 10000}) {
      // first-order error is p^2 / 2m
      const double rel = matching_ratio_relative_error(m, p);
      CHECK(rel <= previous);
      CHECK(rel < static_cast<double>(p * p) / static_cast<double>(m));
      previous = rel;
    }
  }
  CHECK_THROWS_AS(matching_ratio(3, 4), ContractViolation);
}

TEST_CASE("class weights for n = 3, R = 2") {
  CHECK(degree_class_weight(cls({3, 0, 0})).value == 1);
  CHECK(degree_class_weight(cls({1, 2, 0})).value == 3);
  CHECK(degree_class_weight(cls({2, 0, 1})).value == mpq_class(3, 2));
  CHECK(degree_class_weight(cls({0, 2, 1})).value == mpq_class(9, 2));
  CHECK(degree_class_weight(cls({1, 0, 2})).value == mpq_class(9, 4));
  CHECK(degree_class_weight(cls({0, 0, 3})).value == mpq_class(15, 8));
  CHECK_THROWS_AS(degree_class_weight(cls({2, 1, 0})), ContractViolation);
}

TEST_CASE("class weights match configuration enumeration for n <= 4") {
  for (int n = 1; n <= 4; ++n)
    for (int R = 1; R <= 3; ++R)
      for (const DegreeClass& d : all_classes(n, R)) {
        if (!d.even()) continue;
        const ExactWeight w = degree_class_weight(d);
        CHECK(w.value == oracle::class_configuration_mass(d));
        CHECK(degree_class_log_weight(d) == doctest::Approx(w.log_value).epsilon(1e-10));
      }
}

TEST_CASE("falling factorials") {
  CHECK(falling_factorial(6, 3) == 120);
  CHECK(falling_factorial(5, 0) == 1);
  CHECK_THROWS_AS(falling_factorial(3, 4), ContractViolation);
  const double exact = falling_factorial(10'000, 30).get_d();
  CHECK(falling_factorial_approx(10'000, 30) / exact == doctest::Approx(1.0).epsilon(5e-3));
}

TEST_CASE("asymptotic class weights track exact log weight differences") {
  // Ratios between typical classes at R = 3; the n-only factor cancels.
  const std::int64_t n = 200000;
  const int R = 3;
  const std::int64_t b0 = static_cast<std::int64_t>(std::sqrt(3.0 * n));
  auto exact = [&](std::int64_t a, std::int64_t b) {
    return degree_class_log_weight(cls({0, a, b, n - a - b}));
  };
  const double base_exact = exact(0, b0);
  const double base_asym = asymptotic_class_logweight(n, R, 0, b0);
  for (std::int64_t a : {0, 1, 2, 4})
    for (std::int64_t db : {-40, -20, 0, 20, 40}) {
      const std::int64_t b = b0 + db;
      if ((a * 1 + b * 2 + (n - a - b) * 3) % 2 != 0) continue;
      CHECK(exact(a, b) - base_exact ==
            doctest::Approx(asymptotic_class_logweight(n, R, a, b) - base_asym).epsilon(0.02));
    }
}

TEST_CASE("Poisson means and the simplicity constant") {
  CHECK(lambda_p(3, 3) == mpq_class(4, 3));
  CHECK(lambda_p(3, 4) == 2);
  CHECK(lambda_p(2, 3) == mpq_class(1, 6));
  CHECK(mu_p(3, 1) == 2);
  CHECK(mu_p(4, 2) == mpq_class(27, 2));
  CHECK(degree_poisson_mean(3) == 2);
  CHECK(simplicity_constant(3) == doctest::Approx(std::exp(-2.0)));
  CHECK(simplicity_constant(2) == doctest::Approx(std::exp(-0.75)));
  for (int R = 2; R <= 6; ++R)
    CHECK(simplicity_constant(R) ==
          doctest::Approx(std::exp(-lambda_p(R, 1).get_d() - lambda_p(R, 2).get_d())));
}

TEST_CASE("truncated Poisson masses sum to one") {
  for (int k = 0; k <= 12; ++k)
    for (double mean : {0.1, 1.0 / 6, 1.0, 2.0, 4.0 / 3, 13.5, 40.0}) {
      double sum = 0.0;
      for (int x = 0; x <= k; ++x) sum += truncated_poisson(k, x, mean);
      CHECK(std::abs(sum - 1.0) < 1e-12);
    }
  CHECK(truncated_poisson(3, 0, 2.0) == doctest::Approx(std::exp(-2.0)));
  CHECK_THROWS_AS(truncated_poisson(2, 3, 1.0), ContractViolation);
}

TEST_CASE("profile limit probability of the all-zero profile") {
  // k = 1: every coordinate at 0, so the product is exp(-sum of all means).
  const int R = 2;
  const StructureProfile z = StructureProfile::zero(1);
  double log_expected = -1.0;
  for (int p = 3; p <= 25; ++p) log_expected -= lambda_p(R, p).get_d();
  for (int p = 1; p <= 25; ++p) log_expected -= mu_p(R, p).get_d();
  CHECK(profile_limit_log_probability(z, R) == doctest::Approx(log_expected));
}
