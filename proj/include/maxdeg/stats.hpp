#pragma once

// Small statistics toolkit for the Monte Carlo checks.

#include <cstdint>
#include <span>

namespace maxdeg {

struct ChiSquareResult {
  double statistic = 0.0;
  int degrees_of_freedom = 0;
  double p_value = 1.0;
};

// Goodness of fit of `observed` counts against the probabilities
// `expected` (renormalised to sum 1). Bins with zero expected mass must have
// zero observations and are skipped; df = used bins - 1.
ChiSquareResult chi_square_test(std::span<const std::int64_t> observed,
                                std::span<const double> expected);

// Upper tail of the chi-square distribution.
double chi_square_upper_tail(double statistic, int degrees_of_freedom);

// Half the L1 distance between the empirical frequencies and `expected`.
double total_variation(std::span<const std::int64_t> observed, std::span<const double> expected);

struct Interval {
  double low = 0.0;
  double high = 1.0;
  bool contains(double x) const { return low <= x && x <= high; }
};

// Wilson score interval for a binomial proportion at normal quantile z.
Interval wilson_interval(std::int64_t successes, std::int64_t trials, double z = 1.959963984540054);

double pearson_correlation(std::span<const double> x, std::span<const double> y);

}  // namespace maxdeg
