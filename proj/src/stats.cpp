#include "maxdeg/stats.hpp"

#include <cmath>
#include <numeric>

#include <boost/math/distributions/chi_squared.hpp>

#include "maxdeg/errors.hpp"

namespace maxdeg {

double chi_square_upper_tail(double statistic, int degrees_of_freedom) {
  if (degrees_of_freedom < 1) return 1.0;
  if (!(statistic > 0.0)) return 1.0;
  boost::math::chi_squared_distribution<double> dist(degrees_of_freedom);
  return boost::math::cdf(boost::math::complement(dist, statistic));
}

ChiSquareResult chi_square_test(std::span<const std::int64_t> observed,
                                std::span<const double> expected) {
  if (observed.size() != expected.size() || observed.empty())
    throw ContractViolation("chi_square_test: bin counts differ or are empty");
  const double total_mass = std::accumulate(expected.begin(), expected.end(), 0.0);
  const double trials =
      static_cast<double>(std::accumulate(observed.begin(), observed.end(), std::int64_t{0}));
  if (!(total_mass > 0.0) || !(trials > 0.0))
    throw ContractViolation("chi_square_test: empty sample or zero expected mass");
  ChiSquareResult out;
  int bins = 0;
  for (std::size_t i = 0; i < observed.size(); ++i) {
    const double e = trials * expected[i] / total_mass;
    if (e <= 0.0) {
      if (observed[i] != 0) {
        out.statistic = INFINITY;
        out.p_value = 0.0;
        out.degrees_of_freedom = static_cast<int>(observed.size()) - 1;
        return out;
      }
      continue;
    }
    const double d = static_cast<double>(observed[i]) - e;
    out.statistic += d * d / e;
    ++bins;
  }
  out.degrees_of_freedom = bins - 1;
  out.p_value = chi_square_upper_tail(out.statistic, out.degrees_of_freedom);
  return out;
}

double total_variation(std::span<const std::int64_t> observed, std::span<const double> expected) {
  if (observed.size() != expected.size())
    throw ContractViolation("total_variation: bin counts differ");
  const double total_mass = std::accumulate(expected.begin(), expected.end(), 0.0);
  const double trials =
      static_cast<double>(std::accumulate(observed.begin(), observed.end(), std::int64_t{0}));
  if (!(total_mass > 0.0) || !(trials > 0.0))
    throw ContractViolation("total_variation: empty sample or zero expected mass");
  double l1 = 0.0;
  for (std::size_t i = 0; i < observed.size(); ++i)
    l1 += std::abs(static_cast<double>(observed[i]) / trials - expected[i] / total_mass);
  return l1 / 2.0;
}

Interval wilson_interval(std::int64_t successes, std::int64_t trials, double z) {
  if (trials <= 0 || successes < 0 || successes > trials)
    throw ContractViolation("wilson_interval: needs 0 <= successes <= trials, trials > 0");
  const double n = static_cast<double>(trials);
  const double p = static_cast<double>(successes) / n;
  const double z2 = z * z;
  const double centre = (p + z2 / (2 * n)) / (1 + z2 / n);
  const double half = z * std::sqrt(p * (1 - p) / n + z2 / (4 * n * n)) / (1 + z2 / n);
  return {std::max(0.0, centre - half), std::min(1.0, centre + half)};
}

double pearson_correlation(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2)
    throw ContractViolation("pearson_correlation: needs two equal-length samples of size >= 2");
  const double n = static_cast<double>(x.size());
  const double mx = std::accumulate(x.begin(), x.end(), 0.0) / n;
  const double my = std::accumulate(y.begin(), y.end(), 0.0) / n;
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
    syy += (y[i] - my) * (y[i] - my);
  }
  if (sxx == 0.0 || syy == 0.0) return 0.0;
  return sxy / std::sqrt(sxx * syy);
}

}  // namespace maxdeg
