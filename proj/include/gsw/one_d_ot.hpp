#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

namespace gsw {

// Stable ascending order: indices idx with values[idx[0]] <= values[idx[1]] <= ...
// Equal values keep their input order.
std::vector<std::size_t> sort_permutation(std::span<const double> values);

// (1/N) sum_n |a_n - b_n|^p for two already sorted sequences of equal length.
double sorted_power_cost(std::span<const double> a_sorted, std::span<const double> b_sorted, double p);

// p-Wasserstein distance between two 1-D empirical measures with N samples
// each: the p-th root of the mean p-th power gap between the sorted samples.
// Throws std::invalid_argument on size mismatch, empty input, or p < 1.
double wasserstein_1d(std::span<const double> x, std::span<const double> y, double p);

// Throws std::invalid_argument unless p >= 1 and finite.
void require_valid_order(double p);

// |d|^p with the common orders special-cased.
inline double power_abs(double d, double p) {
  const double a = d < 0 ? -d : d;
  if (p == 2.0) return a * a;
  if (p == 1.0) return a;
  return std::pow(a, p);
}

// v^(1/p), exact for p = 1 and correctly rounded for p = 2.
inline double root_p(double v, double p) {
  if (p == 2.0) return std::sqrt(v);
  if (p == 1.0) return v;
  return std::pow(v, 1.0 / p);
}

}  // namespace gsw
