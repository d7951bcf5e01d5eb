#include <cmath>
#include <vector>

#include "doctest.h"
#include "gsw/exact_oracle.hpp"
#include "gsw/one_d_ot.hpp"
#include "gsw/random.hpp"
#include "test_support.hpp"

using namespace gsw;

namespace {

std::vector<double> random_values(Rng& rng, std::size_t n, double shift = 0.0) {
  std::vector<double> v(n);
  for (auto& e : v) e = shift + rng.normal();
  return v;
}

PointCloud column(const std::vector<double>& v) {
  Matrix m(static_cast<Eigen::Index>(v.size()), 1);
  for (std::size_t i = 0; i < v.size(); ++i) m(static_cast<Eigen::Index>(i), 0) = v[i];
  return PointCloud(std::move(m));
}

}  // namespace

TEST_CASE("wasserstein_1d examples") {
  CHECK(wasserstein_1d(std::vector<double>{0}, std::vector<double>{1}, 2) == 1.0);
  CHECK(wasserstein_1d(std::vector<double>{1, 2, 3}, std::vector<double>{4, 5, 6}, 1) == 3.0);
  // Both couplings of {0,1} and {0,2}: sorted gives (0 + 1)/2, crossed gives (4 + 1)/2.
  const double expected = testing::brute_force_wp(column({0, 1}), column({0, 2}), 2).cost;
  CHECK(expected == doctest::Approx(std::sqrt(0.5)).epsilon(1e-15));
  CHECK(wasserstein_1d(std::vector<double>{0, 1}, std::vector<double>{0, 2}, 2) == expected);
  CHECK(wasserstein_1d(std::vector<double>{1, 0}, std::vector<double>{2, 0}, 2) == expected);
}

TEST_CASE("sort_permutation") {
  using V = std::vector<std::size_t>;
  CHECK(sort_permutation(std::vector<double>{3, 1, 2}) == V{1, 2, 0});
  CHECK(sort_permutation(std::vector<double>{-1, 0, 4, 9}) == V{0, 1, 2, 3});
  CHECK(sort_permutation(std::vector<double>{1, 1, 0}) == V{2, 0, 1});
}

TEST_CASE("metric properties on random triples") {
  Rng rng(3);
  for (int t = 0; t < 300; ++t) {
    const auto n = 1 + rng.index(40);
    const double p = t % 3 == 0 ? 1.0 : (t % 3 == 1 ? 2.0 : 3.5);
    const auto x = random_values(rng, n), y = random_values(rng, n, 1.0), z = random_values(rng, n, -0.5);
    const double xy = wasserstein_1d(x, y, p);
    CHECK(xy >= 0.0);
    CHECK(xy == wasserstein_1d(y, x, p));
    CHECK(wasserstein_1d(x, x, p) == 0.0);
    CHECK(xy <= wasserstein_1d(x, z, p) + wasserstein_1d(z, y, p) + 1e-12);
    auto shuffled = x;
    std::reverse(shuffled.begin(), shuffled.end());
    CHECK(wasserstein_1d(shuffled, y, p) == xy);
  }
}

TEST_CASE("agrees with the assignment oracle in one dimension") {
  Rng rng(5);
  for (int t = 0; t < 100; ++t) {
    const auto n = 1 + rng.index(64);
    const double p = t % 2 ? 1.0 : 2.0;
    const auto x = random_values(rng, n), y = random_values(rng, n, 0.7);
    const double a = wasserstein_1d(x, y, p);
    const double b = exact_wp(column(x), column(y), p).cost;
    CHECK(std::abs(a - b) <= 1e-10 * std::max(a, b));
  }
}

TEST_CASE("input validation") {
  const std::vector<double> a{1, 2}, b{1};
  CHECK_THROWS_AS(wasserstein_1d(a, b, 2), std::invalid_argument);
  CHECK_THROWS_AS(wasserstein_1d(std::vector<double>{}, std::vector<double>{}, 2), std::invalid_argument);
  CHECK_THROWS_AS(wasserstein_1d(a, a, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(require_valid_order(INFINITY), std::invalid_argument);
}
