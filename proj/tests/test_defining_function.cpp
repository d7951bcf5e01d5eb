#include <cmath>

#include "doctest.h"
#include "gsw/defining_function.hpp"
#include "gsw/random.hpp"
#include "test_support.hpp"

using namespace gsw;

namespace {

Vector vec(std::initializer_list<double> v) {
  Vector out(static_cast<Eigen::Index>(v.size()));
  Eigen::Index i = 0;
  for (double e : v) out(i++) = e;
  return out;
}

Vector random_vector(Rng& rng, std::size_t n, double scale = 1.0) {
  Vector v(static_cast<Eigen::Index>(n));
  for (Eigen::Index i = 0; i < v.size(); ++i) v(i) = scale * rng.normal();
  return v;
}

// Central differences of f along each coordinate of v.
template <class F>
Vector central_difference(F f, const Vector& v, double h = 1e-5) {
  Vector g(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    Vector a = v, b = v;
    a(i) += h;
    b(i) -= h;
    g(i) = (f(a) - f(b)) / (2 * h);
  }
  return g;
}

double rel_error(const Vector& a, const Vector& b) {
  return (a - b).norm() / std::max(1.0, b.norm());
}

}  // namespace

TEST_CASE("dim_theta") {
  CHECK(dim_theta(DefiningFunctionSpec::linear(2)) == 2);
  CHECK(dim_theta(DefiningFunctionSpec::circular(5)) == 5);
  CHECK(dim_theta(DefiningFunctionSpec::polynomial(2, 3)) == 4);
  CHECK(dim_theta(DefiningFunctionSpec::polynomial(2, 5)) == 6);
  CHECK(dim_theta(DefiningFunctionSpec::polynomial(3, 3)) == 10);
  CHECK(dim_theta(DefiningFunctionSpec::polynomial(10, 1)) == 10);
}

TEST_CASE("multi-index table is graded lexicographic") {
  const MultiIndexTable t(2, 3);
  REQUIRE(t.size() == 4);
  const int expected[4][2] = {{3, 0}, {2, 1}, {1, 2}, {0, 3}};
  for (std::size_t k = 0; k < 4; ++k) {
    CHECK(t[k][0] == expected[k][0]);
    CHECK(t[k][1] == expected[k][1]);
  }
  const MultiIndexTable u(4, 5);
  CHECK(u.size() == 56);
  for (std::size_t k = 0; k < u.size(); ++k) {
    int sum = 0;
    for (int a : u[k]) sum += a;
    CHECK(sum == 5);
    if (k > 0) {
      const auto prev = u[k - 1];
      CHECK(std::lexicographical_compare(u[k].begin(), u[k].end(), prev.begin(), prev.end()));
    }
  }
}

TEST_CASE("eval examples") {
  const DefiningFunction lin(DefiningFunctionSpec::linear(2));
  CHECK(lin.eval(vec({0, 1}), vec({1, 2})) == 2.0);
  const DefiningFunction circ(DefiningFunctionSpec::circular(2, 1.0));
  CHECK(circ.eval(vec({1, 0}), vec({0, 0})) == 1.0);
  const DefiningFunction poly(DefiningFunctionSpec::polynomial(2, 3));
  CHECK(poly.eval(vec({1, 0, 0, 0}), vec({2, 1})) == 8.0);
}

TEST_CASE("grad_x examples") {
  const DefiningFunction lin(DefiningFunctionSpec::linear(2));
  CHECK(lin.grad_x(vec({0, 1}), vec({-3, 7})) == vec({0, 1}));
  const DefiningFunction circ(DefiningFunctionSpec::circular(2, 1.0));
  CHECK(circ.grad_x(vec({1, 0}), vec({2, 0})) == vec({1, 0}));
  const DefiningFunction poly(DefiningFunctionSpec::polynomial(2, 3));
  const Vector theta = vec({1, 0, 0, 0});
  const Vector x = vec({2, 1});
  CHECK(poly.grad_x(theta, x) == vec({12, 0}));
  const Vector fd = central_difference([&](const Vector& v) { return poly.eval(theta, v); }, x);
  CHECK(rel_error(fd, vec({12, 0})) < 1e-8);
}

TEST_CASE("grad_theta examples") {
  const DefiningFunction lin(DefiningFunctionSpec::linear(2));
  CHECK(lin.grad_theta(vec({0.6, 0.8}), vec({1, 2})) == vec({1, 2}));
  const DefiningFunction poly(DefiningFunctionSpec::polynomial(2, 3));
  const Vector x = vec({2, 1});
  const Vector theta = vec({0.5, 0.5, 0.5, 0.5});
  CHECK(poly.grad_theta(theta, x) == vec({8, 4, 2, 1}));
  Vector fd = central_difference([&](const Vector& t) { return poly.eval(t, x); }, theta);
  CHECK(rel_error(fd, vec({8, 4, 2, 1})) < 1e-8);
  const DefiningFunction circ(DefiningFunctionSpec::circular(2, 1.0));
  const Vector c_theta = vec({1, 0});
  const Vector c_x = vec({2, 0});
  CHECK(circ.grad_theta(c_theta, c_x) == vec({-1, 0}));
  fd = central_difference([&](const Vector& t) { return circ.eval(t, c_x); }, c_theta);
  CHECK(rel_error(fd, vec({-1, 0})) < 1e-8);
}

TEST_CASE("project_to_domain") {
  CHECK(project_to_domain(vec({2, 0})).vector() == vec({1, 0}));
  const Vector u = vec({0.6, 0.8});
  CHECK((project_to_domain(u).vector() - u).norm() < 1e-15);
  const Vector p = project_to_domain(vec({3, 4})).vector();
  CHECK(p(0) == doctest::Approx(0.6).epsilon(1e-15));
  CHECK(p(1) == doctest::Approx(0.8).epsilon(1e-15));
  CHECK_THROWS_AS(project_to_domain(vec({0, 0})), std::invalid_argument);
  CHECK_THROWS_AS(project_to_domain(vec({NAN, 1})), std::invalid_argument);
  CHECK_THROWS_AS(ThetaParams(vec({1, 1})), std::invalid_argument);
}

TEST_CASE("homogeneity in theta for linear and polynomial families") {
  Rng rng(31);
  for (const auto& spec : {DefiningFunctionSpec::linear(3), DefiningFunctionSpec::polynomial(3, 3),
                           DefiningFunctionSpec::polynomial(2, 5)}) {
    const DefiningFunction g(spec);
    for (int t = 0; t < 200; ++t) {
      const Vector theta = random_vector(rng, g.theta_dim());
      const Vector x = random_vector(rng, g.data_dim());
      const double lambda = rng.uniform(-5.0, 5.0);
      const double a = g.eval(lambda * theta, x);
      const double b = lambda * g.eval(theta, x);
      CHECK(std::abs(a - b) <= 1e-10 * std::max(1.0, std::abs(b)));
    }
  }
}

TEST_CASE("gradients agree with central differences") {
  Rng rng(37);
  for (const auto& spec : {DefiningFunctionSpec::linear(3), DefiningFunctionSpec::circular(3, 1.5),
                           DefiningFunctionSpec::polynomial(2, 3), DefiningFunctionSpec::polynomial(3, 5)}) {
    CAPTURE(spec.label());
    const DefiningFunction g(spec);
    for (int t = 0; t < 100; ++t) {
      const Vector theta = project_to_domain(random_vector(rng, g.theta_dim())).vector();
      const Vector x = random_vector(rng, g.data_dim());
      if (spec.family == Family::circular && (x - spec.radius * theta).norm() < 1e-3) continue;
      const Vector fx = central_difference([&](const Vector& v) { return g.eval(theta, v); }, x);
      const Vector ft = central_difference([&](const Vector& v) { return g.eval(v, x); }, theta);
      CHECK(rel_error(g.grad_x(theta, x), fx) < 1e-5);
      CHECK(rel_error(g.grad_theta(theta, x), ft) < 1e-5);
    }
  }
}

TEST_CASE("linear and circular are 1-Lipschitz in x") {
  Rng rng(41);
  for (const auto& spec : {DefiningFunctionSpec::linear(4), DefiningFunctionSpec::circular(4, 2.0)}) {
    const DefiningFunction g(spec);
    for (int t = 0; t < 500; ++t) {
      const Vector theta = project_to_domain(random_vector(rng, 4)).vector();
      const Vector x = random_vector(rng, 4, 3.0);
      const Vector y = random_vector(rng, 4, 3.0);
      CHECK(std::abs(g.eval(theta, x) - g.eval(theta, y)) <= (x - y).norm() + 1e-12);
    }
  }
}

TEST_CASE("degree one polynomial is the linear function") {
  Rng rng(43);
  const DefiningFunction poly(DefiningFunctionSpec::polynomial(5, 1));
  const DefiningFunction lin(DefiningFunctionSpec::linear(5));
  for (int t = 0; t < 100; ++t) {
    const Vector theta = project_to_domain(random_vector(rng, 5)).vector();
    const Vector x = random_vector(rng, 5);
    CHECK(poly.eval(theta, x) == lin.eval(theta, x));
  }
}

TEST_CASE("projecting a cloud matches pointwise evaluation") {
  Rng rng(47);
  const auto cloud = testing::gaussian_cloud(rng, 20, 2);
  for (const auto& spec : {DefiningFunctionSpec::linear(2), DefiningFunctionSpec::circular(2, 3.0),
                           DefiningFunctionSpec::polynomial(2, 3)}) {
    const DefiningFunction g(spec);
    const auto theta = sample_slices(spec, 1, 5).front();
    std::vector<double> out;
    g.project(cloud, theta.vector(), out);
    REQUIRE(out.size() == 20);
    for (std::size_t i = 0; i < 20; ++i) {
      CHECK(out[i] == doctest::Approx(g.eval(theta.vector(), cloud.point(i))).epsilon(1e-14));
    }
  }
}

TEST_CASE("sample_slices lie on the parameter sphere") {
  const auto spec = DefiningFunctionSpec::polynomial(3, 3);
  const auto slices = sample_slices(spec, 50, 9);
  REQUIRE(slices.size() == 50);
  for (const auto& s : slices) {
    CHECK(s.dim() == 10);
    CHECK(std::abs(s.vector().norm() - 1.0) < 1e-12);
  }
}

TEST_CASE("circular singularity and invalid specs") {
  const DefiningFunction circ(DefiningFunctionSpec::circular(2, 1.0));
  CHECK_THROWS_AS(circ.grad_x(vec({1, 0}), vec({1, 0})), DegeneratePointError);
  CHECK_THROWS_AS(circ.grad_theta(vec({1, 0}), vec({1, 0})), DegeneratePointError);
  CHECK(circ.eval(vec({1, 0}), vec({1, 0})) == 0.0);
  CHECK_THROWS_AS(DefiningFunction(DefiningFunctionSpec::polynomial(2, 2)), std::invalid_argument);
  CHECK_THROWS_AS(DefiningFunction(DefiningFunctionSpec::polynomial(2, -1)), std::invalid_argument);
  CHECK_THROWS_AS(DefiningFunction(DefiningFunctionSpec::circular(2, 0.0)), std::invalid_argument);
  CHECK_THROWS_AS(DefiningFunction(DefiningFunctionSpec::linear(0)), std::invalid_argument);
  const DefiningFunction lin(DefiningFunctionSpec::linear(2));
  CHECK_THROWS_AS(lin.eval(vec({1, 0}), vec({1, 0, 0})), std::invalid_argument);
  CHECK_THROWS_AS(parse_family("sigmoid"), std::invalid_argument);
  CHECK(parse_family("poly") == Family::poly_homogeneous);
  CHECK(DefiningFunctionSpec::polynomial(2, 3).label() == "poly3");
}
