#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "gsw/point_cloud.hpp"

namespace gsw {

enum class Family { linear, circular, poly_homogeneous };

std::string_view to_string(Family family);
// "linear", "circular", "poly" / "poly_homogeneous". Throws std::invalid_argument.
Family parse_family(std::string_view name);

// Selects g(x, theta). Injective choices only: linear <x, theta>, circular
// ||x - r theta||, and odd-degree homogeneous polynomials.
struct DefiningFunctionSpec {
  Family family = Family::linear;
  int degree = 1;       // poly_homogeneous only; odd, >= 1
  double radius = 1.0;  // circular only; > 0
  std::size_t data_dim = 2;

  static DefiningFunctionSpec linear(std::size_t d) { return {Family::linear, 1, 1.0, d}; }
  static DefiningFunctionSpec circular(std::size_t d, double r = 1.0) { return {Family::circular, 1, r, d}; }
  static DefiningFunctionSpec polynomial(std::size_t d, int m) { return {Family::poly_homogeneous, m, 1.0, d}; }

  void validate() const;
  // Short label used in file names and CSV columns: linear, circular, poly3, ...
  std::string label() const;
};

// Dimension of the parameter sphere: d for linear/circular, C(d+m-1, m) for
// degree-m polynomials.
std::size_t dim_theta(const DefiningFunctionSpec& spec);

// Raised by gradients of the circular family at x = r theta.
class DegeneratePointError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// All exponent vectors alpha in N^d with |alpha| = m, graded lexicographic:
// for d = 2, m = 3 the rows are (3,0), (2,1), (1,2), (0,3).
class MultiIndexTable {
 public:
  MultiIndexTable(std::size_t dim, int degree);

  std::size_t size() const { return count_; }
  std::size_t dim() const { return dim_; }
  int degree() const { return degree_; }
  std::span<const int> operator[](std::size_t k) const {
    return {exponents_.data() + k * dim_, dim_};
  }

 private:
  std::size_t dim_;
  int degree_;
  std::size_t count_ = 0;
  std::vector<int> exponents_;  // count_ x dim_, row-major
};

// A point on the parameter sphere. Construction checks unit norm to 1e-12.
class ThetaParams {
 public:
  explicit ThetaParams(Vector unit);
  const Vector& vector() const { return theta_; }
  std::size_t dim() const { return static_cast<std::size_t>(theta_.size()); }

 private:
  Vector theta_;
};

// v / ||v||_2. Throws std::invalid_argument for the zero vector or a
// non-finite input.
ThetaParams project_to_domain(ConstVectorRef v);

// Evaluates g and its gradients. Theta is taken as a raw vector so that the
// homogeneity and finite-difference checks can leave the sphere; callers on
// the estimator paths always pass unit vectors.
class DefiningFunction {
 public:
  explicit DefiningFunction(DefiningFunctionSpec spec);

  const DefiningFunctionSpec& spec() const { return spec_; }
  std::size_t data_dim() const { return spec_.data_dim; }
  std::size_t theta_dim() const { return theta_dim_; }
  const MultiIndexTable* monomials() const { return table_ ? &*table_ : nullptr; }

  double eval(ConstVectorRef theta, ConstVectorRef x) const;
  Vector grad_x(ConstVectorRef theta, ConstVectorRef x) const;
  Vector grad_theta(ConstVectorRef theta, ConstVectorRef x) const;

  // g(x_i, theta) for every row of the cloud.
  void project(const PointCloud& cloud, ConstVectorRef theta, std::vector<double>& out) const;

 private:
  void check_dims(ConstVectorRef theta, ConstVectorRef x) const;
  // x^alpha for every alpha in the table.
  void monomial_values(ConstVectorRef x, Vector& out) const;

  DefiningFunctionSpec spec_;
  std::size_t theta_dim_;
  std::optional<MultiIndexTable> table_;
};

// Uniform slices on the parameter sphere of the given spec.
std::vector<ThetaParams> sample_slices(const DefiningFunctionSpec& spec, std::size_t count,
                                       std::uint64_t seed);

}  // namespace gsw
