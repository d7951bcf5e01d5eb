#include "gsw/defining_function.hpp"

#include <cmath>
#include <string>

#include "gsw/datasets.hpp"

namespace gsw {

std::string_view to_string(Family family) {
  switch (family) {
    case Family::linear: return "linear";
    case Family::circular: return "circular";
    case Family::poly_homogeneous: return "poly";
  }
  return "unknown";
}

Family parse_family(std::string_view name) {
  if (name == "linear") return Family::linear;
  if (name == "circular") return Family::circular;
  if (name == "poly" || name == "poly_homogeneous" || name == "polynomial") return Family::poly_homogeneous;
  throw std::invalid_argument("unknown defining function '" + std::string(name) + "'");
}

void DefiningFunctionSpec::validate() const {
  if (data_dim < 1) throw std::invalid_argument("data dimension must be >= 1");
  if (family == Family::poly_homogeneous && (degree < 1 || degree % 2 == 0)) {
    throw std::invalid_argument("polynomial degree must be odd and >= 1, got " + std::to_string(degree));
  }
  if (family == Family::circular && !(radius > 0.0 && std::isfinite(radius))) {
    throw std::invalid_argument("circular radius must be positive");
  }
}

std::string DefiningFunctionSpec::label() const {
  switch (family) {
    case Family::linear: return "linear";
    case Family::circular: return "circular";
    case Family::poly_homogeneous: return "poly" + std::to_string(degree);
  }
  return "unknown";
}

std::size_t dim_theta(const DefiningFunctionSpec& spec) {
  spec.validate();
  if (spec.family != Family::poly_homogeneous) return spec.data_dim;
  // C(d + m - 1, m), accumulated so every intermediate is an exact integer.
  const std::size_t m = static_cast<std::size_t>(spec.degree);
  std::size_t c = 1;
  for (std::size_t k = 1; k <= m; ++k) c = c * (spec.data_dim - 1 + k) / k;
  return c;
}

MultiIndexTable::MultiIndexTable(std::size_t dim, int degree) : dim_(dim), degree_(degree) {
  if (dim < 1 || degree < 0) throw std::invalid_argument("invalid multi-index table shape");
  std::vector<int> alpha(dim, 0);
  // Depth-first with the leading exponent descending gives graded-lex order.
  auto fill = [&](auto&& self, std::size_t pos, int remaining) -> void {
    if (pos + 1 == dim) {
      alpha[pos] = remaining;
      exponents_.insert(exponents_.end(), alpha.begin(), alpha.end());
      ++count_;
      return;
    }
    for (int a = remaining; a >= 0; --a) {
      alpha[pos] = a;
      self(self, pos + 1, remaining - a);
    }
  };
  fill(fill, 0, degree);
}

ThetaParams::ThetaParams(Vector unit) : theta_(std::move(unit)) {
  if (theta_.size() < 1 || !theta_.allFinite() || std::abs(theta_.norm() - 1.0) > 1e-12) {
    throw std::invalid_argument("theta must be a finite unit vector");
  }
}

ThetaParams project_to_domain(ConstVectorRef v) {
  const double norm = v.norm();
  if (!(norm > 0.0) || !std::isfinite(norm)) {
    throw std::invalid_argument("cannot project a zero or non-finite vector onto the sphere");
  }
  return ThetaParams(v / norm);
}

DefiningFunction::DefiningFunction(DefiningFunctionSpec spec)
    : spec_(spec), theta_dim_(dim_theta(spec)) {
  if (spec_.family == Family::poly_homogeneous) table_.emplace(spec_.data_dim, spec_.degree);
}

void DefiningFunction::check_dims(ConstVectorRef theta, ConstVectorRef x) const {
  if (static_cast<std::size_t>(x.size()) != spec_.data_dim) {
    throw std::invalid_argument("x has dimension " + std::to_string(x.size()) + ", expected " +
                                std::to_string(spec_.data_dim));
  }
  if (static_cast<std::size_t>(theta.size()) != theta_dim_) {
    throw std::invalid_argument("theta has dimension " + std::to_string(theta.size()) +
                                ", expected " + std::to_string(theta_dim_));
  }
}

void DefiningFunction::monomial_values(ConstVectorRef x, Vector& out) const {
  const auto& table = *table_;
  const int m = table.degree();
  const auto d = table.dim();
  // powers(j, k) = x_j^k
  Eigen::MatrixXd powers(static_cast<Eigen::Index>(d), m + 1);
  for (std::size_t j = 0; j < d; ++j) {
    powers(j, 0) = 1.0;
    for (int k = 1; k <= m; ++k) powers(j, k) = powers(j, k - 1) * x(j);
  }
  out.resize(static_cast<Eigen::Index>(table.size()));
  for (std::size_t a = 0; a < table.size(); ++a) {
    const auto alpha = table[a];
    double v = 1.0;
    for (std::size_t j = 0; j < d; ++j) v *= powers(j, alpha[j]);
    out(a) = v;
  }
}

double DefiningFunction::eval(ConstVectorRef theta, ConstVectorRef x) const {
  check_dims(theta, x);
  switch (spec_.family) {
    case Family::linear: return x.dot(theta);
    case Family::circular: return (x - spec_.radius * theta).norm();
    case Family::poly_homogeneous: {
      Vector mono;
      monomial_values(x, mono);
      return mono.dot(theta);
    }
  }
  return 0.0;
}

Vector DefiningFunction::grad_x(ConstVectorRef theta, ConstVectorRef x) const {
  check_dims(theta, x);
  switch (spec_.family) {
    case Family::linear: return theta;
    case Family::circular: {
      Vector diff = x - spec_.radius * theta;
      const double norm = diff.norm();
      if (norm == 0.0) throw DegeneratePointError("circular defining function is not differentiable at x = r*theta");
      return diff / norm;
    }
    case Family::poly_homogeneous: {
      const auto& table = *table_;
      const auto d = table.dim();
      const int m = table.degree();
      Eigen::MatrixXd powers(static_cast<Eigen::Index>(d), m + 1);
      for (std::size_t j = 0; j < d; ++j) {
        powers(j, 0) = 1.0;
        for (int k = 1; k <= m; ++k) powers(j, k) = powers(j, k - 1) * x(j);
      }
      Vector g = Vector::Zero(static_cast<Eigen::Index>(d));
      for (std::size_t a = 0; a < table.size(); ++a) {
        const auto alpha = table[a];
        for (std::size_t j = 0; j < d; ++j) {
          if (alpha[j] == 0) continue;
          double v = alpha[j] * powers(j, alpha[j] - 1);
          for (std::size_t i = 0; i < d; ++i) {
            if (i != j) v *= powers(i, alpha[i]);
          }
          g(j) += theta(a) * v;
        }
      }
      return g;
    }
  }
  return {};
}

Vector DefiningFunction::grad_theta(ConstVectorRef theta, ConstVectorRef x) const {
  check_dims(theta, x);
  switch (spec_.family) {
    case Family::linear: return x;
    case Family::circular: {
      Vector diff = x - spec_.radius * theta;
      const double norm = diff.norm();
      if (norm == 0.0) throw DegeneratePointError("circular defining function is not differentiable at x = r*theta");
      return -spec_.radius * diff / norm;
    }
    case Family::poly_homogeneous: {
      Vector mono;
      monomial_values(x, mono);
      return mono;
    }
  }
  return {};
}

void DefiningFunction::project(const PointCloud& cloud, ConstVectorRef theta,
                               std::vector<double>& out) const {
  out.resize(cloud.size());
  if (cloud.dim() != spec_.data_dim) {
    throw std::invalid_argument("cloud dimension does not match the defining function");
  }
  if (spec_.family == Family::linear) {
    check_dims(theta, cloud.point(0));
    Eigen::Map<Vector> values(out.data(), static_cast<Eigen::Index>(out.size()));
    values.noalias() = cloud.matrix() * theta;
    return;
  }
  for (std::size_t i = 0; i < cloud.size(); ++i) out[i] = eval(theta, cloud.point(i));
}

std::vector<ThetaParams> sample_slices(const DefiningFunctionSpec& spec, std::size_t count,
                                       std::uint64_t seed) {
  std::vector<ThetaParams> slices;
  slices.reserve(count);
  for (auto& v : sample_unit_sphere(dim_theta(spec), count, seed)) {
    // Re-normalize so the 1e-12 unit-norm invariant holds after rounding.
    slices.push_back(project_to_domain(v));
  }
  return slices;
}

}  // namespace gsw
