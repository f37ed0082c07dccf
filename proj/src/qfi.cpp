#include "qfisep/qfi.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "qfisep/errors.hpp"

namespace qfisep {

namespace {

void require_same_dim(const DensityMatrix& rho, int dim) {
  if (rho.dim() != dim) {
    throw DimensionMismatch("state has dimension " + std::to_string(rho.dim()) +
                            ", observable " + std::to_string(dim));
  }
}

template <typename F>
RealMatrix pair_matrix(const DensityMatrix& rho, F&& f) {
  const auto& lambda = rho.eigenvalues();
  const auto n = lambda.size();
  RealMatrix out(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    for (Eigen::Index l = 0; l < n; ++l) {
      const double sum = lambda(k) + lambda(l);
      out(k, l) = sum <= tol::kKernel ? 0.0 : f(lambda(k), lambda(l), sum);
    }
  }
  return out;
}

}  // namespace

ComplexMatrix in_eigenbasis(const DensityMatrix& rho, const ComplexMatrix& x) {
  const auto& v = rho.spectrum().eigenvectors;
  return v.adjoint() * x * v;
}

RealMatrix qfi_weights(const DensityMatrix& rho) {
  return pair_matrix(rho, [](double a, double b, double sum) {
    return (a - b) * (a - b) / (2.0 * sum);
  });
}

RealMatrix harmonic_weights(const DensityMatrix& rho) {
  return pair_matrix(rho, [](double a, double b, double sum) {
    return 2.0 * a * b / sum;
  });
}

double qfi(const DensityMatrix& rho, const Observable& a) {
  require_same_dim(rho, a.dim());
  const ComplexMatrix elements = in_eigenbasis(rho, a.matrix());
  const double value = qfi_weights(rho).cwiseProduct(elements.cwiseAbs2()).sum();
  return std::max(value, 0.0);
}

Observable sld(const DensityMatrix& rho, const Observable& a) {
  require_same_dim(rho, a.dim());
  const ComplexMatrix elements = in_eigenbasis(rho, a.matrix());
  const RealMatrix ratio = pair_matrix(rho, [](double x, double y, double sum) {
    return (x - y) / sum;
  });
  const ComplexMatrix l_eig = Complex(0.0, 2.0) * ratio.cast<Complex>().cwiseProduct(elements);
  const auto& v = rho.spectrum().eigenvectors;
  ComplexMatrix l = v * l_eig * v.adjoint();
  // Remove rounding asymmetry before the Hermiticity check.
  return Observable(0.5 * (l + l.adjoint()));
}

double total_qfi(const DensityMatrix& rho, const ObservableSet& obs) {
  if (obs.empty()) return 0.0;
  require_same_dim(rho, obs.dim());
  const RealMatrix w = qfi_weights(rho);
  double total = 0.0;
  for (const auto& a : obs) {
    total += std::max(w.cwiseProduct(in_eigenbasis(rho, a.matrix()).cwiseAbs2()).sum(), 0.0);
  }
  return total;
}

double variance(const DensityMatrix& rho, const Observable& a) {
  require_same_dim(rho, a.dim());
  const double mean = rho.expectation(a.matrix()).real();
  const double second = rho.expectation(a.matrix() * a.matrix()).real();
  return std::max(second - mean * mean, 0.0);
}

double precision_bound_single(const DensityMatrix& rho, const Observable& a) {
  const double f = qfi(rho, a);
  return f > 0.0 ? 1.0 / f : std::numeric_limits<double>::infinity();
}

double precision_bound_set(const DensityMatrix& rho, const ObservableSet& obs) {
  if (obs.empty()) throw EmptyObservableSet("precision bound needs m >= 1");
  const double f = total_qfi(rho, obs);
  return f > 0.0 ? 1.0 / (static_cast<double>(obs.size()) * f)
                 : std::numeric_limits<double>::infinity();
}

}  // namespace qfisep
