#include "qfisep/states.hpp"

#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "qfisep/errors.hpp"

namespace qfisep {

namespace {

void check_family_args(int d, double eta) {
  if (d < 2) throw InvalidDimension("local dimension must be >= 2, got " + std::to_string(d));
  if (!(eta >= 0.0 && eta <= 1.0)) {
    throw ParameterOutOfRange("eta = " + std::to_string(eta) + " outside [0, 1]");
  }
}

ComplexMatrix ginibre(int rows, int cols, std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  ComplexMatrix g(rows, cols);
  for (Eigen::Index i = 0; i < g.rows(); ++i) {
    for (Eigen::Index j = 0; j < g.cols(); ++j) {
      const double re = normal(rng);
      const double im = normal(rng);
      g(i, j) = Complex(re, im);
    }
  }
  return g;
}

ComplexMatrix normalized_gram(const ComplexMatrix& g) {
  ComplexMatrix rho = g * g.adjoint();
  rho /= rho.trace().real();
  return 0.5 * (rho + rho.adjoint());
}

}  // namespace

DensityMatrix isotropic(int d, double eta) {
  check_family_args(d, eta);
  const int n = d * d;
  ComplexVector psi = ComplexVector::Zero(n);
  for (int i = 0; i < d; ++i) psi(i * d + i) = 1.0;
  psi /= std::sqrt(static_cast<double>(d));
  ComplexMatrix rho = (1.0 - eta) / n * ComplexMatrix::Identity(n, n);
  rho += eta * psi * psi.adjoint();
  return DensityMatrix(std::move(rho));
}

DensityMatrix werner(int d, double eta) {
  check_family_args(d, eta);
  const int n = d * d;
  // P_anti = (1 - SWAP)/2.
  ComplexMatrix swap = ComplexMatrix::Zero(n, n);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) swap(j * d + i, i * d + j) = 1.0;
  }
  const ComplexMatrix anti = 0.5 * (ComplexMatrix::Identity(n, n) - swap);
  const double anti_dim = d * (d - 1) / 2.0;
  ComplexMatrix rho = (1.0 - eta) / n * ComplexMatrix::Identity(n, n);
  rho += (eta / anti_dim) * anti;
  return DensityMatrix(std::move(rho));
}

DensityMatrix random_density(int d, int rank, std::uint64_t seed) {
  if (d < 1) throw InvalidDimension("dimension must be >= 1");
  if (rank < 1 || rank > d) {
    throw InvalidRank("rank " + std::to_string(rank) + " not in [1, " + std::to_string(d) + "]");
  }
  std::mt19937_64 rng(seed);
  return DensityMatrix(normalized_gram(ginibre(d, rank, rng)));
}

DensityMatrix random_separable(int dim_a, int dim_b, int terms, std::uint64_t seed) {
  if (terms < 1) throw InvalidRank("separable mixture needs at least one term");
  std::mt19937_64 rng(seed);
  std::exponential_distribution<double> exponential(1.0);
  std::uniform_int_distribution<int> rank_a(1, dim_a);
  std::uniform_int_distribution<int> rank_b(1, dim_b);

  std::vector<double> weights(static_cast<std::size_t>(terms));
  double total = 0.0;
  for (auto& w : weights) total += (w = exponential(rng));

  const int n = dim_a * dim_b;
  ComplexMatrix rho = ComplexMatrix::Zero(n, n);
  for (const double w : weights) {
    const ComplexMatrix a = normalized_gram(ginibre(dim_a, rank_a(rng), rng));
    const ComplexMatrix b = normalized_gram(ginibre(dim_b, rank_b(rng), rng));
    rho += (w / total) * kron(a, b);
  }
  return DensityMatrix(0.5 * (rho + rho.adjoint()));
}

ComplexMatrix random_hermitian(int d, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const ComplexMatrix g = ginibre(d, d, rng);
  return 0.5 * (g + g.adjoint());
}

ComplexMatrix random_unitary(int d, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const ComplexMatrix g = ginibre(d, d, rng);
  Eigen::HouseholderQR<ComplexMatrix> qr(g);
  ComplexMatrix q = qr.householderQ() * ComplexMatrix::Identity(d, d);
  for (int j = 0; j < d; ++j) {
    const Complex r = qr.matrixQR()(j, j);
    if (std::abs(r) > 0.0) q.col(j) *= r / std::abs(r);
  }
  return q;
}

std::string_view to_string(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::Isotropic: return "isotropic";
    case FamilyKind::Werner: return "werner";
    case FamilyKind::Custom: return "custom";
  }
  return "?";
}

StateFamily StateFamily::custom(int local_dim, std::function<DensityMatrix(double)> generator) {
  return {FamilyKind::Custom, local_dim, std::move(generator)};
}

DensityMatrix StateFamily::at(double eta) const {
  switch (kind) {
    case FamilyKind::Isotropic: return isotropic(local_dim, eta);
    case FamilyKind::Werner: return werner(local_dim, eta);
    case FamilyKind::Custom: break;
  }
  if (!generator) throw InvalidState("custom family without a generator");
  return generator(eta);
}

}  // namespace qfisep
