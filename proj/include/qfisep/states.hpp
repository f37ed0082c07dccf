#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>

#include "qfisep/density_matrix.hpp"

namespace qfisep {

/// (1 - eta)/d^2 * 1 + eta |psi+><psi+|, |psi+> = sum_i |ii>/sqrt(d).
/// Throws ParameterOutOfRange unless 0 <= eta <= 1, InvalidDimension for d < 2.
DensityMatrix isotropic(int d, double eta);

/// (1 - eta)/d^2 * 1 + eta * P_anti / (d(d-1)/2), P_anti the projector onto
/// the antisymmetric subspace. For d = 3 the second term is
/// (1/6) sum_{i != j} |psi_ij^-><psi_ij^-|.
DensityMatrix werner(int d, double eta);

/// G G^dagger / Tr[G G^dagger] with G a d x rank standard complex normal
/// matrix. Throws InvalidRank unless 1 <= rank <= d.
DensityMatrix random_density(int d, int rank, std::uint64_t seed);

/// Convex mixture of `terms` random product states with Dirichlet(1, ..., 1)
/// weights.
DensityMatrix random_separable(int dim_a, int dim_b, int terms, std::uint64_t seed);

/// Random Hermitian matrix with independent standard normal entries
/// (GUE-like scaling); used as a generic observable in tests.
ComplexMatrix random_hermitian(int d, std::uint64_t seed);

/// Haar-random unitary (sign-fixed QR of a complex Ginibre matrix).
ComplexMatrix random_unitary(int d, std::uint64_t seed);

enum class FamilyKind { Isotropic, Werner, Custom };

std::string_view to_string(FamilyKind kind);

/// One-parameter state family eta -> rho(eta) on [0, 1]. Custom families
/// supply their own generator.
struct StateFamily {
  FamilyKind kind = FamilyKind::Isotropic;
  int local_dim = 3;
  std::function<DensityMatrix(double)> generator = {};

  static StateFamily custom(int local_dim, std::function<DensityMatrix(double)> generator);

  DensityMatrix at(double eta) const;
};

}  // namespace qfisep
