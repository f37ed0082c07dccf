#pragma once

// Quantum Fisher information for unitary families generated by an
// observable, using the convention F(rho, A) = Tr[rho L^2] / 4 so that F
// equals the variance on pure states.

#include "qfisep/density_matrix.hpp"
#include "qfisep/observable_set.hpp"

namespace qfisep {

/// X expressed in the eigenbasis of rho: <k|X|l>.
ComplexMatrix in_eigenbasis(const DensityMatrix& rho, const ComplexMatrix& x);

/// w_kl = (lambda_k - lambda_l)^2 / (2 (lambda_k + lambda_l)); zero on kernel
/// pairs (lambda_k + lambda_l <= tol::kKernel).
RealMatrix qfi_weights(const DensityMatrix& rho);

/// c_kl = 2 lambda_k lambda_l / (lambda_k + lambda_l); zero on kernel pairs.
RealMatrix harmonic_weights(const DensityMatrix& rho);

/// sum_{k,l} w_kl |<k|A|l>|^2, clamped at zero.
double qfi(const DensityMatrix& rho, const Observable& a);

/// Symmetric logarithmic derivative, solving i[rho, A] = {rho, L}/2 on the
/// support of rho; the off-support block is zero.
Observable sld(const DensityMatrix& rho, const Observable& a);

/// sum_mu qfi(rho, A_mu). Zero for an empty set.
double total_qfi(const DensityMatrix& rho, const ObservableSet& obs);

/// Tr[rho A^2] - Tr[rho A]^2, clamped at zero.
double variance(const DensityMatrix& rho, const Observable& a);

/// Cramer-Rao lower bound 1/F on (delta theta)^2; +inf when F = 0.
double precision_bound_single(const DensityMatrix& rho, const Observable& a);

/// 1/(m F_total) for m observables; +inf when the total vanishes.
/// Throws EmptyObservableSet for m = 0.
double precision_bound_set(const DensityMatrix& rho, const ObservableSet& obs);

}  // namespace qfisep
