#pragma once

// Bipartite QFI separability criteria. For paired local sets A, B the total
// QFI of A_mu (x) 1 + 1 (x) B_mu splits into F_A + F_B + 2 Tr[xi]. Mixing
// each side by a real orthogonal matrix leaves F_A, F_B and the local bounds
// unchanged and maps xi to O^A xi (O^B)^T, so the orbit maximum of the total
// is F_A + F_B + 2 ||xi||_tr.

#include <optional>
#include <string>
#include <vector>

#include "qfisep/density_matrix.hpp"
#include "qfisep/observable_set.hpp"
#include "qfisep/states.hpp"

namespace qfisep {

struct XiDecomposition {
  double f_a = 0.0;
  double f_b = 0.0;
  RealMatrix xi;

  double total() const { return f_a + f_b + 2.0 * xi.trace(); }
};

struct OptimizedTotal {
  double value = 0.0;
  double xi_trace_norm = 0.0;
  OrthogonalRotation rotation_a;
  OrthogonalRotation rotation_b;
};

struct CriterionReport {
  std::optional<double> eta;
  std::string state_id;
  double f_a = 0.0;
  double f_b = 0.0;
  double unopt_total = 0.0;
  double opt_total = 0.0;
  double bound = 0.0;
  double xi_trace_norm = 0.0;
  bool unopt_violated = false;
  bool opt_violated = false;
  /// opt_violated evaluated in the equivalent form
  /// ||xi||_tr > (bound - F_A - F_B)/2.
  bool opt_violated_trace_norm_form = false;
  OrthogonalRotation optimal_rotation_a = OrthogonalRotation::identity(1);
  OrthogonalRotation optimal_rotation_b = OrthogonalRotation::identity(1);
};

enum class CriterionMode { Unoptimized, Optimized };

/// F_A, F_B and xi computed in the eigenbasis |k> of the full bipartite
/// state, with c_kl = 2 lambda_k lambda_l / (lambda_k + lambda_l):
///   F_A      = sum_mu <A_mu^2> - sum_{k,l} c_kl |<k|A_mu|l>|^2
///   xi_mu,nu = <A_mu B_nu> - sum_{k,l} c_kl Re[<k|A_mu|l><l|B_nu|k>]
/// (A_mu acting as A_mu (x) 1, B_nu as 1 (x) B_nu). Evaluated in the
/// equivalent form with the QFI weights w_kl in place of the difference.
/// Throws DimensionMismatch (rho not dA dB) or SizeMismatch (m_A != m_B).
XiDecomposition xi_decomposition(const DensityMatrix& rho, const ObservableSet& obs_a,
                                 const ObservableSet& obs_b);

/// sum_mu qfi(rho, A_mu (x) 1 + 1 (x) B_mu), evaluated directly on the joint
/// observables without going through xi.
double unoptimized_total(const DensityMatrix& rho, const ObservableSet& obs_a,
                         const ObservableSet& obs_b);

/// Orbit maximum F_A + F_B + 2 ||xi||_tr and the maximizing rotations
/// O^A = U^T, O^B = V^T for xi = U S V^T.
OptimizedTotal optimized_total(const DensityMatrix& rho, const ObservableSet& obs_a,
                               const ObservableSet& obs_b);

/// s(A) + s(B). Throws UnknownBound if either set lacks a bound.
double separability_bound(const ObservableSet& obs_a, const ObservableSet& obs_b);

CriterionReport evaluate(const DensityMatrix& rho, const ObservableSet& obs_a,
                         const ObservableSet& obs_b);

/// Reports for every point of `etas`, in grid order. Points are distributed
/// over `jobs` worker threads.
std::vector<CriterionReport> sweep(const StateFamily& family, const ObservableSet& obs_a,
                                   const ObservableSet& obs_b, const std::vector<double>& etas,
                                   int jobs = 1);

struct ThresholdOptions {
  double start = 0.0;
  double stop = 1.0;
  int grid_points = 101;
  double resolution = 1e-5;
  int jobs = 1;
};

/// Smallest eta at which the chosen criterion is violated: coarse scan, then
/// bisection on the first violated grid cell. std::nullopt when nothing on
/// the grid is violated. Throws NonMonotoneViolation if the grid shows
/// violated -> unviolated.
std::optional<double> threshold(const StateFamily& family, const ObservableSet& obs_a,
                                const ObservableSet& obs_b, CriterionMode mode,
                                const ThresholdOptions& options = {});

/// Evenly spaced grid of `count` points from start to stop inclusive.
std::vector<double> linear_grid(double start, double stop, int count);

}  // namespace qfisep
