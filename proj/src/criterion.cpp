#include "qfisep/criterion.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <string>
#include <thread>

#include "qfisep/errors.hpp"
#include "qfisep/qfi.hpp"

namespace qfisep {

namespace {

void check_shapes(const DensityMatrix& rho, const ObservableSet& obs_a,
                  const ObservableSet& obs_b) {
  if (rho.dim() != obs_a.dim() * obs_b.dim()) {
    throw DimensionMismatch("state dimension " + std::to_string(rho.dim()) + " != " +
                            std::to_string(obs_a.dim()) + " x " + std::to_string(obs_b.dim()));
  }
  if (obs_a.size() != obs_b.size()) {
    throw SizeMismatch("paired sets need equal size, got " + std::to_string(obs_a.size()) +
                       " and " + std::to_string(obs_b.size()));
  }
}

std::vector<ComplexMatrix> embedded_in_eigenbasis(const DensityMatrix& rho,
                                                  const ObservableSet& obs, bool left,
                                                  int other_dim) {
  const ComplexMatrix id = ComplexMatrix::Identity(other_dim, other_dim);
  std::vector<ComplexMatrix> out;
  out.reserve(obs.size());
  for (const auto& o : obs) {
    out.push_back(in_eigenbasis(rho, left ? kron(o.matrix(), id) : kron(id, o.matrix())));
  }
  return out;
}

// sum_mu sum_{k,l} w_kl |<k|X_mu|l>|^2.
double local_total(const RealMatrix& w, const std::vector<ComplexMatrix>& ops) {
  double total = 0.0;
  for (const auto& x : ops) total += w.cwiseProduct(x.cwiseAbs2()).sum();
  return std::max(total, 0.0);
}

bool violated(const DensityMatrix& rho, const ObservableSet& obs_a, const ObservableSet& obs_b,
              CriterionMode mode, double bound) {
  const double value = mode == CriterionMode::Unoptimized
                           ? unoptimized_total(rho, obs_a, obs_b)
                           : optimized_total(rho, obs_a, obs_b).value;
  return value > bound + tol::kViolation;
}

// Runs body(i) for i in [0, count) on up to `jobs` threads; rethrows the
// first exception.
template <typename Body>
void parallel_for(std::size_t count, int jobs, Body&& body) {
  const auto workers = static_cast<std::size_t>(std::clamp<long>(jobs, 1, static_cast<long>(std::max<std::size_t>(count, 1))));
  if (workers == 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> threads;
  threads.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    threads.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) {
        try {
          body(i);
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!error) error = std::current_exception();
        }
      }
    });
  }
  for (auto& t : threads) t.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace

XiDecomposition xi_decomposition(const DensityMatrix& rho, const ObservableSet& obs_a,
                                 const ObservableSet& obs_b) {
  check_shapes(rho, obs_a, obs_b);
  // <X Y> = sum_{k,l} (lambda_k + lambda_l)/2 Re[X_kl Y_lk] for commuting
  // Hermitian X, Y, so <X Y> minus the harmonic-mean term collapses onto the
  // QFI weights w_kl. This avoids cancelling two O(1) terms.
  const RealMatrix w = qfi_weights(rho);
  const auto a = embedded_in_eigenbasis(rho, obs_a, true, obs_b.dim());
  const auto b = embedded_in_eigenbasis(rho, obs_b, false, obs_a.dim());

  XiDecomposition out;
  out.f_a = local_total(w, a);
  out.f_b = local_total(w, b);

  const auto m = static_cast<Eigen::Index>(a.size());
  out.xi.resize(m, m);
  for (Eigen::Index mu = 0; mu < m; ++mu) {
    const ComplexMatrix wa = w.cast<Complex>().cwiseProduct(a[mu]);
    for (Eigen::Index nu = 0; nu < m; ++nu) {
      out.xi(mu, nu) = wa.cwiseProduct(b[nu].transpose()).sum().real();
    }
  }
  return out;
}

double unoptimized_total(const DensityMatrix& rho, const ObservableSet& obs_a,
                         const ObservableSet& obs_b) {
  check_shapes(rho, obs_a, obs_b);
  const ComplexMatrix id_a = ComplexMatrix::Identity(obs_a.dim(), obs_a.dim());
  const ComplexMatrix id_b = ComplexMatrix::Identity(obs_b.dim(), obs_b.dim());
  double total = 0.0;
  for (std::size_t mu = 0; mu < obs_a.size(); ++mu) {
    const Observable joint(kron(obs_a[mu].matrix(), id_b) + kron(id_a, obs_b[mu].matrix()));
    total += qfi(rho, joint);
  }
  return total;
}

OptimizedTotal optimized_total(const DensityMatrix& rho, const ObservableSet& obs_a,
                               const ObservableSet& obs_b) {
  const auto decomposition = xi_decomposition(rho, obs_a, obs_b);
  const auto svd = svd_factors(decomposition.xi);
  const double norm = svd.sigma.sum();
  return {decomposition.f_a + decomposition.f_b + 2.0 * norm, norm,
          OrthogonalRotation(svd.u.transpose()), OrthogonalRotation(svd.v.transpose())};
}

double separability_bound(const ObservableSet& obs_a, const ObservableSet& obs_b) {
  if (!obs_a.bound() || !obs_b.bound()) {
    throw UnknownBound("separability bound needs s(A) and s(B); GENERIC sets carry none");
  }
  return *obs_a.bound() + *obs_b.bound();
}

CriterionReport evaluate(const DensityMatrix& rho, const ObservableSet& obs_a,
                         const ObservableSet& obs_b) {
  const double bound = separability_bound(obs_a, obs_b);
  const auto decomposition = xi_decomposition(rho, obs_a, obs_b);
  const auto svd = svd_factors(decomposition.xi);

  CriterionReport report;
  report.f_a = decomposition.f_a;
  report.f_b = decomposition.f_b;
  report.unopt_total = unoptimized_total(rho, obs_a, obs_b);
  report.xi_trace_norm = svd.sigma.sum();
  report.opt_total = report.f_a + report.f_b + 2.0 * report.xi_trace_norm;
  report.bound = bound;
  report.unopt_violated = report.unopt_total > bound + tol::kViolation;
  report.opt_violated = report.opt_total > bound + tol::kViolation;
  report.opt_violated_trace_norm_form =
      report.xi_trace_norm > (bound - report.f_a - report.f_b) / 2.0 + tol::kViolation / 2.0;
  report.optimal_rotation_a = OrthogonalRotation(svd.u.transpose());
  report.optimal_rotation_b = OrthogonalRotation(svd.v.transpose());
  return report;
}

std::vector<double> linear_grid(double start, double stop, int count) {
  if (count < 2) throw ParameterOutOfRange("grid needs at least two points");
  std::vector<double> out(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    out[static_cast<std::size_t>(i)] =
        i == count - 1 ? stop : start + (stop - start) * i / (count - 1.0);
  }
  return out;
}

std::vector<CriterionReport> sweep(const StateFamily& family, const ObservableSet& obs_a,
                                   const ObservableSet& obs_b, const std::vector<double>& etas,
                                   int jobs) {
  std::vector<CriterionReport> out(etas.size());
  parallel_for(etas.size(), jobs, [&](std::size_t i) {
    auto report = evaluate(family.at(etas[i]), obs_a, obs_b);
    report.eta = etas[i];
    report.state_id = std::string(to_string(family.kind));
    out[i] = std::move(report);
  });
  return out;
}

std::optional<double> threshold(const StateFamily& family, const ObservableSet& obs_a,
                                const ObservableSet& obs_b, CriterionMode mode,
                                const ThresholdOptions& options) {
  const double bound = separability_bound(obs_a, obs_b);
  const auto grid = linear_grid(options.start, options.stop, options.grid_points);
  std::vector<char> flags(grid.size(), 0);
  parallel_for(grid.size(), options.jobs, [&](std::size_t i) {
    flags[i] = violated(family.at(grid[i]), obs_a, obs_b, mode, bound) ? 1 : 0;
  });

  const auto first = std::find(flags.begin(), flags.end(), 1);
  if (first == flags.end()) return std::nullopt;
  const auto first_index = static_cast<std::size_t>(first - flags.begin());
  for (std::size_t i = first_index + 1; i < flags.size(); ++i) {
    if (!flags[i]) throw NonMonotoneViolation(grid[i - 1], grid[i]);
  }
  if (first_index == 0) return grid.front();

  double lo = grid[first_index - 1];
  double hi = grid[first_index];
  while (hi - lo > options.resolution) {
    const double mid = 0.5 * (lo + hi);
    (violated(family.at(mid), obs_a, obs_b, mode, bound) ? hi : lo) = mid;
  }
  return hi;
}

}  // namespace qfisep
