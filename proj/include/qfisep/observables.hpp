#pragma once

#include <cstdint>
#include <vector>

#include "qfisep/observable_set.hpp"

namespace qfisep {

/// Generalized Gell-Mann matrices pi_1..pi_{d^2-1} with Tr[pi_mu pi_nu] =
/// 2 delta. Order: symmetric off-diagonal (j < k lexicographic),
/// antisymmetric off-diagonal (same order), diagonal by increasing rank.
std::vector<ComplexMatrix> gell_mann_matrices(int d);

/// (1/sqrt(d), pi_1/sqrt(2), ..., pi_{d^2-1}/sqrt(2)); kind LOO, s = d - 1.
/// Throws InvalidDimension for d < 2.
ObservableSet loo_basis(int d);

/// Built-in SIC-POVMs: the qubit tetrahedron (d = 2) and the Weyl-Heisenberg
/// orbit of (0, 1, -1)/sqrt(2) (d = 3). s = (d - 1)/(d (d + 1)).
/// Throws UnsupportedDimension for any other d.
ObservableSet sic_povm(int d);

/// Orbit {X^a Z^b |psi>} with X|j> = |j+1 mod d>, Z|j> = omega^j |j>,
/// ordered by mu = a d + b.
std::vector<ComplexVector> weyl_heisenberg_orbit(const ComplexVector& fiducial);

/// SIC-POVM from the Weyl-Heisenberg orbit of a user-supplied fiducial,
/// certified at tol::kSicCertify. Throws InvalidVector (length or norm) or
/// NotAFiducial (overlap condition violated).
ObservableSet sic_from_fiducial(int d, const ComplexVector& fiducial);

enum class SicSign { Minus, Plus };

/// G_mu = sqrt(d(d+1)) E_mu - (sqrt(d+1) -/+ 1)/sqrt(d^3) * 1. Throws NotSIC
/// unless the input is a certified SIC-POVM.
ObservableSet sic_to_loo(const ObservableSet& sic, SicSign sign = SicSign::Minus);

/// A'_mu = sum_nu O_{mu nu} A_nu. LOO stays LOO; SIC becomes GENERIC; the
/// bound is preserved. Throws SizeMismatch if O.size() != m.
ObservableSet rotate(const ObservableSet& obs, const OrthogonalRotation& o);

/// Haar-random orthogonal matrix from the sign-fixed QR of a standard normal
/// matrix; deterministic per seed.
OrthogonalRotation random_orthogonal(int m, std::uint64_t seed);

}  // namespace qfisep
