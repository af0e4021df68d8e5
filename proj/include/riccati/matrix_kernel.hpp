#pragma once

#include <Eigen/Dense>

#include <array>
#include <complex>
#include <vector>

#include "riccati/error.hpp"
#include "riccati/tolerances.hpp"

namespace riccati {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using Index = Eigen::Index;
using Complex = std::complex<double>;

/// Checks ||M - M^T||_inf <= tol.sym and returns the exactly symmetric (M + M^T)/2.
Matrix symmetrize(const Matrix& m, const Tolerances& tol);

/// Unconditional (M + M^T)/2, for taming floating-point drift on values that
/// are symmetric in exact arithmetic.
Matrix force_symmetric(const Matrix& m);

/// Moore-Penrose pseudo-inverse with rank decided by sigma_i > tol.rank * sigma_max.
Matrix pseudo_inverse(const Matrix& m, const Tolerances& tol);

enum class Definiteness {
  positive_definite,
  positive_semidefinite,
  negative_definite,
  negative_semidefinite,
  indefinite,
  zero,
};

const char* to_string(Definiteness d);

/// Eigenvalue classification of a symmetric matrix with slack tol.psd * (1 + max|lambda|).
Definiteness definiteness_classify(const Matrix& m, const Tolerances& tol);

inline bool is_psd(Definiteness d) {
  return d == Definiteness::positive_definite || d == Definiteness::positive_semidefinite ||
         d == Definiteness::zero;
}
inline bool is_nsd(Definiteness d) {
  return d == Definiteness::negative_definite || d == Definiteness::negative_semidefinite ||
         d == Definiteness::zero;
}

enum class AlbertCondition {
  none,               // all three hold
  block_not_psd,      // P1 >= 0 fails
  corner_mismatch,    // (I - P1 P1^+) P12 = 0 fails
  complement_not_psd  // P2 - P12^T P1^+ P12 >= 0 fails
};

struct SchurPsdResult {
  bool psd = false;
  AlbertCondition failed = AlbertCondition::none;
};

/// Albert's block characterization of P >= 0 for P = [[P1, P12], [P12^T, P2]]
/// with P1 of size `split` x `split`.
SchurPsdResult schur_psd_test(const Matrix& p, Index split, const Tolerances& tol);

/// For a PSD matrix in 3x3 block form with zero (1,1) and (1,2) blocks, the
/// (1,3) corner block must vanish. Returns whether it does (to tolerance).
/// Throws `not_psd` when the input is not PSD.
bool corner_lemma_check(const Matrix& m, Index d1, Index d2, const Tolerances& tol);

/// Bitmask of spectral regions by eigenvalue real part.
enum SpectralPart : unsigned {
  spectral_minus = 1u,  // Re < -tol.spec
  spectral_zero = 2u,   // |Re| <= tol.spec
  spectral_plus = 4u,   // Re > tol.spec
};

/// Classify a real part into one of the three regions.
SpectralPart spectral_part_of(double re, const Tolerances& tol);

struct OrderedSchur {
  Matrix q;          // orthogonal
  Matrix t;          // quasi upper triangular (canonical Schur form)
  Index selected;    // leading block size holding the selected eigenvalues
};

/// Real Schur decomposition A = Q T Q^T with the eigenvalues matching the
/// `select_parts` bitmask moved to the leading `selected` x `selected` block.
/// Complex pairs never split (selection depends only on the real part).
OrderedSchur ordered_real_schur(const Matrix& a, unsigned select_parts, const Tolerances& tol);

/// Three-way ordered Schur: eigenvalues sorted ascending by the rank assigned
/// to their spectral part (index 0 = minus, 1 = zero, 2 = plus), stable within
/// equal ranks. Used for Hamiltonian half-spectrum selection.
struct RankedSchur {
  Matrix q;
  Matrix t;
  std::array<Index, 3> rank_counts{};  // columns per rank value 0, 1, 2
};
RankedSchur ordered_real_schur_ranked(const Matrix& a, const std::array<int, 3>& rank_by_part,
                                      const Tolerances& tol);

/// Eigenvalues of a matrix already in canonical real Schur form.
std::vector<Complex> schur_eigenvalues(const Matrix& t);

/// e^{A t} by scaling-and-squaring Pade approximation.
Matrix matrix_exponential(const Matrix& a, double t);

/// G(T) = \int_0^T e^{A^T s} M e^{A s} ds via the Van Loan augmented
/// exponential, with interval doubling for large T * ||A||.
Matrix quadratic_cost_integral(const Matrix& a_cl, const Matrix& m, double horizon);

}  // namespace riccati
