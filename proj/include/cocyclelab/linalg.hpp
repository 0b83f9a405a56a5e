#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

#include "cocyclelab/errors.hpp"

namespace cocyclelab {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

/// Module tolerances. Two orders above double accumulation error at
/// dim <= 20 and horizons up to ~1e4 products.
namespace tol {
inline constexpr double symplectic = 1e-9;   // group membership residual
inline constexpr double eig = 1e-6;          // eigenvalue modulus pairing (relative)
inline constexpr double angle = 1e-8;        // subspace alignment
inline constexpr double invertibility = 1e-12;  // smallest singular value
inline constexpr double rank = 1e-9;         // relative rank cutoff in kernels/ranges
inline constexpr double gap = 1e-3;          // default exponent clustering gap
inline constexpr double overflow_log = 700.0;   // |log| beyond which doubles overflow
}  // namespace tol

struct SplittingSpec {
    int du = 0;
    int dc = 0;
    int ds = 0;

    int dim() const { return du + dc + ds; }
    /// All three bundles nonzero, as the partially hyperbolic predicates need.
    bool full() const { return du > 0 && dc > 0 && ds > 0; }
};

/// Standard symplectic form on R^{2n}: J = [[0, I], [-I, 0]] in the
/// (p_1..p_n, q_1..q_n) coordinate order.
Matrix standard_form(int half_dim);

/// Smallest singular value; equals 1/||M^{-1}|| for invertible M.
double conorm(const Matrix& m);

/// Largest singular value (operator 2-norm).
double spectral_norm(const Matrix& m);

/// Frobenius distance of M^T J M from J. Zero iff M is symplectic.
double symplectic_residual(const Matrix& m);

/// Eigenvalue moduli with algebraic multiplicity, sorted descending.
std::vector<double> eigen_moduli(const Matrix& m);

/// Spectral radius (largest eigenvalue modulus).
double spectral_radius(const Matrix& m);

/// Builds a symplectic orthogonal C whose action sends the span of the
/// first k input vectors onto span(p_1..p_k) for every prefix k. The
/// input vectors must be independent and span an isotropic subspace,
/// hence at most half_dim of them.
Matrix symplectic_orthogonal_adapt(const std::vector<Vector>& flag_vectors, int half_dim);

/// Deterministic random symplectic matrix: exp(J S) with S symmetric,
/// scaled so that ||M|| <= e^spread heuristically. spread == 0 gives Id.
Matrix random_symplectic(int half_dim, double spread, std::uint64_t seed);

/// Largest principal angle between the column spans of a and b.
double subspace_angle(const Matrix& a, const Matrix& b);

/// Orthonormal basis of the column span, rank decided at the relative
/// cutoff `rank_tol`.
Matrix orthonormal_range(const Matrix& m, double rank_tol = tol::rank);

}  // namespace cocyclelab
