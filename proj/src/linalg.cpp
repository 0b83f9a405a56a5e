#include "cocyclelab/linalg.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <unsupported/Eigen/MatrixFunctions>

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>

namespace cocyclelab {

namespace {

void require_finite(const Matrix& m, const char* what) {
    if (!m.allFinite()) throw InvalidInput(std::string(what) + ": non-finite entries");
}

void require_square(const Matrix& m, const char* what) {
    if (m.rows() != m.cols()) throw InvalidInput(std::string(what) + ": matrix not square");
}

}  // namespace

Matrix standard_form(int half_dim) {
    if (half_dim < 1) throw InvalidInput("standard_form: half_dim must be >= 1");
    const int n = half_dim;
    Matrix j = Matrix::Zero(2 * n, 2 * n);
    j.topRightCorner(n, n) = Matrix::Identity(n, n);
    j.bottomLeftCorner(n, n) = -Matrix::Identity(n, n);
    return j;
}

double conorm(const Matrix& m) {
    require_square(m, "conorm");
    require_finite(m, "conorm");
    if (m.rows() == 0) return 1.0;
    Eigen::JacobiSVD<Matrix> svd(m);
    return svd.singularValues().minCoeff();
}

double spectral_norm(const Matrix& m) {
    require_finite(m, "spectral_norm");
    if (m.rows() == 0 || m.cols() == 0) return 0.0;
    Eigen::JacobiSVD<Matrix> svd(m);
    return svd.singularValues().maxCoeff();
}

double symplectic_residual(const Matrix& m) {
    require_square(m, "symplectic_residual");
    require_finite(m, "symplectic_residual");
    if (m.rows() % 2 != 0) throw InvalidInput("symplectic_residual: odd dimension");
    const Matrix j = standard_form(static_cast<int>(m.rows()) / 2);
    return (m.transpose() * j * m - j).norm();
}

std::vector<double> eigen_moduli(const Matrix& m) {
    require_square(m, "eigen_moduli");
    require_finite(m, "eigen_moduli");
    Eigen::EigenSolver<Matrix> es(m, /*computeEigenvectors=*/false);
    if (es.info() != Eigen::Success) throw NumericalFailure("eigen_moduli: solver did not converge");
    std::vector<double> moduli(static_cast<std::size_t>(m.rows()));
    for (Eigen::Index i = 0; i < m.rows(); ++i) moduli[static_cast<std::size_t>(i)] = std::abs(es.eigenvalues()[i]);
    std::sort(moduli.begin(), moduli.end(), std::greater<>());
    return moduli;
}

double spectral_radius(const Matrix& m) {
    auto moduli = eigen_moduli(m);
    return moduli.empty() ? 0.0 : moduli.front();
}

Matrix symplectic_orthogonal_adapt(const std::vector<Vector>& flag_vectors, int half_dim) {
    const int n = half_dim;
    const int dim = 2 * n;
    if (n < 1) throw InvalidInput("symplectic_orthogonal_adapt: half_dim must be >= 1");
    const int r = static_cast<int>(flag_vectors.size());
    if (r > n)
        throw FlagAlignmentError("flag has more than half_dim vectors; cannot be isotropic");

    // Real Gram-Schmidt along the flag; prefixes keep their spans.
    Matrix v(dim, r);
    for (int i = 0; i < r; ++i) {
        if (flag_vectors[static_cast<std::size_t>(i)].size() != dim)
            throw InvalidInput("symplectic_orthogonal_adapt: vector dimension mismatch");
        Vector w = flag_vectors[static_cast<std::size_t>(i)];
        for (int pass = 0; pass < 2; ++pass)
            for (int k = 0; k < i; ++k) w -= v.col(k).dot(w) * v.col(k);
        const double nw = w.norm();
        if (nw < 1e-10)
            throw FlagAlignmentError("flag vectors are numerically dependent");
        v.col(i) = w / nw;
    }

    // Isotropy: with J = [[0,I],[-I,0]] the complex lifts a + i b of an
    // orthonormal isotropic family are unitary columns.
    const Matrix j = standard_form(n);
    for (int a = 0; a < r; ++a)
        for (int b = a + 1; b < r; ++b) {
            const double pairing = v.col(a).dot(j * v.col(b));
            if (std::abs(pairing) > 1e-7)
                throw FlagAlignmentError("flag is not isotropic; symplectic pairing = " +
                                         std::to_string(pairing));
        }

    using CMatrix = Eigen::MatrixXcd;
    using CVector = Eigen::VectorXcd;
    CMatrix u(n, n);
    for (int i = 0; i < r; ++i)
        u.col(i) = v.col(i).head(n).cast<std::complex<double>>() +
                   std::complex<double>(0, 1) * v.col(i).tail(n).cast<std::complex<double>>();

    // Unitary completion, greedy over coordinate candidates for determinism.
    int filled = r;
    for (int cand = 0; cand < n && filled < n; ++cand) {
        CVector w = CVector::Zero(n);
        w[cand] = 1.0;
        for (int pass = 0; pass < 2; ++pass)
            for (int k = 0; k < filled; ++k) w -= u.col(k).dot(w) * u.col(k);
        const double nw = w.norm();
        if (nw > 0.5) u.col(filled++) = w / nw;
    }
    if (filled < n) {
        // Retry remaining candidates with a lower acceptance bar.
        for (int cand = 0; cand < n && filled < n; ++cand) {
            CVector w = CVector::Zero(n);
            w[cand] = 1.0;
            for (int pass = 0; pass < 2; ++pass)
                for (int k = 0; k < filled; ++k) w -= u.col(k).dot(w) * u.col(k);
            const double nw = w.norm();
            if (nw > 1e-8) u.col(filled++) = w / nw;
        }
    }
    if (filled < n) throw FlagAlignmentError("unitary completion failed");

    // Real form of U maps p_k to the k-th column; the aligner is its inverse.
    Matrix real_u(dim, dim);
    real_u.topLeftCorner(n, n) = u.real();
    real_u.topRightCorner(n, n) = -u.imag();
    real_u.bottomLeftCorner(n, n) = u.imag();
    real_u.bottomRightCorner(n, n) = u.real();
    Matrix c = real_u.transpose();

    if ((c.transpose() * c - Matrix::Identity(dim, dim)).norm() > tol::symplectic ||
        symplectic_residual(c) > tol::symplectic)
        throw FlagAlignmentError("aligner failed group residual checks");
    for (int i = 1; i <= r; ++i) {
        Matrix image = c * v.leftCols(i);
        Matrix target = Matrix::Zero(dim, i);
        target.topLeftCorner(i, i) = Matrix::Identity(i, i);
        if (subspace_angle(image, target) > tol::angle)
            throw FlagAlignmentError("aligned flag missed its coordinate span");
    }
    return c;
}

Matrix random_symplectic(int half_dim, double spread, std::uint64_t seed) {
    if (half_dim < 1) throw InvalidInput("random_symplectic: half_dim must be >= 1");
    if (spread < 0) throw InvalidInput("random_symplectic: spread must be >= 0");
    const int dim = 2 * half_dim;
    if (spread == 0.0) return Matrix::Identity(dim, dim);

    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    Matrix g(dim, dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) g(i, j) = gauss(rng);
    Matrix s = 0.5 * (g + g.transpose());
    const double scale = spectral_norm(s);
    if (scale > 0) s *= spread / scale;

    // exp of a Hamiltonian matrix J S lands in the symplectic group.
    Matrix h = standard_form(half_dim) * s;
    return h.exp();
}

double subspace_angle(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.cols() || a.rows() != b.rows())
        throw InvalidInput("subspace_angle: shape mismatch");
    if (a.cols() == 0) return 0.0;
    auto orth = [](const Matrix& m) {
        Eigen::HouseholderQR<Matrix> qr(m);
        Matrix q = qr.householderQ() * Matrix::Identity(m.rows(), m.cols());
        return q;
    };
    Matrix qa = orth(a), qb = orth(b);
    Eigen::JacobiSVD<Matrix> svd(qa.transpose() * qb);
    double c = std::clamp(svd.singularValues().minCoeff(), -1.0, 1.0);
    return std::acos(c);
}

Matrix orthonormal_range(const Matrix& m, double rank_tol) {
    Eigen::JacobiSVD<Matrix> svd(m, Eigen::ComputeThinU);
    const auto& sv = svd.singularValues();
    if (sv.size() == 0) return Matrix(m.rows(), 0);
    const double cutoff = sv.maxCoeff() * rank_tol;
    int rank = 0;
    while (rank < sv.size() && sv[rank] > cutoff) ++rank;
    return svd.matrixU().leftCols(rank);
}

}  // namespace cocyclelab
