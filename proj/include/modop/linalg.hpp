#pragma once

#include <Eigen/Dense>
#include <complex>
#include <limits>
#include <vector>

#include "errors.hpp"

namespace modop {

using Complex = std::complex<double>;

// Dense complex blocks, row-major. Blocks are small (<= 16 recommended), so
// everything below goes through full decompositions.
using Mat = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

/// Relative singular-value cutoff shared by all rank decisions.
inline constexpr double kRankCutoff = 1e-10;

inline Mat zeros(Eigen::Index r, Eigen::Index c) { return Mat::Zero(r, c); }
inline Mat eye(Eigen::Index n) { return Mat::Identity(n, n); }

inline Mat hermitize(const Mat& m) { return 0.5 * (m + m.adjoint()); }

/// Largest singular value; 0 for empty matrices.
inline double spectral_norm(const Mat& m) {
    if (m.rows() == 0 || m.cols() == 0) return 0.0;
    Eigen::JacobiSVD<Mat> svd(m);
    return svd.singularValues()(0);
}

inline std::vector<double> singular_values(const Mat& m) {
    if (m.rows() == 0 || m.cols() == 0) return {};
    Eigen::JacobiSVD<Mat> svd(m);
    const auto& s = svd.singularValues();
    return std::vector<double>(s.data(), s.data() + s.size());
}

/// Smallest singular value above the relative rank cutoff; +inf when the
/// matrix is (numerically) zero or empty.
inline double smallest_nonzero_sv(const Mat& m, double rel_cutoff = kRankCutoff) {
    auto sv = singular_values(m);
    if (sv.empty()) return std::numeric_limits<double>::infinity();
    const double cut = rel_cutoff * sv.front();
    double out = std::numeric_limits<double>::infinity();
    for (double s : sv)
        if (s > cut && s > 0.0) out = std::min(out, s);
    return out;
}

inline int numerical_rank(const Mat& m, double rel_cutoff = kRankCutoff) {
    auto sv = singular_values(m);
    if (sv.empty()) return 0;
    const double cut = rel_cutoff * sv.front();
    int r = 0;
    for (double s : sv)
        if (s > cut && s > 0.0) ++r;
    return r;
}

/// Orthonormal basis of the row space of `rows`, returned as basis rows
/// (r x m, Gram = identity). Rank-deficient inputs are reduced via the
/// shared singular-value cutoff.
inline Mat row_space_basis(const Mat& rows, double rel_cutoff = kRankCutoff) {
    const Eigen::Index m = rows.cols();
    if (rows.rows() == 0 || m == 0) return zeros(0, m);
    Eigen::JacobiSVD<Mat> svd(rows, Eigen::ComputeThinV);
    const auto& s = svd.singularValues();
    const double cut = rel_cutoff * (s.size() ? s(0) : 0.0);
    int r = 0;
    for (Eigen::Index i = 0; i < s.size(); ++i)
        if (s(i) > cut && s(i) > 0.0) ++r;
    // rows of V^* spanning the row space
    return Mat(svd.matrixV().leftCols(r).adjoint());
}

/// Orthonormal basis rows of the complement of the row space spanned by
/// `basis` inside C^m (Hermitian inner product on rows).
inline Mat row_space_complement(const Mat& basis, Eigen::Index m, double rel_cutoff = kRankCutoff) {
    if (m == 0) return zeros(0, 0);
    if (basis.rows() == 0) return eye(m);
    if (basis.cols() != m) throw ShapeMismatch("row_space_complement: basis has wrong width");
    Eigen::JacobiSVD<Mat> svd(basis, Eigen::ComputeFullV);
    const auto& s = svd.singularValues();
    const double cut = rel_cutoff * (s.size() ? s(0) : 0.0);
    int r = 0;
    for (Eigen::Index i = 0; i < s.size(); ++i)
        if (s(i) > cut && s(i) > 0.0) ++r;
    return Mat(svd.matrixV().rightCols(m - r).adjoint());
}

/// Projector onto a row space, acting on rows by right multiplication:
/// r |-> r * P.  basis must have orthonormal rows.
inline Mat row_projector(const Mat& basis, Eigen::Index m) {
    if (basis.rows() == 0) return zeros(m, m);
    return Mat(basis.adjoint() * basis);
}

/// Row-space membership: every row of x within tol of its projection.
inline bool rows_in_space(const Mat& x, const Mat& basis, double tol) {
    if (x.rows() == 0 || x.cols() == 0) return true;
    const Mat p = row_projector(basis, x.cols());
    const double scale = std::max(1.0, x.norm());
    return (x - x * p).norm() <= tol * scale;
}

/// Hermitian eigendecomposition after symmetrization; guards the
/// real-spectrum assumption against 1e-16 asymmetry.
inline Eigen::SelfAdjointEigenSolver<Mat> hermitian_eigen(const Mat& h) {
    Eigen::SelfAdjointEigenSolver<Mat> es(hermitize(h));
    if (es.info() != Eigen::Success)
        throw NumericalFailure("hermitian eigendecomposition did not converge");
    return es;
}

/// Positive square root of a Hermitian PSD matrix (negative eigenvalue noise
/// clamped to zero).
inline Mat psd_sqrt(const Mat& h) {
    if (h.rows() == 0) return h;
    auto es = hermitian_eigen(h);
    Eigen::VectorXd d = es.eigenvalues().cwiseMax(0.0).cwiseSqrt();
    return Mat(es.eigenvectors() * d.asDiagonal() * es.eigenvectors().adjoint());
}

/// Inverse square root of a Hermitian positive definite matrix.
inline Mat pd_inv_sqrt(const Mat& h) {
    if (h.rows() == 0) return h;
    auto es = hermitian_eigen(h);
    const Eigen::VectorXd& d = es.eigenvalues();
    if (d.minCoeff() <= 0.0)
        throw NumericalFailure("pd_inv_sqrt: matrix is not positive definite");
    Eigen::VectorXd inv = d.cwiseSqrt().cwiseInverse();
    return Mat(es.eigenvectors() * inv.asDiagonal() * es.eigenvectors().adjoint());
}

inline double min_eigenvalue(const Mat& h) {
    if (h.rows() == 0) return std::numeric_limits<double>::infinity();
    return hermitian_eigen(h).eigenvalues().minCoeff();
}

/// Solve u * H = w for rows u, H Hermitian positive definite.
inline Mat solve_rows_hpd(const Mat& h, const Mat& w) {
    if (h.rows() == 0) return w;
    Eigen::LLT<Mat> llt(hermitize(h));
    if (llt.info() != Eigen::Success)
        throw NumericalFailure("solve_rows_hpd: Cholesky failed");
    // u H = w  <=>  H u^* = w^*  (H Hermitian)
    return Mat(llt.solve(w.adjoint()).adjoint());
}

} // namespace modop
