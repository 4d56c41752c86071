#include "latentfit/matrix_core.hpp"

#include <cmath>
#include <string>

namespace latentfit {
namespace {

// First k with a non-positive pivot in the textbook Cholesky recursion.
// Only used to build diagnostics once Eigen's LLT has already failed.
Index first_failing_pivot(const Matrix& m) {
    const Index p = m.rows();
    Matrix l = Matrix::Zero(p, p);
    for (Index k = 0; k < p; ++k) {
        double pivot = m(k, k) - l.row(k).head(k).squaredNorm();
        if (!(pivot > 0.0) || !std::isfinite(pivot)) return k;
        l(k, k) = std::sqrt(pivot);
        for (Index i = k + 1; i < p; ++i) {
            l(i, k) = (m(i, k) - l.row(i).head(k).dot(l.row(k).head(k))) / l(k, k);
        }
    }
    return p;  // unreachable when called after an LLT failure
}

Eigen::LLT<Matrix> cholesky_or_throw(const SymMatrix& m, std::string_view label) {
    Eigen::LLT<Matrix> llt(m.entries());
    if (llt.info() != Eigen::Success) {
        fail(ErrorCode::Data,
             std::string(label) + " is not positive definite (pivot " +
                 std::to_string(first_failing_pivot(m.entries())) + " fails)");
    }
    return llt;
}

}  // namespace

SymMatrix::SymMatrix(Matrix entries) : m_(std::move(entries)) {
    if (m_.rows() != m_.cols() || m_.rows() < 1) {
        fail(ErrorCode::Data, "symmetric matrix must be square and non-empty");
    }
    if (!m_.allFinite()) {
        fail(ErrorCode::Data, "symmetric matrix has non-finite entries");
    }
    for (Index i = 0; i < m_.rows(); ++i) {
        for (Index j = i + 1; j < m_.cols(); ++j) {
            if (m_(i, j) != m_(j, i)) {
                fail(ErrorCode::Data,
                     "matrix is not symmetric at (" + std::to_string(i) + "," +
                         std::to_string(j) + ")");
            }
        }
    }
}

SymMatrix SymMatrix::symmetrized(const Matrix& m) {
    return SymMatrix(((m + m.transpose()) / 2.0).eval());
}

SymMatrix SymMatrix::identity(Index p) { return SymMatrix(Matrix::Identity(p, p)); }

SymMatrix SymMatrix::diagonal(const Vector& d) {
    return SymMatrix(Matrix(d.asDiagonal()));
}

EigenDecomposition eigen_sym(const SymMatrix& m, std::string_view label) {
    Eigen::SelfAdjointEigenSolver<Matrix> solver(m.entries());
    if (solver.info() != Eigen::Success) {
        fail(ErrorCode::Data,
             "eigendecomposition of " + std::string(label) + " did not converge");
    }

    const Index p = m.dim();
    EigenDecomposition d;
    d.values.resize(p);
    d.vectors.resize(p, p);
    // Eigen returns ascending order; flip to non-increasing.
    for (Index j = 0; j < p; ++j) {
        d.values[j] = solver.eigenvalues()[p - 1 - j];
        d.vectors.col(j) = solver.eigenvectors().col(p - 1 - j);
    }
    // Sign convention: largest-|entry| coefficient non-negative, first such
    // entry winning ties.
    for (Index j = 0; j < p; ++j) {
        Index arg = 0;
        double best = -1.0;
        for (Index i = 0; i < p; ++i) {
            double a = std::abs(d.vectors(i, j));
            if (a > best) {
                best = a;
                arg = i;
            }
        }
        if (d.vectors(arg, j) < 0.0) d.vectors.col(j) = -d.vectors.col(j);
    }
    return d;
}

double log_det(const SymMatrix& m, std::string_view label) {
    auto llt = cholesky_or_throw(m, label);
    Matrix l = llt.matrixL();
    double acc = 0.0;
    for (Index i = 0; i < m.dim(); ++i) acc += std::log(l(i, i));
    return 2.0 * acc;
}

SymMatrix inverse(const SymMatrix& m, std::string_view label) {
    auto llt = cholesky_or_throw(m, label);
    Matrix inv = llt.solve(Matrix::Identity(m.dim(), m.dim()));
    return SymMatrix::symmetrized(inv);
}

}  // namespace latentfit
