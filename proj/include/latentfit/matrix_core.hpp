#pragma once

#include <Eigen/Dense>
#include <string>
#include <string_view>

#include "latentfit/error.hpp"

namespace latentfit {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using Index = Eigen::Index;

/// Dense symmetric matrix with the symmetry made structural: entries(i,j)
/// and entries(j,i) are the same double, bit for bit, and all entries are
/// finite. Construction rejects anything else.
class SymMatrix {
public:
    /// Requires exact symmetry; throws ErrorCode::Data otherwise.
    explicit SymMatrix(Matrix entries);

    /// Builds from a nearly-symmetric matrix by averaging m and m^T.
    /// Intended for results of floating-point products.
    static SymMatrix symmetrized(const Matrix& m);

    static SymMatrix identity(Index p);
    static SymMatrix diagonal(const Vector& d);

    Index dim() const noexcept { return m_.rows(); }
    const Matrix& entries() const noexcept { return m_; }
    double operator()(Index i, Index j) const { return m_(i, j); }

private:
    Matrix m_;
};

/// Eigendecomposition of a symmetric matrix.
///
/// values are sorted non-increasing; column j of vectors is the unit-norm
/// eigenvector of values[j]. Sign convention: in each column the entry of
/// largest absolute value is non-negative (ties broken by lowest index),
/// so the decomposition of a given matrix is reproducible bit for bit.
struct EigenDecomposition {
    Vector values;
    Matrix vectors;
};

/// Full symmetric eigendecomposition. `label` names the matrix in
/// diagnostics. Throws ErrorCode::Data if the solver fails to converge.
EigenDecomposition eigen_sym(const SymMatrix& m, std::string_view label = "symmetric matrix");

/// log |m| for positive-definite m, via Cholesky. Throws ErrorCode::Data
/// carrying the index of the failing pivot if m is not positive definite.
double log_det(const SymMatrix& m, std::string_view label = "symmetric matrix");

/// Inverse of a positive-definite matrix via Cholesky; the result is
/// exactly symmetric. Throws like log_det on non-PD input.
SymMatrix inverse(const SymMatrix& m, std::string_view label = "symmetric matrix");

}  // namespace latentfit
