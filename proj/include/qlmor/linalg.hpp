#ifndef QLMOR_LINALG_HPP
#define QLMOR_LINALG_HPP

#include <complex>

#include <Eigen/Core>

namespace qlmor
{

using cplx    = std::complex<double>;
using RMatrix = Eigen::MatrixXd;
using CMatrix = Eigen::MatrixXcd;
using RVector = Eigen::VectorXd;
using CVector = Eigen::VectorXcd;
using Index   = Eigen::Index;

inline constexpr cplx kJ{0.0, 1.0};

/// Reciprocal condition threshold below which a dense solve is refused.
inline constexpr double kSingularRcond = 1e-12;

struct EigenDecomposition
{
    CVector values;  ///< eigenvalues, in solver order
    CMatrix vectors; ///< column k is the eigenvector of values(k)
};

/// Solve `A X = B` by LU with partial pivoting. Throws SingularMatrix when the
/// reciprocal condition estimate of A falls below kSingularRcond.
CMatrix solve_dense(const CMatrix& A, const CMatrix& B);

/// Reciprocal 1-norm condition estimate of a square matrix (0 when singular).
double rcond(const CMatrix& A);

/// Eigendecomposition of a general complex square matrix. Throws EigFailure.
EigenDecomposition eig_dense(const CMatrix& A);

///
/// Solve the Sylvester equation `A X + X B = C` (complex, dense).
///
/// Both coefficients are reduced to upper-triangular Schur form and the
/// transformed system is solved column by column. Throws SingularMatrix if
/// `A` and `-B` share an eigenvalue (numerically).
///
CMatrix solve_sylvester(const CMatrix& A, const CMatrix& B, const CMatrix& C);

/// Solve `A P + P A^* + Q = 0`.
CMatrix solve_lyapunov(const CMatrix& A, const CMatrix& Q);

/// Solve the Stein equation `A P A^* - P + Q = 0`.
CMatrix solve_stein(const CMatrix& A, const CMatrix& Q);

/// Matrix exponential (scaling and squaring with Pade approximant).
RMatrix expm(const RMatrix& A);

/// Largest absolute entry of a matrix, 0 for empty matrices.
template <typename Derived>
double max_abs(const Eigen::MatrixBase<Derived>& m)
{
    return m.size() == 0 ? 0.0 : static_cast<double>(m.cwiseAbs().maxCoeff());
}

} // namespace qlmor

#endif // QLMOR_LINALG_HPP
