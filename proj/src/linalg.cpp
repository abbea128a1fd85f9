#include "qlmor/linalg.hpp"

#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>
#include <Eigen/LU>
#include <unsupported/Eigen/MatrixFunctions>

#include "qlmor/error.hpp"

namespace qlmor
{

double rcond(const CMatrix& A)
{
    if (A.rows() == 0)
        return 1.0;
    Eigen::PartialPivLU<CMatrix> lu(A);
    const double rc = lu.rcond();
    return std::isfinite(rc) ? rc : 0.0;
}

CMatrix solve_dense(const CMatrix& A, const CMatrix& B)
{
    require(A.rows() == A.cols(), ErrorCode::InvalidArgument, "solve_dense: matrix is not square");
    require(A.rows() == B.rows(), ErrorCode::DimensionMismatch, "solve_dense: right-hand side row count differs");
    Eigen::PartialPivLU<CMatrix> lu(A);
    const double rc = lu.rcond();
    if (!(rc >= kSingularRcond))
        fail(ErrorCode::SingularMatrix, "reciprocal condition " + std::to_string(rc));
    return lu.solve(B);
}

EigenDecomposition eig_dense(const CMatrix& A)
{
    require(A.rows() == A.cols(), ErrorCode::InvalidArgument, "eig_dense: matrix is not square");
    Eigen::ComplexEigenSolver<CMatrix> es(A, true);
    if (es.info() != Eigen::Success)
        fail(ErrorCode::EigFailure, "complex eigensolver did not converge");
    return {es.eigenvalues(), es.eigenvectors()};
}

namespace
{

struct Schur
{
    CMatrix U; // unitary
    CMatrix T; // upper triangular, A = U T U^*
};

Schur schur(const CMatrix& A)
{
    Eigen::ComplexSchur<CMatrix> cs(A, true);
    if (cs.info() != Eigen::Success)
        fail(ErrorCode::EigFailure, "complex Schur decomposition did not converge");
    return {cs.matrixU(), cs.matrixT()};
}

// Back substitution for an upper-triangular system.
CVector solve_upper(const CMatrix& T, CVector rhs)
{
    const Index n = T.rows();
    for (Index i = n - 1; i >= 0; --i)
    {
        cplx acc = rhs(i);
        for (Index j = i + 1; j < n; ++j)
            acc -= T(i, j) * rhs(j);
        if (std::abs(T(i, i)) == 0.0)
            fail(ErrorCode::SingularMatrix, "triangular Sylvester block is singular");
        rhs(i) = acc / T(i, i);
    }
    return rhs;
}

double scale_of(const CMatrix& M) { return M.size() == 0 ? 1.0 : std::max(1.0, M.cwiseAbs().maxCoeff()); }

} // namespace

CMatrix solve_sylvester(const CMatrix& A, const CMatrix& B, const CMatrix& C)
{
    require(A.rows() == A.cols() && B.rows() == B.cols(), ErrorCode::InvalidArgument,
            "solve_sylvester: coefficients must be square");
    require(C.rows() == A.rows() && C.cols() == B.rows(), ErrorCode::DimensionMismatch,
            "solve_sylvester: right-hand side has wrong shape");

    const Schur sa = schur(A);
    const Schur sb = schur(B);
    // T_a Y + Y T_b = F with F = U_a^* C U_b and X = U_a Y U_b^*.
    const CMatrix F = sa.U.adjoint() * C * sb.U;
    const Index n   = A.rows();
    const Index m   = B.rows();
    const double tol = 1e-14 * (scale_of(sa.T) + scale_of(sb.T));

    CMatrix Y(n, m);
    for (Index k = 0; k < m; ++k)
    {
        CVector rhs = F.col(k);
        for (Index j = 0; j < k; ++j)
            rhs -= sb.T(j, k) * Y.col(j);
        CMatrix M = sa.T;
        M.diagonal().array() += sb.T(k, k);
        for (Index i = 0; i < n; ++i)
            if (std::abs(M(i, i)) <= tol)
                fail(ErrorCode::SingularMatrix, "Sylvester operator is singular (A and -B share an eigenvalue)");
        Y.col(k) = solve_upper(M, rhs);
    }
    return sa.U * Y * sb.U.adjoint();
}

CMatrix solve_lyapunov(const CMatrix& A, const CMatrix& Q)
{
    return solve_sylvester(A, A.adjoint(), -Q);
}

CMatrix solve_stein(const CMatrix& A, const CMatrix& Q)
{
    require(A.rows() == A.cols(), ErrorCode::InvalidArgument, "solve_stein: matrix is not square");
    require(Q.rows() == A.rows() && Q.cols() == A.rows(), ErrorCode::DimensionMismatch,
            "solve_stein: Q has wrong shape");

    // A = U T U^*, A^* = U T^* U^*.  With Y = U^* P U and F = U^* Q U the
    // equation becomes T Y T^* - Y + F = 0.  Let R = T^* (lower triangular);
    // columns are eliminated from the last one backwards.
    const Schur sa = schur(A);
    const CMatrix& T = sa.T;
    const CMatrix F  = sa.U.adjoint() * Q * sa.U;
    const Index n    = A.rows();

    // Column k of T Y T^*:  sum_j T Y(:,j) conj(T(k,j)) over j >= k.
    CMatrix Y = CMatrix::Zero(n, n);
    CMatrix TY(n, n);
    for (Index k = n - 1; k >= 0; --k)
    {
        CVector rhs = -F.col(k);
        for (Index j = k + 1; j < n; ++j)
            rhs -= std::conj(T(k, j)) * TY.col(j);
        CMatrix M = std::conj(T(k, k)) * T;
        M.diagonal().array() -= 1.0;
        for (Index i = 0; i < n; ++i)
            if (std::abs(M(i, i)) <= 1e-14)
                fail(ErrorCode::SingularMatrix, "Stein operator is singular (reciprocal eigenvalue pair)");
        Y.col(k)  = solve_upper(M, rhs);
        TY.col(k) = T * Y.col(k);
    }
    return sa.U * Y * sa.U.adjoint();
}

RMatrix expm(const RMatrix& A)
{
    require(A.rows() == A.cols(), ErrorCode::InvalidArgument, "expm: matrix is not square");
    if (A.rows() == 0)
        return A;
    return A.exp();
}

} // namespace qlmor
