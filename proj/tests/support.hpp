// Test-only oracles and random generators. Nothing here is used by the
// library; the oracles are deliberately naive so they fail differently from
// the production code.
#ifndef QLMOR_TESTS_SUPPORT_HPP
#define QLMOR_TESTS_SUPPORT_HPP

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/QR>

#include "qlmor/interpolation.hpp"
#include "qlmor/lti.hpp"

namespace qlmor::test
{

class Gen
{
public:
    explicit Gen(std::uint64_t seed) : eng_(seed) {}

    double uniform(double lo = 0.0, double hi = 1.0)
    {
        return lo + (hi - lo) * (static_cast<double>(eng_() >> 11) * 0x1.0p-53);
    }
    double normal()
    {
        double u = uniform();
        while (u <= 0.0)
            u = uniform();
        return std::sqrt(-2.0 * std::log(u)) * std::cos(2.0 * std::numbers::pi * uniform());
    }
    int integer(int lo, int hi) { return lo + static_cast<int>(uniform() * (hi - lo + 1)) % (hi - lo + 1); }
    cplx complex_normal() { return {normal(), normal()}; }

    RMatrix real_matrix(Index r, Index c)
    {
        RMatrix M(r, c);
        for (Index i = 0; i < r; ++i)
            for (Index j = 0; j < c; ++j)
                M(i, j) = normal();
        return M;
    }
    CMatrix complex_matrix(Index r, Index c)
    {
        CMatrix M(r, c);
        for (Index i = 0; i < r; ++i)
            for (Index j = 0; j < c; ++j)
                M(i, j) = complex_normal();
        return M;
    }
    RMatrix orthogonal(Index n)
    {
        Eigen::HouseholderQR<RMatrix> qr(real_matrix(n, n));
        return qr.householderQ();
    }

private:
    std::mt19937_64 eng_;
};

/// Stable real model: rotation/real blocks with chosen spectrum, rotated by a
/// random orthogonal similarity.
inline StateSpaceModel random_stable_model(Gen& g, Index n, Index m, Index p, Domain d = Domain::Continuous)
{
    RMatrix D = RMatrix::Zero(n, n);
    Index k   = 0;
    while (k < n)
    {
        if (k + 1 < n && g.uniform() < 0.7)
        {
            double re, im;
            if (d == Domain::Continuous)
            {
                re = -g.uniform(0.2, 3.0);
                im = g.uniform(0.5, 6.0);
            }
            else
            {
                const double rho = g.uniform(0.2, 0.9), th = g.uniform(0.2, 3.0);
                re = rho * std::cos(th);
                im = rho * std::sin(th);
            }
            D(k, k) = re;
            D(k + 1, k + 1) = re;
            D(k, k + 1) = im;
            D(k + 1, k) = -im;
            k += 2;
        }
        else
        {
            D(k, k) = d == Domain::Continuous ? -g.uniform(0.2, 3.0) : g.uniform(-0.9, 0.9);
            ++k;
        }
    }
    const RMatrix Q = g.orthogonal(n);
    return StateSpaceModel(Q * D * Q.transpose(), g.real_matrix(n, m), g.real_matrix(p, n), d);
}

/// Conjugate-closed right-half-plane points (or points outside the unit disk
/// for discrete data) with conjugate-paired directions.
inline void random_closed_points(Gen& g, Index r, Index dim, std::vector<cplx>& pts, CMatrix& dirs,
                                 Domain d = Domain::Continuous, bool columns = true)
{
    pts.clear();
    CMatrix D(dim, r);
    Index k = 0;
    auto point = [&](bool real) {
        if (d == Domain::Continuous)
            return real ? cplx(g.uniform(0.3, 5.0), 0.0) : cplx(g.uniform(0.3, 5.0), g.uniform(0.5, 8.0));
        const double rho = g.uniform(1.2, 4.0);
        return real ? cplx(g.uniform() < 0.5 ? -rho : rho, 0.0) : std::polar(rho, g.uniform(0.3, 2.8));
    };
    while (k < r)
    {
        if (k + 1 < r && g.uniform() < 0.7)
        {
            const cplx s = point(false);
            CVector v(dim);
            for (Index i = 0; i < dim; ++i)
                v(i) = g.complex_normal();
            pts.push_back(s);
            pts.push_back(std::conj(s));
            D.col(k)     = v;
            D.col(k + 1) = v.conjugate();
            k += 2;
        }
        else
        {
            pts.push_back(point(true));
            CVector v(dim);
            for (Index i = 0; i < dim; ++i)
                v(i) = g.normal();
            D.col(k) = v;
            ++k;
        }
    }
    dirs = columns ? D : CMatrix(D.transpose());
}

/// vec-Kronecker brute force for A X + X B = C.
inline CMatrix kron_sylvester(const CMatrix& A, const CMatrix& B, const CMatrix& C)
{
    const Index n = A.rows(), m = B.rows();
    CMatrix K = CMatrix::Zero(n * m, n * m);
    for (Index j = 0; j < m; ++j)
        for (Index i = 0; i < n; ++i)
            for (Index l = 0; l < m; ++l)
                for (Index k = 0; k < n; ++k)
                {
                    cplx v = 0.0;
                    if (l == j)
                        v += A(i, k);
                    if (k == i)
                        v += B(l, j);
                    K(j * n + i, l * n + k) = v;
                }
    CVector rhs(n * m);
    for (Index j = 0; j < m; ++j)
        for (Index i = 0; i < n; ++i)
            rhs(j * n + i) = C(i, j);
    const CVector x = K.fullPivLu().solve(rhs);
    CMatrix X(n, m);
    for (Index j = 0; j < m; ++j)
        for (Index i = 0; i < n; ++i)
            X(i, j) = x(j * n + i);
    return X;
}

/// Brute force for A P A^* - P + Q = 0.
inline CMatrix kron_stein(const CMatrix& A, const CMatrix& Q)
{
    const Index n = A.rows();
    CMatrix K = CMatrix::Identity(n * n, n * n);
    for (Index j = 0; j < n; ++j)
        for (Index i = 0; i < n; ++i)
            for (Index l = 0; l < n; ++l)
                for (Index k = 0; k < n; ++k)
                    K(j * n + i, l * n + k) -= A(i, k) * std::conj(A(j, l));
    CVector rhs(n * n);
    for (Index j = 0; j < n; ++j)
        for (Index i = 0; i < n; ++i)
            rhs(j * n + i) = Q(i, j);
    const CVector x = K.fullPivLu().solve(rhs);
    CMatrix P(n, n);
    for (Index j = 0; j < n; ++j)
        for (Index i = 0; i < n; ++i)
            P(i, j) = x(j * n + i);
    return P;
}

/// H2 norm by brute-force Kronecker Gramians.
inline double h2_norm_oracle(const CMatrix& A, const CMatrix& B, const CMatrix& C, Domain d)
{
    const CMatrix BB = B * B.adjoint();
    const CMatrix P  = d == Domain::Continuous ? kron_sylvester(A, A.adjoint(), -BB) : kron_stein(A, BB);
    return std::sqrt(std::abs((C * P * C.adjoint()).trace().real()));
}

/// Central difference of G along direction 1 with step h.
inline CMatrix central_difference(const ComplexRom& sys, cplx s, double h = 1e-5)
{
    return (eval_tf(sys, s + h) - eval_tf(sys, s - h)) / (2.0 * h);
}

/// Relative Frobenius distance.
inline double rel_err(const CMatrix& got, const CMatrix& want)
{
    const double n = want.norm();
    return (got - want).norm() / (n > 0.0 ? n : 1.0);
}

/// First-order SISO system 1/(s + a), or 1/(z - a) for discrete data.
inline StateSpaceModel first_order(double a, Domain d = Domain::Continuous)
{
    RMatrix A(1, 1), B(1, 1), C(1, 1);
    A(0, 0) = d == Domain::Continuous ? -a : a;
    B(0, 0) = 1.0;
    C(0, 0) = 1.0;
    return StateSpaceModel(A, B, C, d);
}

} // namespace qlmor::test

#endif // QLMOR_TESTS_SUPPORT_HPP
