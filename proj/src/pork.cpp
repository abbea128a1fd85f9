#include "qlmor/pork.hpp"

#include <string>

#include <Eigen/Cholesky>

#include "qlmor/error.hpp"

namespace qlmor
{

namespace
{

void check_right_half_plane(const std::vector<cplx>& pts)
{
    for (const cplx& z : pts)
        require(z.real() > 0.0, ErrorCode::NonPositiveRealPart,
                "PORK needs interpolation points with Re > 0, got Re = " + std::to_string(z.real()));
}

Eigen::LLT<CMatrix> certify(const CMatrix& G, ErrorCode code, const char* what)
{
    Eigen::LLT<CMatrix> llt(G);
    if (llt.info() != Eigen::Success || !(llt.rcond() >= kSingularRcond))
        fail(code, std::string(what) + " Gramian is not positive definite");
    return llt;
}

} // namespace

PorkGramian gramian_qs(const std::vector<cplx>& sigma, const CMatrix& b)
{
    const Index r = static_cast<Index>(sigma.size());
    require(b.cols() == r, ErrorCode::DimensionMismatch, "L_b must have one column per point");
    check_right_half_plane(sigma);

    CMatrix Q(r, r);
    for (Index i = 0; i < r; ++i)
        for (Index j = 0; j < r; ++j)
            Q(i, j) = b.col(i).dot(b.col(j)) /
                      (std::conj(sigma[static_cast<std::size_t>(i)]) + sigma[static_cast<std::size_t>(j)]);
    certify(Q, ErrorCode::NotObservable, "observability");
    return {std::move(Q), GramianKind::ObservabilityQs};
}

PorkGramian gramian_ps(const std::vector<cplx>& mu, const CMatrix& c)
{
    const Index r = static_cast<Index>(mu.size());
    require(c.rows() == r, ErrorCode::DimensionMismatch, "L_c must have one row per point");
    check_right_half_plane(mu);

    CMatrix P(r, r);
    for (Index i = 0; i < r; ++i)
        for (Index j = 0; j < r; ++j)
            P(i, j) = c.row(j).dot(c.row(i)) /
                      (mu[static_cast<std::size_t>(i)] + std::conj(mu[static_cast<std::size_t>(j)]));
    certify(P, ErrorCode::NotControllable, "controllability");
    return {std::move(P), GramianKind::ControllabilityPs};
}

ComplexRom pork_output(const CMatrix& right_samples, const std::vector<cplx>& sigma, const CMatrix& b)
{
    const PorkGramian qs = gramian_qs(sigma, b);
    require(right_samples.cols() == qs.matrix.rows(), ErrorCode::DimensionMismatch,
            "one right sample per interpolation point required");
    const Index r = qs.matrix.rows();

    const auto llt = certify(qs.matrix, ErrorCode::NotObservable, "observability");
    CMatrix SstarQ(r, r);
    for (Index i = 0; i < r; ++i)
        SstarQ.row(i) = std::conj(sigma[static_cast<std::size_t>(i)]) * qs.matrix.row(i);

    CMatrix A = -llt.solve(SstarQ);
    CMatrix B = llt.solve(b.adjoint());
    return ComplexRom(std::move(A), std::move(B), right_samples, Domain::Continuous);
}

ComplexRom pork_input(const CMatrix& left_samples, const std::vector<cplx>& mu, const CMatrix& c)
{
    const PorkGramian ps = gramian_ps(mu, c);
    require(left_samples.rows() == ps.matrix.rows(), ErrorCode::DimensionMismatch,
            "one left sample per interpolation point required");
    const Index r = ps.matrix.rows();

    // Ps is Hermitian, so X Ps^{-1} = (Ps^{-1} X^*)^*.
    const auto llt = certify(ps.matrix, ErrorCode::NotControllable, "controllability");
    CMatrix PUstar(r, r);
    for (Index j = 0; j < r; ++j)
        PUstar.col(j) = ps.matrix.col(j) * std::conj(mu[static_cast<std::size_t>(j)]);

    CMatrix A = -llt.solve(PUstar.adjoint()).adjoint();
    CMatrix C = llt.solve(c).adjoint();
    return ComplexRom(std::move(A), left_samples, std::move(C), Domain::Continuous);
}

} // namespace qlmor
