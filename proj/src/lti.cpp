#include "qlmor/lti.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/LU>

#include "qlmor/error.hpp"

namespace qlmor
{

namespace
{

template <typename M>
void check_dims(const M& A, const M& B, const M& C)
{
    require(A.rows() == A.cols(), ErrorCode::DimensionMismatch, "A must be square");
    require(B.rows() == A.rows(), ErrorCode::DimensionMismatch,
            "B has " + std::to_string(B.rows()) + " rows, expected " + std::to_string(A.rows()));
    require(C.cols() == A.rows(), ErrorCode::DimensionMismatch,
            "C has " + std::to_string(C.cols()) + " columns, expected " + std::to_string(A.rows()));
}

// LU of (sI - A) with the SingularShift guard.
Eigen::PartialPivLU<CMatrix> resolvent_lu(const CMatrix& A, cplx s)
{
    CMatrix M = -A;
    M.diagonal().array() += s;
    Eigen::PartialPivLU<CMatrix> lu(M);
    const double rc = M.rows() == 0 ? 1.0 : lu.rcond();
    if (!(rc >= kSingularRcond))
        fail(ErrorCode::SingularShift, "s is (numerically) an eigenvalue of A, rcond " + std::to_string(rc));
    return lu;
}

bool spectrum_stable(const CVector& eigs, Domain domain)
{
    for (const cplx& l : eigs)
    {
        if (domain == Domain::Continuous ? !(l.real() < 0.0) : !(std::abs(l) < 1.0))
            return false;
    }
    return true;
}

} // namespace

StateSpaceModel::StateSpaceModel(RMatrix a, RMatrix b, RMatrix c, Domain d)
    : A(std::move(a)), B(std::move(b)), C(std::move(c)), domain(d)
{
    check_dims(A, B, C);
}

ComplexRom::ComplexRom(CMatrix a, CMatrix b, CMatrix c, Domain d)
    : A(std::move(a)), B(std::move(b)), C(std::move(c)), domain(d)
{
    check_dims(A, B, C);
    require(A.rows() >= 1, ErrorCode::InvalidArgument, "reduced order must be at least 1");
}

ComplexRom to_complex(const StateSpaceModel& model)
{
    ComplexRom rom;
    rom.A      = model.A.cast<cplx>();
    rom.B      = model.B.cast<cplx>();
    rom.C      = model.C.cast<cplx>();
    rom.domain = model.domain;
    return rom;
}

CMatrix PoleResidueForm::evaluate(cplx s) const
{
    const Index p = left_factors.empty() ? 0 : left_factors.front().size();
    const Index m = right_factors.empty() ? 0 : right_factors.front().size();
    CMatrix G     = CMatrix::Zero(p, m);
    for (std::size_t k = 0; k < poles.size(); ++k)
        G += left_factors[k] * right_factors[k].adjoint() / (s - poles[k]);
    return G;
}

CMatrix eval_tf(const ComplexRom& rom, cplx s)
{
    const auto lu = resolvent_lu(rom.A, s);
    return rom.C * lu.solve(rom.B);
}

CMatrix eval_tf(const StateSpaceModel& model, cplx s)
{
    const auto lu = resolvent_lu(model.A.cast<cplx>(), s);
    return model.C.cast<cplx>() * lu.solve(model.B.cast<cplx>());
}

CMatrix eval_tf_derivative(const ComplexRom& rom, cplx s)
{
    const auto lu = resolvent_lu(rom.A, s);
    return -(rom.C * lu.solve(lu.solve(rom.B)));
}

CMatrix eval_tf_derivative(const StateSpaceModel& model, cplx s)
{
    return eval_tf_derivative(to_complex(model), s);
}

RMatrix impulse_response(const StateSpaceModel& model, double t)
{
    require(t >= 0.0, ErrorCode::NegativeTime, "impulse response requested at t = " + std::to_string(t));
    if (model.domain == Domain::Continuous)
        return model.C * expm(model.A * t) * model.B;

    require(t == std::floor(t), ErrorCode::InvalidArgument, "discrete impulse response needs an integer index");
    RMatrix X = model.B;
    for (long k = 0; k < static_cast<long>(t); ++k)
        X = model.A * X;
    return model.C * X;
}

std::vector<RMatrix> impulse_response(const StateSpaceModel& model, const std::vector<double>& times)
{
    std::vector<RMatrix> out;
    out.reserve(times.size());
    if (model.domain == Domain::Continuous)
    {
        for (double t : times)
            out.push_back(impulse_response(model, t));
        return out;
    }
    // Discrete: successive powers, indices must be ascending.
    RMatrix X   = model.B;
    double last = 0.0;
    for (double k : times)
    {
        require(k >= 0.0, ErrorCode::NegativeTime, "negative index");
        require(k == std::floor(k) && k >= last, ErrorCode::InvalidArgument,
                "discrete indices must be ascending integers");
        for (; last < k; last += 1.0)
            X = model.A * X;
        out.push_back(model.C * X);
    }
    return out;
}

PoleResidueForm pole_residue(const ComplexRom& rom)
{
    const EigenDecomposition ed = eig_dense(rom.A);
    const Index n               = ed.values.size();

    double scale = 0.0;
    for (Index i = 0; i < n; ++i)
        scale = std::max(scale, std::abs(ed.values(i)));
    for (Index i = 0; i < n; ++i)
        for (Index j = i + 1; j < n; ++j)
            if (std::abs(ed.values(i) - ed.values(j)) <= kRepeatedPoleTol * scale)
                fail(ErrorCode::RepeatedPoles, "eigenvalues " + std::to_string(i) + " and " + std::to_string(j) +
                                                   " coincide within tolerance");

    const CMatrix CX   = rom.C * ed.vectors;
    const CMatrix XinvB = solve_dense(ed.vectors, rom.B);

    PoleResidueForm prf;
    for (Index k = 0; k < n; ++k)
    {
        prf.poles.push_back(ed.values(k));
        prf.left_factors.emplace_back(CX.col(k));
        prf.right_factors.emplace_back(XinvB.row(k).adjoint());
    }
    return prf;
}

PoleResidueForm pole_residue(const StateSpaceModel& model) { return pole_residue(to_complex(model)); }

bool is_stable(const ComplexRom& rom) { return spectrum_stable(eig_dense(rom.A).values, rom.domain); }

bool is_stable(const StateSpaceModel& model) { return is_stable(to_complex(model)); }

double h2_norm(const ComplexRom& rom)
{
    require(is_stable(rom), ErrorCode::UnstableModel, "H2 norm requires a stable model");
    const CMatrix BB = rom.B * rom.B.adjoint();
    const CMatrix P  = rom.domain == Domain::Continuous ? solve_lyapunov(rom.A, BB) : solve_stein(rom.A, BB);
    const double sq  = (rom.C * P * rom.C.adjoint()).trace().real();
    return std::sqrt(std::max(sq, 0.0));
}

double h2_norm(const StateSpaceModel& model) { return h2_norm(to_complex(model)); }

ComplexRom difference_system(const ComplexRom& lhs, const ComplexRom& rhs)
{
    require(lhs.domain == rhs.domain, ErrorCode::InvalidArgument, "systems live in different domains");
    require(lhs.inputs() == rhs.inputs() && lhs.outputs() == rhs.outputs(), ErrorCode::DimensionMismatch,
            "systems have different input/output dimensions");
    const Index n1 = lhs.order();
    const Index n2 = rhs.order();
    CMatrix A      = CMatrix::Zero(n1 + n2, n1 + n2);
    A.topLeftCorner(n1, n1)     = lhs.A;
    A.bottomRightCorner(n2, n2) = rhs.A;
    CMatrix B(n1 + n2, lhs.inputs());
    B << lhs.B, rhs.B;
    CMatrix C(lhs.outputs(), n1 + n2);
    C << lhs.C, -rhs.C;
    return ComplexRom(std::move(A), std::move(B), std::move(C), lhs.domain);
}

double h2_error(const StateSpaceModel& truth, const ComplexRom& rom)
{
    return h2_norm(difference_system(to_complex(truth), rom));
}

double h2_error(const StateSpaceModel& truth, const StateSpaceModel& rom)
{
    return h2_error(truth, to_complex(rom));
}

} // namespace qlmor
