#include "qlmor/interpolation.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qlmor/error.hpp"

namespace qlmor
{

TangentialData TangentialData::two_sided(std::vector<cplx> sigma, std::vector<cplx> mu, CMatrix b, CMatrix c)
{
    TangentialData d;
    d.sigma   = std::move(sigma);
    d.mu      = std::move(mu);
    d.b       = std::move(b);
    d.c       = std::move(c);
    d.hermite = false;
    d.check_shape();
    return d;
}

TangentialData TangentialData::hermite_data(std::vector<cplx> sigma, CMatrix b, CMatrix c)
{
    TangentialData d;
    d.mu      = sigma;
    d.sigma   = std::move(sigma);
    d.b       = std::move(b);
    d.c       = std::move(c);
    d.hermite = true;
    d.check_shape();
    return d;
}

void TangentialData::check_shape() const
{
    const Index r = order();
    require(r >= 1, ErrorCode::InvalidArgument, "tangential data needs at least one point");
    require(static_cast<Index>(mu.size()) == r, ErrorCode::DimensionMismatch, "sigma and mu lengths differ");
    require(b.cols() == r, ErrorCode::DimensionMismatch, "L_b must have one column per right point");
    require(c.rows() == r, ErrorCode::DimensionMismatch, "L_c must have one row per left point");
    if (hermite)
        require(std::equal(sigma.begin(), sigma.end(), mu.begin()), ErrorCode::InvalidArgument,
                "Hermite data requires mu == sigma");
}

void TangentialData::check_points(Domain domain) const
{
    auto check = [domain](const std::vector<cplx>& pts, const char* name) {
        for (const cplx& z : pts)
        {
            if (domain == Domain::Continuous)
                require(z.real() > 0.0, ErrorCode::NonPositiveRealPart,
                        std::string(name) + " point with Re <= 0: " + std::to_string(z.real()));
            else
                require(std::abs(z) > 1.0, ErrorCode::PointInsideUnitDisk,
                        std::string(name) + " point with |z| <= 1: " + std::to_string(std::abs(z)));
        }
    };
    check(sigma, "right");
    check(mu, "left");
}

std::optional<ConjugatePairing> find_conjugate_pairing(const std::vector<cplx>& points, const CMatrix& dirs,
                                                       double tol)
{
    const Index r = static_cast<Index>(points.size());
    ConjugatePairing pairing;
    std::vector<bool> used(static_cast<std::size_t>(r), false);
    for (Index i = 0; i < r; ++i)
    {
        if (used[static_cast<std::size_t>(i)])
            continue;
        const cplx z      = points[static_cast<std::size_t>(i)];
        const double zscl = 1.0 + std::abs(z);
        const double dscl = 1.0 + dirs.col(i).norm();
        if (std::abs(z.imag()) <= tol * zscl)
        {
            if (dirs.col(i).imag().norm() > tol * dscl)
                return std::nullopt;
            pairing.reals.push_back(i);
            used[static_cast<std::size_t>(i)] = true;
            continue;
        }
        Index partner = -1;
        for (Index j = i + 1; j < r && partner < 0; ++j)
        {
            if (used[static_cast<std::size_t>(j)])
                continue;
            if (std::abs(points[static_cast<std::size_t>(j)] - std::conj(z)) <= tol * zscl &&
                (dirs.col(j) - dirs.col(i).conjugate()).norm() <= tol * dscl)
                partner = j;
        }
        if (partner < 0)
            return std::nullopt;
        used[static_cast<std::size_t>(i)]       = true;
        used[static_cast<std::size_t>(partner)] = true;
        pairing.pairs.emplace_back(i, partner);
    }
    return pairing;
}

std::optional<ConjugatePairing> TangentialData::right_pairing(double tol) const
{
    return find_conjugate_pairing(sigma, b, tol);
}

std::optional<ConjugatePairing> TangentialData::left_pairing(double tol) const
{
    return find_conjugate_pairing(mu, c.transpose(), tol);
}

void SampleSet::check_against(const TangentialData& data) const
{
    const Index r = data.order();
    require(right.cols() == r && left.rows() == r, ErrorCode::DimensionMismatch,
            "sample counts do not match the interpolation data");
    require(left.cols() == data.inputs(), ErrorCode::DimensionMismatch, "left samples have the wrong width");
    require(right.rows() == data.outputs(), ErrorCode::DimensionMismatch, "right samples have the wrong height");
    if (data.hermite)
    {
        require(hermite_diag.has_value(), ErrorCode::InvalidArgument, "Hermite data requires derivative samples");
        require(hermite_diag->rows() == right.rows() && hermite_diag->cols() == r, ErrorCode::DimensionMismatch,
                "derivative samples have the wrong shape");
    }
}

LoewnerPencil build_pencil(const TangentialData& data, const SampleSet& samples)
{
    data.check_shape();
    samples.check_against(data);
    const Index r = data.order();

    // c_i v_j and w_i b_j are contractions of stored samples only.
    const CMatrix cv = data.c * samples.right; // (i,j) = c_i G(sigma_j) b_j
    const CMatrix wb = samples.left * data.b;  // (i,j) = c_i G(mu_i) b_j

    LoewnerPencil pencil;
    pencil.L.resize(r, r);
    pencil.Ls.resize(r, r);
    for (Index i = 0; i < r; ++i)
    {
        const cplx mu = data.mu[static_cast<std::size_t>(i)];
        for (Index j = 0; j < r; ++j)
        {
            const cplx sg = data.sigma[static_cast<std::size_t>(j)];
            if (data.hermite && i == j)
            {
                const cplx cd    = data.c.row(i) * samples.hermite_diag->col(i);
                pencil.L(i, i)  = -cd;
                pencil.Ls(i, i) = -(cv(i, i) + sg * cd);
                continue;
            }
            const cplx gap = sg - mu;
            if (std::abs(gap) < 1e-12 * (1.0 + std::abs(sg)))
                fail(ErrorCode::CoincidentPoints, "sigma_" + std::to_string(j) + " coincides with mu_" +
                                                      std::to_string(i) + "; use Hermite data");
            pencil.L(i, j)  = -(cv(i, j) - wb(i, j)) / gap;
            pencil.Ls(i, j) = -(sg * cv(i, j) - mu * wb(i, j)) / gap;
        }
    }
    pencil.W_stack = samples.left;
    pencil.V_stack = samples.right;
    return pencil;
}

ComplexRom lf_rom(const LoewnerPencil& pencil, Domain domain)
{
    const double rc = rcond(pencil.L);
    if (!(rc >= kSingularRcond))
        fail(ErrorCode::SingularLoewner,
             "Loewner matrix rcond " + std::to_string(rc) + " (redundant interpolation data, try a smaller order)");
    CMatrix rhs(pencil.L.rows(), pencil.Ls.cols() + pencil.W_stack.cols());
    rhs << pencil.Ls, pencil.W_stack;
    const CMatrix sol = solve_dense(pencil.L, rhs);
    return ComplexRom(sol.leftCols(pencil.Ls.cols()), sol.rightCols(pencil.W_stack.cols()), pencil.V_stack, domain);
}

TransferOracle make_oracle(const StateSpaceModel& model)
{
    const ComplexRom sys = to_complex(model);
    return make_oracle(sys);
}

TransferOracle make_oracle(const ComplexRom& rom)
{
    return {[rom](cplx s) { return eval_tf(rom, s); }, [rom](cplx s) { return eval_tf_derivative(rom, s); }};
}

namespace
{

double rel(double err, double ref) { return err / std::max(ref, 1e-300); }

double max_of(const std::vector<double>& v) { return v.empty() ? 0.0 : *std::max_element(v.begin(), v.end()); }

} // namespace

double InterpolationReport::max_right() const { return max_of(right); }
double InterpolationReport::max_left() const { return max_of(left); }
double InterpolationReport::max_hermite() const { return max_of(hermite); }

InterpolationReport verify_interpolation(const TransferOracle& truth, const ComplexRom& rom,
                                         const TangentialData& data)
{
    const ComplexRom& sys = rom;
    InterpolationReport report;
    for (Index i = 0; i < data.order(); ++i)
    {
        const cplx s        = data.sigma[static_cast<std::size_t>(i)];
        const cplx m        = data.mu[static_cast<std::size_t>(i)];
        const CVector gb    = truth.value(s) * data.b.col(i);
        const CVector gb_r  = eval_tf(sys, s) * data.b.col(i);
        report.right.push_back(rel((gb - gb_r).norm(), gb.norm()));

        const CMatrix cg   = data.c.row(i) * truth.value(m);
        const CMatrix cg_r = data.c.row(i) * eval_tf(sys, m);
        report.left.push_back(rel((cg - cg_r).norm(), cg.norm()));

        if (data.hermite)
        {
            const cplx d   = (data.c.row(i) * truth.derivative(s) * data.b.col(i))(0, 0);
            const cplx d_r = (data.c.row(i) * eval_tf_derivative(sys, s) * data.b.col(i))(0, 0);
            report.hermite.push_back(rel(std::abs(d - d_r), std::abs(d)));
        }
    }
    return report;
}

StateSpaceModel realify_rom(const ComplexRom& rom, const ConjugatePairing& pairing)
{
    const Index r = rom.order();
    std::vector<int> seen(static_cast<std::size_t>(r), 0);
    auto mark = [&](Index k) {
        require(k >= 0 && k < r, ErrorCode::InvalidArgument, "pairing index out of range");
        ++seen[static_cast<std::size_t>(k)];
    };
    for (const auto& [i, j] : pairing.pairs)
    {
        mark(i);
        mark(j);
    }
    for (Index k : pairing.reals)
        mark(k);

    // An empty pairing means "treat every state as self-conjugate".
    const bool implicit_reals = pairing.pairs.empty() && pairing.reals.empty();
    if (!implicit_reals)
        for (int count : seen)
            require(count == 1, ErrorCode::InvalidArgument, "pairing must list every state exactly once");

    CMatrix J    = CMatrix::Identity(r, r);
    CMatrix Jinv = CMatrix::Identity(r, r);
    for (const auto& [i, j] : pairing.pairs)
    {
        J(i, i) = 0.5;
        J(i, j) = cplx(0.0, -0.5);
        J(j, i) = 0.5;
        J(j, j) = cplx(0.0, 0.5);

        Jinv(i, i) = 1.0;
        Jinv(i, j) = 1.0;
        Jinv(j, i) = kJ;
        Jinv(j, j) = -kJ;
    }

    const CMatrix A = Jinv * rom.A * J;
    const CMatrix B = Jinv * rom.B;
    const CMatrix C = rom.C * J;

    auto check_real = [](const CMatrix& M, const char* name) {
        const double scale = std::max(1.0, max_abs(M));
        const double imag  = max_abs(M.imag());
        if (imag > kRealifyTol * scale)
            fail(ErrorCode::NotConjugateClosed, std::string("imaginary part of ") + name + " is " +
                                                    std::to_string(imag) + " after realification");
    };
    check_real(A, "A");
    check_real(B, "B");
    check_real(C, "C");
    return StateSpaceModel(A.real(), B.real(), C.real(), rom.domain);
}

} // namespace qlmor
