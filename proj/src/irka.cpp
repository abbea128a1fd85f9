#include "qlmor/irka.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "qlmor/error.hpp"

namespace qlmor
{

namespace
{

/// Poles whose imaginary part is below this (relative) are treated as real.
constexpr double kRealPoleTol = 1e-8;
/// Tolerance for pairing a pole with its conjugate partner.
constexpr double kPartnerTol = 1e-6;
/// Parallelism tolerance for surrogate alignment.
constexpr double kAlignTol = 1e-6;
/// Pole/point match tolerance for surrogate alignment.
constexpr double kMatchTol = 1e-6;
constexpr double kDegenerateTol = 1e-12;
constexpr std::uint64_t kRestartSalt = 0x9E3779B97F4A7C15ULL;

// Uniform doubles straight from the engine bits so that a seed reproduces the
// same shifts on every standard library.
class Rng
{
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    double uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    double normal()
    {
        double u1 = uniform();
        while (u1 <= 0.0)
            u1 = uniform();
        const double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
    }

private:
    std::mt19937_64 eng_;
};

CVector random_unit(Rng& rng, Index n, bool real)
{
    CVector v(n);
    for (Index i = 0; i < n; ++i)
        v(i) = real ? cplx(rng.normal(), 0.0) : cplx(rng.normal(), rng.normal());
    return v / v.norm();
}

struct Node
{
    cplx point;
    CVector b; // length m
    CVector c; // length p
};

bool less_point(cplx a, cplx b)
{
    if (a.real() != b.real())
        return a.real() < b.real();
    return std::abs(a.imag()) < std::abs(b.imag());
}

// Conjugate-closed, canonically ordered tangential data from raw nodes.
TangentialData canonical_data(std::vector<Node> nodes, Index m, Index p)
{
    std::vector<Node> reals;
    std::vector<Node> upper;
    std::vector<Node> lower;
    for (Node& nd : nodes)
    {
        const double scale = std::abs(nd.point);
        if (std::abs(nd.point.imag()) <= kRealPoleTol * scale)
        {
            // Rotate the phase of the rank-one residue so both factors are real.
            Index big = 0;
            nd.b.cwiseAbs().maxCoeff(&big);
            const cplx phase = nd.b(big) / std::abs(nd.b(big));
            nd.b = (nd.b / phase).real().cast<cplx>();
            nd.c = (nd.c * phase).real().cast<cplx>();
            nd.point = cplx(nd.point.real(), 0.0);
            reals.push_back(std::move(nd));
        }
        else if (nd.point.imag() > 0.0)
            upper.push_back(std::move(nd));
        else
            lower.push_back(std::move(nd));
    }
    require(upper.size() == lower.size(), ErrorCode::NotConjugateClosed,
            "ROM poles are not closed under conjugation");

    std::vector<bool> used(lower.size(), false);
    for (const Node& u : upper)
    {
        std::size_t best = lower.size();
        double dist      = std::numeric_limits<double>::infinity();
        for (std::size_t j = 0; j < lower.size(); ++j)
        {
            const double d = std::abs(lower[j].point - std::conj(u.point));
            if (!used[j] && d < dist)
            {
                dist = d;
                best = j;
            }
        }
        require(best < lower.size() && dist <= kPartnerTol * std::abs(u.point), ErrorCode::NotConjugateClosed,
                "ROM pole without a conjugate partner");
        used[best] = true;
    }

    std::vector<Node> heads;
    heads.reserve(upper.size() + reals.size());
    for (Node& u : upper)
        heads.push_back(std::move(u));
    for (Node& rn : reals)
        heads.push_back(std::move(rn));
    std::stable_sort(heads.begin(), heads.end(),
                     [](const Node& a, const Node& b) { return less_point(a.point, b.point); });

    const Index r = static_cast<Index>(nodes.size());
    std::vector<cplx> sigma;
    sigma.reserve(nodes.size());
    CMatrix B(m, r);
    CMatrix C(r, p);
    Index k = 0;
    for (const Node& h : heads)
    {
        sigma.push_back(h.point);
        B.col(k) = h.b;
        C.row(k) = h.c.transpose();
        ++k;
        if (h.point.imag() != 0.0)
        {
            sigma.push_back(std::conj(h.point));
            B.col(k) = h.b.conjugate();
            C.row(k) = h.c.conjugate().transpose();
            ++k;
        }
    }
    return TangentialData::hermite_data(std::move(sigma), std::move(B), std::move(C));
}

bool recoverable(ErrorCode code)
{
    switch (code)
    {
    case ErrorCode::SingularLoewner:
    case ErrorCode::DegenerateROM:
    case ErrorCode::RepeatedPoles:
    case ErrorCode::SingularMatrix:
    case ErrorCode::EigFailure:
    case ErrorCode::NotConjugateClosed:
        return true;
    default:
        return false;
    }
}

cplx mirror_point(cplx lambda, Domain domain)
{
    if (domain == Domain::Continuous)
        return {std::abs(lambda.real()), -lambda.imag()};
    const cplx s = 1.0 / lambda;
    return std::abs(s) > 1.0 ? s : std::conj(lambda);
}

std::vector<cplx> sorted(std::vector<cplx> v)
{
    std::sort(v.begin(), v.end(), [](cplx a, cplx b) {
        if (a.real() != b.real())
            return a.real() < b.real();
        return a.imag() < b.imag();
    });
    return v;
}

} // namespace

std::string_view to_string(IrkaTermination t) noexcept
{
    switch (t)
    {
    case IrkaTermination::ShiftsConverged: return "shifts_converged";
    case IrkaTermination::SurrogatePlateau: return "surrogate_plateau";
    case IrkaTermination::MaxIterations: return "max_iterations";
    case IrkaTermination::Failure: return "failure";
    }
    return "unknown";
}

void IrkaConfig::validate() const
{
    require(order >= 1, ErrorCode::InvalidArgument, "IRKA order must be positive");
    require(max_iterations >= 1, ErrorCode::InvalidArgument, "max_iterations must be positive");
    require(shift_tolerance > 0.0, ErrorCode::InvalidArgument, "shift_tolerance must be positive");
    require(surrogate_window >= 1, ErrorCode::InvalidArgument, "surrogate_window must be positive");
    require(surrogate_tolerance >= 0.0, ErrorCode::InvalidArgument, "surrogate_tolerance must be nonnegative");
    if (const auto* data = std::get_if<TangentialData>(&init))
    {
        data->check_shape();
        require(data->hermite, ErrorCode::InvalidArgument, "IRKA start data must be Hermite");
        require(data->order() == order, ErrorCode::DimensionMismatch, "IRKA start data has the wrong order");
        require(data->right_pairing().has_value() && data->left_pairing().has_value(),
                ErrorCode::NotConjugateClosed, "IRKA start data must be closed under conjugation");
    }
}

TangentialData init_shifts(Index r, std::uint64_t seed, Index m, Index p, Domain domain)
{
    require(r >= 1 && m >= 1 && p >= 1, ErrorCode::InvalidArgument, "init_shifts needs positive dimensions");
    Rng rng(seed);
    std::vector<Node> nodes;
    const bool discrete = domain == Domain::Discrete;
    for (Index k = 0; k < r / 2; ++k)
    {
        const double rho   = discrete ? std::exp(rng.uniform(std::log(1.1), std::log(10.0)))
                                      : std::exp(rng.uniform(std::log(0.1), std::log(100.0)));
        const double theta = discrete ? rng.uniform(0.05, std::numbers::pi - 0.05) : rng.uniform(0.05, 1.5);
        const cplx s       = std::polar(rho, theta);
        Node nd{s, random_unit(rng, m, false), random_unit(rng, p, false)};
        nodes.push_back(nd);
        nodes.push_back({std::conj(s), nd.b.conjugate(), nd.c.conjugate()});
    }
    if (r % 2 == 1)
    {
        const double rho = discrete ? std::exp(rng.uniform(std::log(1.1), std::log(10.0)))
                                    : std::exp(rng.uniform(std::log(0.1), std::log(100.0)));
        const double sgn = discrete && rng.uniform() < 0.5 ? -1.0 : 1.0;
        nodes.push_back({cplx(sgn * rho, 0.0), random_unit(rng, m, true), random_unit(rng, p, true)});
    }
    return canonical_data(std::move(nodes), m, p);
}

TangentialData mirror_data(const PoleResidueForm& modal, Domain domain)
{
    require(!modal.poles.empty(), ErrorCode::InvalidArgument, "empty modal form");
    const Index m = modal.right_factors.front().size();
    const Index p = modal.left_factors.front().size();
    std::vector<Node> nodes;
    nodes.reserve(modal.poles.size());
    for (std::size_t k = 0; k < modal.poles.size(); ++k)
    {
        const cplx lambda = modal.poles[k];
        if (domain == Domain::Continuous)
            require(std::abs(lambda.real()) >= kDegenerateTol * std::max(1.0, std::abs(lambda)),
                    ErrorCode::DegenerateROM, "ROM pole on the imaginary axis");
        else
            require(std::abs(std::abs(lambda) - 1.0) >= kDegenerateTol && std::abs(lambda) >= kDegenerateTol,
                    ErrorCode::DegenerateROM, "ROM pole on the unit circle or at the origin");

        CVector d       = modal.right_factors[k].conjugate();
        CVector l       = modal.left_factors[k];
        const double nb = d.norm();
        require(nb > 0.0, ErrorCode::DegenerateROM, "ROM mode with zero input direction");
        nodes.push_back({mirror_point(lambda, domain), d / nb, l * nb});
    }
    return canonical_data(std::move(nodes), m, p);
}

IrkaStep irka_step(const Sampler& sampler, const TangentialData& data, std::optional<cplx> delta_s,
                   bool experimental_discrete)
{
    const Domain domain = sampler.domain();
    require(domain == Domain::Continuous || experimental_discrete, ErrorCode::InvalidArgument,
            "discrete IRKA is experimental and must be enabled explicitly");
    const SampleSet samples = build_sample_set(sampler, data, delta_s);
    ComplexRom rom           = lf_rom(build_pencil(data, samples), domain);
    PoleResidueForm modal    = pole_residue(rom);
    TangentialData next      = mirror_data(modal, domain);
    return {std::move(rom), std::move(modal), std::move(next)};
}

double shift_change(const std::vector<cplx>& a, const std::vector<cplx>& b)
{
    require(a.size() == b.size(), ErrorCode::DimensionMismatch, "point sets differ in size");
    const auto sa = sorted(a);
    const auto sb = sorted(b);
    double worst  = 0.0;
    for (std::size_t i = 0; i < sa.size(); ++i)
        worst = std::max(worst, std::abs(sa[i] - sb[i]) / std::max(std::abs(sb[i]), 1e-300));
    return worst;
}

IrkaResult run_irka(const Sampler& sampler, const IrkaConfig& config)
{
    config.validate();
    const Domain domain = sampler.domain();
    require(domain == Domain::Continuous || config.experimental_discrete, ErrorCode::InvalidArgument,
            "discrete IRKA is experimental and must be enabled explicitly");
    if (const auto* exact = dynamic_cast<const ExactSampler*>(&sampler))
        require(is_stable(exact->model()), ErrorCode::UnstableModel, "IRKA needs a stable full-order model");

    const Index m = sampler.inputs();
    const Index p = sampler.outputs();
    const std::optional<cplx> ds =
        sampler.has_exact_derivative() && config.prefer_exact_derivative ? std::nullopt : config.delta_s;

    std::uint64_t seed = 0;
    TangentialData data;
    if (const auto* start = std::get_if<TangentialData>(&config.init))
        data = *start;
    else
    {
        seed = std::get<RandomInit>(config.init).seed;
        data = init_shifts(config.order, seed, m, p, domain);
    }

    IrkaResult result;
    IrkaTrace& trace = result.trace;
    std::optional<SampleSet> samples;
    std::vector<double> surrogates;

    for (int it = 1; it <= config.max_iterations; ++it)
    {
        const auto t0 = std::chrono::steady_clock::now();
        try
        {
            if (!samples)
                samples = build_sample_set(sampler, data, ds);
            ComplexRom rom = lf_rom(build_pencil(data, *samples), domain);
            TangentialData next = mirror_data(pole_residue(rom), domain);
            SampleSet next_samples = build_sample_set(sampler, next, ds);

            IrkaIteration rec;
            rec.index        = it;
            rec.shifts       = data.sigma;
            rec.shift_change = shift_change(data.sigma, next.sigma);
            if (is_stable(rom))
                rec.surrogate = error_surrogate(next_samples, next, rom, SurrogateSide::Right);

            const auto pairing = data.right_pairing();
            require(pairing.has_value(), ErrorCode::NotConjugateClosed, "IRKA data lost conjugate closure");
            result.rom         = realify_rom(rom, *pairing);
            result.complex_rom = std::move(rom);
            result.data        = data;

            rec.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
            trace.iterations.push_back(rec);

            if (rec.shift_change < config.shift_tolerance)
            {
                trace.termination = IrkaTermination::ShiftsConverged;
                return result;
            }
            surrogates.push_back(rec.surrogate.value_or(std::numeric_limits<double>::quiet_NaN()));
            const std::size_t w = static_cast<std::size_t>(config.surrogate_window);
            if (config.surrogate_tolerance > 0.0 && surrogates.size() > w)
            {
                const double now    = surrogates.back();
                const double before = surrogates[surrogates.size() - 1 - w];
                if (std::isfinite(now) && std::isfinite(before) &&
                    std::abs(now - before) <= config.surrogate_tolerance * std::abs(now))
                {
                    trace.termination = IrkaTermination::SurrogatePlateau;
                    return result;
                }
            }
            data    = std::move(next);
            samples = std::move(next_samples);
        }
        catch (const Error& e)
        {
            if (!recoverable(e.code()) || trace.restarts > 0 || !std::holds_alternative<RandomInit>(config.init))
            {
                trace.termination    = IrkaTermination::Failure;
                trace.failure_detail = e.what();
                return result;
            }
            ++trace.restarts;
            data = init_shifts(config.order, seed ^ kRestartSalt, m, p, domain);
            samples.reset();
            surrogates.clear();
        }
    }
    trace.termination = IrkaTermination::MaxIterations;
    return result;
}

double error_surrogate(const SampleSet& samples, const TangentialData& data, const ComplexRom& rom,
                       SurrogateSide side)
{
    samples.check_against(data);
    const PoleResidueForm modal = pole_residue(rom);
    const std::vector<cplx>& pts = side == SurrogateSide::Right ? data.sigma : data.mu;
    require(pts.size() == modal.poles.size(), ErrorCode::SurrogateMisaligned,
            "surrogate needs one interpolation point per ROM pole");

    std::vector<bool> used(modal.poles.size(), false);
    cplx total{0.0, 0.0};
    for (std::size_t i = 0; i < pts.size(); ++i)
    {
        const cplx s    = pts[i];
        std::size_t hit = modal.poles.size();
        for (std::size_t k = 0; k < modal.poles.size(); ++k)
        {
            const cplx target = rom.domain == Domain::Continuous ? -modal.poles[k] : 1.0 / modal.poles[k];
            if (!used[k] && std::abs(target - s) <= kMatchTol * (1.0 + std::abs(s)))
            {
                hit = k;
                break;
            }
        }
        require(hit < modal.poles.size(), ErrorCode::SurrogateMisaligned,
                "interpolation point is not a mirrored ROM pole");
        used[hit] = true;

        const CVector d = modal.right_factors[hit].conjugate();
        const CVector& l = modal.left_factors[hit];
        cplx term;
        const Index ii = static_cast<Index>(i);
        if (side == SurrogateSide::Right)
        {
            const CVector bi  = data.b.col(ii);
            const cplx alpha  = d.dot(bi) / d.squaredNorm();
            require((bi - alpha * d).norm() <= kAlignTol * bi.norm() && std::abs(alpha) > 0.0,
                    ErrorCode::SurrogateMisaligned, "right direction is not a residue direction");
            term = (l.transpose() * samples.right.col(ii))(0) / alpha;
        }
        else
        {
            const CVector ci = data.c.row(ii).transpose();
            const cplx beta  = l.dot(ci) / l.squaredNorm();
            require((ci - beta * l).norm() <= kAlignTol * ci.norm() && std::abs(beta) > 0.0,
                    ErrorCode::SurrogateMisaligned, "left direction is not a residue direction");
            term = (samples.left.row(ii) * d)(0) / beta;
        }
        if (rom.domain == Domain::Discrete)
            term *= s;
        total += term;
    }
    const double nrm = h2_norm(rom);
    return 2.0 * total.real() - nrm * nrm;
}

double OptimalityReport::max() const
{
    double worst = 0.0;
    for (const auto* v : {&right, &left, &hermite})
        for (double x : *v)
            worst = std::max(worst, x);
    return worst;
}

OptimalityReport verify_h2_optimality(const TransferOracle& truth, const ComplexRom& rom)
{
    require(is_stable(rom), ErrorCode::UnstableROM, "optimality conditions need a stable ROM");
    const PoleResidueForm modal = pole_residue(rom);
    const TransferOracle approx = make_oracle(rom);
    auto rel = [](double err, double ref) { return err / std::max(ref, 1e-300); };

    OptimalityReport rep;
    for (std::size_t k = 0; k < modal.poles.size(); ++k)
    {
        const cplx s = rom.domain == Domain::Continuous ? -modal.poles[k] : 1.0 / modal.poles[k];
        const CVector d = modal.right_factors[k].conjugate();
        const CVector l = modal.left_factors[k];
        const CMatrix G  = truth.value(s);
        const CMatrix Gr = approx.value(s);
        const CMatrix D  = truth.derivative(s);
        const CMatrix Dr = approx.derivative(s);

        rep.right.push_back(rel((G * d - Gr * d).norm(), (G * d).norm()));
        rep.left.push_back(rel((l.transpose() * G - l.transpose() * Gr).norm(), (l.transpose() * G).norm()));
        const cplx h  = (l.transpose() * D * d)(0);
        const cplx hr = (l.transpose() * Dr * d)(0);
        rep.hermite.push_back(rel(std::abs(h - hr), std::abs(h)));
    }
    return rep;
}

OptimalityReport verify_h2_optimality(const TransferOracle& truth, const StateSpaceModel& rom)
{
    return verify_h2_optimality(truth, to_complex(rom));
}

} // namespace qlmor
