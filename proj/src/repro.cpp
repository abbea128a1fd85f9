#include "qlmor/repro.hpp"

#include <chrono>
#include <cstdio>

#include "qlmor/fixtures.hpp"
#include "qlmor/io.hpp"
#include "qlmor/sampling.hpp"

namespace qlmor::repro
{

namespace
{

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

double max_dev(const RMatrix& got, const RMatrix& want) { return (got - want).cwiseAbs().maxCoeff(); }

double max_dev(const CVector& got, const CVector& want)
{
    // Componentwise on real and imaginary parts, as printed.
    return std::max((got.real() - want.real()).cwiseAbs().maxCoeff(),
                    (got.imag() - want.imag()).cwiseAbs().maxCoeff());
}

StateSpaceModel lf_from(const Sampler& sampler, const TangentialData& data)
{
    const SampleSet samples = build_sample_set(sampler, data, std::nullopt);
    return realify_rom(lf_rom(build_pencil(data, samples)), *data.right_pairing());
}

void add_rom(Result& out, const std::string& label, const StateSpaceModel& rom, const fixtures::PrintedRom& ref,
             double tol, double seconds)
{
    out.checks.push_back({label + " A", max_dev(rom.A, ref.A), tol, seconds});
    out.checks.push_back({label + " B", max_dev(rom.B, ref.B), tol, seconds});
    out.checks.push_back({label + " C", max_dev(rom.C, ref.C), tol, seconds});
}

// The printed derivative values are C (sI - A)^{-2} B b, the negated derivative.
void add_derivatives(Result& out, const std::string& label, const Sampler& sampler, const TangentialData& data,
                     const fixtures::PrintedDerivatives& ref, double tol, bool exact)
{
    const auto t0 = Clock::now();
    const std::vector<cplx> pts{data.sigma[0], data.sigma[2]};
    CMatrix b(data.b.rows(), 2);
    b << data.b.col(0), data.b.col(2);
    CMatrix d(sampler.outputs(), 2);
    if (exact)
        for (Index i = 0; i < 2; ++i)
            d.col(i) = sampler.transfer_derivative(pts[static_cast<std::size_t>(i)]) * b.col(i);
    else
        d = derivative_samples(sampler, pts, b, kDefaultDeltaS);
    const double secs = since(t0);
    out.checks.push_back({label + " -G'(sigma1)b1", max_dev(CVector(-d.col(0)), ref.at_sigma1), tol, secs});
    out.checks.push_back({label + " -G'(sigma3)b3", max_dev(CVector(-d.col(1)), ref.at_sigma3), tol, secs});
}

} // namespace

bool Result::pass() const
{
    for (const Check& c : checks)
        if (!c.pass())
            return false;
    return true;
}

Result example1()
{
    Result out;
    const StateSpaceModel model = fixtures::example1_model();
    const TangentialData data   = fixtures::example1_data();
    const ExactSampler exact(model);

    auto t0 = Clock::now();
    const StateSpaceModel lf = lf_from(exact, data);
    add_rom(out, "LF", lf, fixtures::example1_lf_rom(), 5e-4, since(t0));

    t0 = Clock::now();
    const auto frd = std::get<FrequencyResponseData>(io::synthesize_dataset(
        model, io::DatasetKind::Frd, {0.0, fixtures::kExample1OmegaMax, fixtures::kExample1Points}));
    const FqlfSampler fqlf(frd);
    const StateSpaceModel fq = lf_from(fqlf, data);
    add_rom(out, "FQLF", fq, fixtures::example1_fqlf_rom(), 2e-3, since(t0));

    add_derivatives(out, "exact", exact, data, fixtures::example1_exact_derivatives(), 5e-5, true);
    add_derivatives(out, "FQLF", fqlf, data, fixtures::example1_fqlf_derivatives(), 5e-4, false);
    return out;
}

Result example2()
{
    Result out;
    const StateSpaceModel model = fixtures::example1_model();
    const TangentialData data   = fixtures::example1_data();

    const auto t0 = Clock::now();
    const auto ird = std::get<ImpulseResponseData>(io::synthesize_dataset(
        model, io::DatasetKind::Ird, {0.0, fixtures::kExample2TimeMax, fixtures::kExample2Points}));
    const TqlfSampler tqlf(ird);
    const StateSpaceModel tq = lf_from(tqlf, data);
    add_rom(out, "TQLF", tq, fixtures::example2_tqlf_rom(), 2e-3, since(t0));

    add_derivatives(out, "TQLF", tqlf, data, fixtures::example2_tqlf_derivatives(), 5e-4, false);
    return out;
}

void print(const Result& result, std::ostream& out)
{
    char line[160];
    std::snprintf(line, sizeof line, "%-22s %12s %10s %9s  %s\n", "quantity", "max|dev|", "tol", "time[s]", "status");
    out << line;
    for (const Check& c : result.checks)
    {
        std::snprintf(line, sizeof line, "%-22s %12.3e %10.1e %9.3f  %s\n", c.name.c_str(), c.deviation, c.tolerance,
                      c.seconds, c.pass() ? "ok" : "FAIL");
        out << line;
    }
}

} // namespace qlmor::repro
