#include "qlmor/cli.hpp"

#include <chrono>
#include <cstdio>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "qlmor/io.hpp"
#include "qlmor/irka.hpp"
#include "qlmor/pork.hpp"
#include "qlmor/repro.hpp"
#include "qlmor/sampling.hpp"

namespace qlmor::cli
{

using nlohmann::json;

namespace
{

using Clock = std::chrono::steady_clock;

struct UsageError : std::runtime_error
{
    using std::runtime_error::runtime_error;
};

cplx parse_cplx(const std::string& s)
{
    const auto comma = s.find(',');
    try
    {
        std::size_t used = 0;
        if (comma == std::string::npos)
        {
            const double re = std::stod(s, &used);
            if (used != s.size())
                throw std::invalid_argument(s);
            return {re, 0.0};
        }
        const std::string a = s.substr(0, comma);
        const std::string b = s.substr(comma + 1);
        const double re     = std::stod(a, &used);
        if (used != a.size())
            throw std::invalid_argument(s);
        const double im = std::stod(b, &used);
        if (used != b.size())
            throw std::invalid_argument(s);
        return {re, im};
    }
    catch (const std::logic_error&)
    {
        throw UsageError("expected a complex number 're,im', got '" + s + "'");
    }
}

std::string sampler_label(const Sampler& s)
{
    if (s.domain() == Domain::Continuous)
        return std::string(s.name());
    return s.name() == "fqlf" ? "dt-fqlf" : s.name() == "tqlf" ? "dt-impulse" : std::string(s.name());
}

std::unique_ptr<Sampler> make_sampler(const std::string& kind, const std::string& path)
{
    if (kind == "exact")
        return std::make_unique<ExactSampler>(io::load_model(path));
    if (kind == "fqlf")
        return std::make_unique<FqlfSampler>(io::load_frd(path));
    if (kind == "tqlf")
        return std::make_unique<TqlfSampler>(io::load_ird(path));
    // auto: pick the quadrature matching the dataset kind
    io::Dataset d = io::load_dataset(path);
    if (const auto* frd = std::get_if<FrequencyResponseData>(&d))
        return std::make_unique<FqlfSampler>(*frd);
    return std::make_unique<TqlfSampler>(std::get<ImpulseResponseData>(d));
}

std::optional<cplx> derivative_step(const Sampler& s, cplx delta_s)
{
    if (s.has_exact_derivative())
        return std::nullopt;
    return delta_s;
}

double rel(double err, double ref) { return err / std::max(ref, 1e-300); }

json residual_summary(const ComplexRom& rom, const TangentialData& data, const SampleSet& s, bool right, bool left)
{
    json j = json::object();
    if (right)
    {
        double worst = 0.0;
        for (Index i = 0; i < data.order(); ++i)
        {
            const CVector got = eval_tf(rom, data.sigma[static_cast<std::size_t>(i)]) * data.b.col(i);
            worst = std::max(worst, rel((got - s.right.col(i)).norm(), s.right.col(i).norm()));
        }
        j["max_right"] = worst;
    }
    if (left)
    {
        double worst = 0.0;
        for (Index i = 0; i < data.order(); ++i)
        {
            const Eigen::RowVectorXcd got = data.c.row(i) * eval_tf(rom, data.mu[static_cast<std::size_t>(i)]);
            worst = std::max(worst, rel((got - s.left.row(i)).norm(), s.left.row(i).norm()));
        }
        j["max_left"] = worst;
    }
    if (right && left && data.hermite && s.hermite_diag)
    {
        double worst = 0.0;
        for (Index i = 0; i < data.order(); ++i)
        {
            const cplx got  = (data.c.row(i) * eval_tf_derivative(rom, data.sigma[static_cast<std::size_t>(i)]) *
                              data.b.col(i))(0);
            const cplx want = (data.c.row(i) * s.hermite_diag->col(i))(0);
            worst           = std::max(worst, rel(std::abs(got - want), std::abs(want)));
        }
        j["max_hermite"] = worst;
    }
    return j;
}

json poles_json(const ComplexRom& rom)
{
    json a = json::array();
    auto poles = eig_dense(rom.A).values;
    std::vector<cplx> v(poles.data(), poles.data() + poles.size());
    std::sort(v.begin(), v.end(), [](cplx x, cplx y) {
        return x.real() != y.real() ? x.real() < y.real() : x.imag() < y.imag();
    });
    for (cplx z : v)
        a.push_back(io::cplx_to_json(z));
    return a;
}

// --------------------------------------------------------------- commands

struct SynthArgs
{
    std::string model, kind = "frd", out;
    double from = 0.0, to = 0.0;
    int points  = 0;
};

int run_synth(const SynthArgs& a, std::ostream& out)
{
    const StateSpaceModel model = io::load_model(a.model);
    const auto kind = a.kind == "frd" ? io::DatasetKind::Frd : io::DatasetKind::Ird;
    const io::Dataset d = io::synthesize_dataset(model, kind, {a.from, a.to, a.points, model.domain});
    io::save_dataset(a.out, d);
    out << "wrote " << a.points << " " << a.kind << " points to " << a.out << "\n";
    return kOk;
}

struct SampleArgs
{
    std::string data, points, out, sampler = "auto", delta_s = "1e-4,1e-4";
};

int run_sample(const SampleArgs& a, std::ostream& out)
{
    const cplx ds = parse_cplx(a.delta_s);
    const auto sampler = make_sampler(a.sampler, a.data);
    const TangentialData data = io::load_points(a.points);
    const SampleSet s = build_sample_set(*sampler, data, derivative_step(*sampler, ds));
    io::save_samples(a.out, s, data, sampler_label(*sampler));
    out << "wrote " << data.order() << " samples to " << a.out << "\n";
    return kOk;
}

struct ReduceArgs
{
    std::string method, sampler, data, points, out, report, truth, delta_s = "1e-4,1e-4";
    Index order        = 0;
    std::uint64_t seed = 0;
    int max_iterations = 50;
    double shift_tolerance     = 1e-6;
    int surrogate_window       = 3;
    double surrogate_tolerance = 1e-8;
    bool timings               = false;
    bool experimental_discrete = false;
};

int run_reduce(const ReduceArgs& a, std::ostream& out)
{
    const auto t_start = Clock::now();
    const cplx ds      = parse_cplx(a.delta_s);
    const auto sampler = make_sampler(a.sampler, a.data);
    const Domain domain = sampler->domain();
    if (const auto* ex = dynamic_cast<const ExactSampler*>(sampler.get()))
        require(is_stable(ex->model()), ErrorCode::UnstableModel, "the model to reduce is unstable");

    json report;
    report["format"]  = "qlmor-report";
    report["version"] = io::kReportVersion;
    report["method"]  = a.method;
    report["sampler"] = sampler_label(*sampler);
    report["domain"]  = domain == Domain::Continuous ? "continuous" : "discrete";
    json cfg;
    cfg["order"]   = a.order;
    cfg["seed"]    = a.seed;
    cfg["delta_s"] = io::cplx_to_json(ds);
    cfg["points"]  = a.points.empty() ? json(nullptr) : json(a.points);
    if (a.method == "irka")
    {
        cfg["max_iterations"]      = a.max_iterations;
        cfg["shift_tolerance"]     = a.shift_tolerance;
        cfg["surrogate_window"]    = a.surrogate_window;
        cfg["surrogate_tolerance"] = a.surrogate_tolerance;
        cfg["experimental_discrete"] = a.experimental_discrete;
    }
    report["config"] = cfg;

    std::optional<TangentialData> user_points;
    if (!a.points.empty())
        user_points = io::load_points(a.points);
    Index order = a.order;
    if (user_points)
    {
        if (order == 0)
            order = user_points->order();
        require(order == user_points->order(), ErrorCode::DimensionMismatch,
                "--order differs from the number of points in --points");
    }
    if (order < 1)
        throw UsageError("--order is required when no --points file is given");

    std::optional<ComplexRom> rom;
    std::optional<StateSpaceModel> real_rom;
    int status = kOk;

    auto try_realify = [&](const std::optional<ConjugatePairing>& pairing) {
        if (!pairing)
            return;
        try
        {
            real_rom = realify_rom(*rom, *pairing);
        }
        catch (const Error& e)
        {
            if (e.code() != ErrorCode::NotConjugateClosed)
                throw;
        }
    };

    if (a.method == "irka")
    {
        IrkaConfig config;
        config.order               = order;
        config.max_iterations      = a.max_iterations;
        config.shift_tolerance     = a.shift_tolerance;
        config.surrogate_window    = a.surrogate_window;
        config.surrogate_tolerance = a.surrogate_tolerance;
        config.delta_s             = ds;
        config.experimental_discrete = a.experimental_discrete;
        if (user_points)
            config.init = *user_points;
        else
            config.init = RandomInit{a.seed};
        const IrkaResult res = run_irka(*sampler, config);
        rom      = res.complex_rom;
        real_rom = res.rom;

        json trace;
        trace["termination"] = std::string(to_string(res.trace.termination));
        trace["restarts"]    = res.trace.restarts;
        if (!res.trace.failure_detail.empty())
            trace["failure_detail"] = res.trace.failure_detail;
        json its     = json::array();
        json surrogs = json::array();
        for (const IrkaIteration& it : res.trace.iterations)
        {
            json r;
            r["index"] = it.index;
            json sh    = json::array();
            for (cplx s : it.shifts)
                sh.push_back(io::cplx_to_json(s));
            r["shifts"]       = sh;
            r["shift_change"] = it.shift_change;
            r["surrogate"]    = it.surrogate ? json(*it.surrogate) : json(nullptr);
            if (a.timings)
                r["wall_seconds"] = it.wall_seconds;
            its.push_back(r);
            surrogs.push_back(r["surrogate"]);
        }
        trace["iterations"] = its;
        report["irka"]      = trace;
        report["surrogate"] = surrogs;
        if (rom)
        {
            const SampleSet s = build_sample_set(*sampler, res.data, derivative_step(*sampler, ds));
            report["residuals"] = residual_summary(*rom, res.data, s, true, true);
        }
        if (res.trace.termination == IrkaTermination::Failure)
            status = kNumerical;
    }
    else
    {
        const TangentialData data =
            user_points ? *user_points : init_shifts(order, a.seed, sampler->inputs(), sampler->outputs(), domain);
        data.check_shape();
        data.check_points(domain);
        if (a.method == "lf")
        {
            const SampleSet s = build_sample_set(*sampler, data, derivative_step(*sampler, ds));
            rom = lf_rom(build_pencil(data, s), domain);
            report["residuals"] = residual_summary(*rom, data, s, true, true);
            try_realify(data.right_pairing());
        }
        else if (a.method == "pork-out" || a.method == "pork-in")
        {
            require(domain == Domain::Continuous, ErrorCode::InvalidArgument, "PORK needs continuous-time data");
            SampleSet s;
            const bool out_type = a.method == "pork-out";
            s.right = sampler->right_samples(data.sigma, data.b);
            s.left  = sampler->left_samples(data.mu, data.c);
            rom     = out_type ? pork_output(s.right, data.sigma, data.b) : pork_input(s.left, data.mu, data.c);
            report["residuals"] = residual_summary(*rom, data, s, out_type, !out_type);
            try_realify(out_type ? data.right_pairing() : data.left_pairing());
        }
        else
            throw UsageError("unknown method '" + a.method + "'");
        report["points"] = io::points_to_json(data);
    }

    json romj = json::object();
    if (rom)
    {
        romj["path"]      = a.out;
        romj["order"]     = rom->order();
        romj["real"]      = real_rom.has_value();
        romj["stable"]    = is_stable(*rom);
        romj["poles"]     = poles_json(*rom);
        if (real_rom)
            io::save_model(a.out, *real_rom);
        else
            io::save_model(a.out, *rom);
        if (romj["stable"].get<bool>())
            romj["h2_norm"] = h2_norm(*rom);
    }
    report["rom"] = romj;

    if (!a.truth.empty() && rom)
    {
        const StateSpaceModel truth = io::load_model(a.truth);
        json t;
        if (is_stable(*rom))
        {
            const double e = h2_error(truth, *rom);
            t["h2_error"]          = e;
            t["h2_error_relative"] = e / h2_norm(truth);
        }
        else
            t["h2_error"] = nullptr;
        report["truth"] = t;
    }
    if (a.timings)
        report["timings"] = {{"total_seconds", std::chrono::duration<double>(Clock::now() - t_start).count()}};

    if (!a.report.empty())
        io::save_report(a.report, report);
    if (rom)
        out << "wrote order-" << rom->order() << (real_rom ? " real" : " complex") << " ROM to " << a.out << "\n";
    return status;
}

struct EvalArgs
{
    std::string truth, rom;
};

int run_eval(const EvalArgs& a, std::ostream& out)
{
    const StateSpaceModel truth = io::load_model(a.truth);
    const ComplexRom rom        = io::load_complex_model(a.rom);
    const double err            = h2_error(truth, rom);
    const double nrm            = h2_norm(truth);
    char line[128];
    std::snprintf(line, sizeof line, "h2_error %.17g\nh2_error_relative %.17g\n", err, err / nrm);
    out << line;
    return kOk;
}

int run_repro(int example, std::ostream& out)
{
    const repro::Result r = example == 1 ? repro::example1() : repro::example2();
    repro::print(r, out);
    out << (r.pass() ? "all checks passed\n" : "some checks FAILED\n");
    return r.pass() ? kOk : kNumerical;
}

} // namespace

int exit_code_for(ErrorCode code) noexcept
{
    switch (code)
    {
    case ErrorCode::InvalidArgument:
        return kUsage;
    case ErrorCode::ParseError:
    case ErrorCode::DimensionMismatch:
    case ErrorCode::IoError:
    case ErrorCode::EmptyGrid:
    case ErrorCode::NegativeTime:
    case ErrorCode::NonPositiveRealPart:
    case ErrorCode::PointInsideUnitDisk:
    case ErrorCode::MissingDeltaS:
        return kData;
    default:
        return kNumerical;
    }
}

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Data-driven H2 model reduction from frequency or impulse response data", "qlmor"};
    app.require_subcommand(1);

    SynthArgs synth;
    auto* c_synth = app.add_subcommand("synth", "Tabulate a model's frequency or impulse response");
    c_synth->add_option("--model", synth.model, "model JSON")->required();
    c_synth->add_option("--kind", synth.kind, "frd or ird")->check(CLI::IsMember({"frd", "ird"}));
    c_synth->add_option("--from", synth.from, "first grid value");
    c_synth->add_option("--to", synth.to, "last grid value")->required();
    c_synth->add_option("--points", synth.points, "number of grid points")->required()->check(CLI::PositiveNumber);
    c_synth->add_option("--out", synth.out, "dataset CSV")->required();

    SampleArgs sample;
    auto* c_sample = app.add_subcommand("sample", "Sample the transfer function offline at given points");
    c_sample->add_option("--data", sample.data, "dataset CSV, or model JSON with --sampler exact")->required();
    c_sample->add_option("--points", sample.points, "points JSON")->required();
    c_sample->add_option("--out", sample.out, "sample set JSON")->required();
    c_sample->add_option("--sampler", sample.sampler, "auto, exact, fqlf or tqlf")
        ->check(CLI::IsMember({"auto", "exact", "fqlf", "tqlf"}));
    c_sample->add_option("--delta-s", sample.delta_s, "finite-difference step 're,im'");

    ReduceArgs reduce;
    auto* c_reduce = app.add_subcommand("reduce", "Build a reduced-order model");
    c_reduce->add_option("--method", reduce.method, "lf, pork-out, pork-in or irka")
        ->required()
        ->check(CLI::IsMember({"lf", "pork-out", "pork-in", "irka"}));
    c_reduce->add_option("--sampler", reduce.sampler, "exact, fqlf or tqlf")
        ->required()
        ->check(CLI::IsMember({"exact", "fqlf", "tqlf"}));
    c_reduce->add_option("--data", reduce.data, "dataset CSV, or model JSON for --sampler exact")->required();
    c_reduce->add_option("--order", reduce.order, "reduced order r");
    c_reduce->add_option("--seed", reduce.seed, "seed for random interpolation data");
    c_reduce->add_option("--points", reduce.points, "points JSON (overrides random data)");
    c_reduce->add_option("--out", reduce.out, "ROM JSON")->required();
    c_reduce->add_option("--report", reduce.report, "report JSON");
    c_reduce->add_option("--truth", reduce.truth, "model JSON used to add the true H2 error to the report");
    c_reduce->add_option("--delta-s", reduce.delta_s, "finite-difference step 're,im'");
    c_reduce->add_option("--max-iterations", reduce.max_iterations, "IRKA iteration cap")
        ->check(CLI::PositiveNumber);
    c_reduce->add_option("--shift-tolerance", reduce.shift_tolerance, "IRKA shift-change tolerance");
    c_reduce->add_option("--surrogate-window", reduce.surrogate_window, "IRKA plateau window")
        ->check(CLI::PositiveNumber);
    c_reduce->add_option("--surrogate-tolerance", reduce.surrogate_tolerance, "IRKA plateau tolerance (0: off)");
    c_reduce->add_flag("--timings", reduce.timings, "record wall-clock times in the report");
    c_reduce->add_flag("--experimental-discrete", reduce.experimental_discrete,
                       "allow IRKA on discrete-time data");

    EvalArgs evala;
    auto* c_eval = app.add_subcommand("eval", "H2 error of a ROM against a model");
    c_eval->add_option("--truth", evala.truth, "model JSON")->required();
    c_eval->add_option("--rom", evala.rom, "ROM JSON")->required();

    int example     = 1;
    auto* c_repro   = app.add_subcommand("repro", "Reproduce the bundled examples");
    c_repro->add_option("--example", example, "1 or 2")->required()->check(CLI::IsMember({1, 2}));

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError& e)
    {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try
    {
        if (*c_synth)
            return run_synth(synth, out);
        if (*c_sample)
            return run_sample(sample, out);
        if (*c_reduce)
            return run_reduce(reduce, out);
        if (*c_eval)
            return run_eval(evala, out);
        return run_repro(example, out);
    }
    catch (const UsageError& e)
    {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }
    catch (const Error& e)
    {
        err << "error: " << e.what() << "\n";
        return exit_code_for(e.code());
    }
    catch (const std::exception& e)
    {
        err << "error: " << e.what() << "\n";
        return kNumerical;
    }
}

} // namespace qlmor::cli
