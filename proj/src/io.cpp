#include "qlmor/io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

#include "qlmor/error.hpp"

namespace qlmor::io
{

using nlohmann::json;

namespace
{

constexpr const char* kDatasetMagic = "# qlmor-dataset v1";
constexpr const char* kColumns      = "grid,out,in,re,im";

[[noreturn]] void parse_fail(const std::string& origin, std::size_t line, std::size_t col, const std::string& msg)
{
    fail(ErrorCode::ParseError, origin + ":" + std::to_string(line) + ":" + std::to_string(col) + ": " + msg);
}

std::string domain_name(Domain d) { return d == Domain::Continuous ? "continuous" : "discrete"; }

Domain parse_domain(const std::string& s, const std::string& origin)
{
    if (s == "continuous")
        return Domain::Continuous;
    if (s == "discrete")
        return Domain::Discrete;
    fail(ErrorCode::ParseError, origin + ": unknown domain '" + s + "'");
}

void append_double(std::string& out, double x)
{
    char buf[40];
    const int n = std::snprintf(buf, sizeof buf, "%.17g", x);
    out.append(buf, static_cast<std::size_t>(n));
}

struct Field
{
    std::string_view text;
    std::size_t col;
};

std::vector<Field> split_csv(std::string_view line)
{
    std::vector<Field> out;
    std::size_t start = 0;
    while (true)
    {
        const std::size_t comma = line.find(',', start);
        const std::size_t end   = comma == std::string_view::npos ? line.size() : comma;
        std::string_view f      = line.substr(start, end - start);
        std::size_t lead        = 0;
        while (lead < f.size() && (f[lead] == ' ' || f[lead] == '\t'))
            ++lead;
        f.remove_prefix(lead);
        while (!f.empty() && (f.back() == ' ' || f.back() == '\t' || f.back() == '\r'))
            f.remove_suffix(1);
        out.push_back({f, start + lead + 1});
        if (comma == std::string_view::npos)
            break;
        start = comma + 1;
    }
    return out;
}

template <class T>
T parse_number(const Field& f, const std::string& origin, std::size_t line)
{
    T value{};
    const char* first = f.text.data();
    const char* last  = first + f.text.size();
    if (!f.text.empty() && *first == '+')
        ++first;
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last || f.text.empty())
        parse_fail(origin, line, f.col, "malformed number '" + std::string(f.text) + "'");
    if constexpr (std::is_floating_point_v<T>)
        if (!std::isfinite(value))
            parse_fail(origin, line, f.col, "non-finite value");
    return value;
}

std::map<std::string, std::string> parse_header(std::string_view line, const std::string& origin)
{
    std::map<std::string, std::string> kv;
    if (line.size() < 2 || line[0] != '#')
        parse_fail(origin, 2, 1, "expected '# key=value ...' header");
    std::istringstream in{std::string(line.substr(1))};
    std::string tok;
    while (in >> tok)
    {
        const auto eq = tok.find('=');
        if (eq == std::string::npos || eq == 0)
            parse_fail(origin, 2, 1, "malformed header token '" + tok + "'");
        kv[tok.substr(0, eq)] = tok.substr(eq + 1);
    }
    for (const char* key : {"domain", "kind", "p", "m", "points", "spacing"})
        if (!kv.count(key))
            parse_fail(origin, 2, 1, std::string("header is missing '") + key + "'");
    return kv;
}

long long header_int(const std::map<std::string, std::string>& kv, const char* key, const std::string& origin)
{
    const std::string& s = kv.at(key);
    Field f{s, 1};
    const long long v = parse_number<long long>(f, origin, 2);
    if (v < 0)
        parse_fail(origin, 2, 1, std::string("negative '") + key + "'");
    return v;
}

std::vector<double> linspace(double a, double b, int n)
{
    std::vector<double> x(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k)
        x[static_cast<std::size_t>(k)] = n == 1 ? a : a + (b - a) * k / (n - 1);
    return x;
}

std::ifstream open_in(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    require(in.good(), ErrorCode::IoError, "cannot open '" + path.string() + "'");
    return in;
}

std::string read_text(const std::filesystem::path& path)
{
    auto in = open_in(path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void check_format(const json& j, const char* format, const std::string& origin)
{
    require(j.is_object(), ErrorCode::ParseError, origin + ": expected a JSON object");
    require(j.contains("format") && j.at("format") == format, ErrorCode::ParseError,
            origin + ": expected \"format\": \"" + format + "\"");
    require(j.contains("version") && j.at("version") == 1, ErrorCode::ParseError,
            origin + ": unsupported version");
}

std::vector<double> flat(const json& j, const char* key, std::size_t expected)
{
    require(j.contains(key), ErrorCode::ParseError, std::string("missing array '") + key + "'");
    const json& a = j.at(key);
    require(a.is_array(), ErrorCode::ParseError, std::string("'") + key + "' must be an array");
    require(a.size() == expected, ErrorCode::DimensionMismatch,
            std::string("'") + key + "' has " + std::to_string(a.size()) + " entries, expected " +
                std::to_string(expected));
    std::vector<double> out;
    out.reserve(expected);
    for (const json& v : a)
    {
        require(v.is_number(), ErrorCode::ParseError, std::string("non-numeric entry in '") + key + "'");
        out.push_back(v.get<double>());
    }
    return out;
}

CMatrix shaped(const std::vector<double>& re, const std::vector<double>* im, Index rows, Index cols)
{
    CMatrix M(rows, cols);
    for (Index i = 0; i < rows; ++i)
        for (Index k = 0; k < cols; ++k)
        {
            const auto idx = static_cast<std::size_t>(i * cols + k);
            M(i, k)        = cplx(re[idx], im ? (*im)[idx] : 0.0);
        }
    return M;
}

json flat_part(const CMatrix& M, bool imag)
{
    json a = json::array();
    for (Index i = 0; i < M.rows(); ++i)
        for (Index k = 0; k < M.cols(); ++k)
            a.push_back(imag ? M(i, k).imag() : M(i, k).real());
    return a;
}

template <class F>
auto with_json_errors(const std::string& origin, F&& f)
{
    try
    {
        return f();
    }
    catch (const json::exception& e)
    {
        fail(ErrorCode::ParseError, origin + ": " + e.what());
    }
}

} // namespace

// ---------------------------------------------------------------- datasets

Dataset parse_dataset(const std::string& text, const std::string& origin)
{
    std::vector<std::string_view> lines;
    {
        std::string_view rest(text);
        while (!rest.empty())
        {
            const auto nl = rest.find('\n');
            std::string_view ln = rest.substr(0, nl);
            if (!ln.empty() && ln.back() == '\r')
                ln.remove_suffix(1);
            lines.push_back(ln);
            if (nl == std::string_view::npos)
                break;
            rest.remove_prefix(nl + 1);
        }
    }
    if (lines.empty() || lines[0] != kDatasetMagic)
        parse_fail(origin, 1, 1, std::string("missing '") + kDatasetMagic + "' header");
    if (lines.size() < 2)
        parse_fail(origin, 2, 1, "missing '# key=value' header");
    const auto kv = parse_header(lines[1], origin);
    if (lines.size() < 3 || lines[2] != kColumns)
        parse_fail(origin, 3, 1, std::string("expected column line '") + kColumns + "'");

    const Domain domain = parse_domain(kv.at("domain"), origin);
    const std::string kind = kv.at("kind");
    if (kind != "frd" && kind != "ird")
        parse_fail(origin, 2, 1, "kind must be 'frd' or 'ird'");
    const bool frd = kind == "frd";
    const Index p  = static_cast<Index>(header_int(kv, "p", origin));
    const Index m  = static_cast<Index>(header_int(kv, "m", origin));
    const auto npts = static_cast<std::size_t>(header_int(kv, "points", origin));
    const double spacing = parse_number<double>(Field{kv.at("spacing"), 1}, origin, 2);
    require(p >= 1 && m >= 1, ErrorCode::DimensionMismatch, origin + ": p and m must be positive");
    if (npts == 0)
        fail(ErrorCode::EmptyGrid, origin + ": dataset has no grid points");

    std::vector<double> grid;
    std::vector<std::size_t> grid_line;
    std::vector<CMatrix> values;
    std::vector<std::vector<bool>> seen;
    const std::size_t block = static_cast<std::size_t>(p * m);
    std::size_t in_block    = block;

    for (std::size_t li = 3; li < lines.size(); ++li)
    {
        const std::size_t lineno = li + 1;
        if (lines[li].empty() && li + 1 == lines.size())
            break;
        if (lines[li].empty() || lines[li][0] == '#')
            parse_fail(origin, lineno, 1, "unexpected blank or comment line");
        const auto fields = split_csv(lines[li]);
        if (fields.size() != 5)
            parse_fail(origin, lineno, 1, "expected 5 fields, got " + std::to_string(fields.size()));
        const double g  = parse_number<double>(fields[0], origin, lineno);
        const auto out  = parse_number<long long>(fields[1], origin, lineno);
        const auto inp  = parse_number<long long>(fields[2], origin, lineno);
        const double re = parse_number<double>(fields[3], origin, lineno);
        const double im = parse_number<double>(fields[4], origin, lineno);

        if (g < 0.0)
            parse_fail(origin, lineno, fields[0].col, "negative grid value");
        if (out < 0 || out >= p || inp < 0 || inp >= m)
            fail(ErrorCode::DimensionMismatch, origin + ":" + std::to_string(lineno) + ": entry (" +
                                                   std::to_string(out) + "," + std::to_string(inp) +
                                                   ") outside the declared " + std::to_string(p) + "x" +
                                                   std::to_string(m) + " shape");
        if (!frd && im != 0.0)
            parse_fail(origin, lineno, fields[4].col, "impulse data must have zero imaginary part");

        if (grid.empty() || g != grid.back())
        {
            if (!grid.empty() && g < grid.back())
                parse_fail(origin, lineno, fields[0].col, "grid values must be ascending");
            if (in_block != block)
                fail(ErrorCode::DimensionMismatch, origin + ":" + std::to_string(lineno) +
                                                       ": previous grid point has " + std::to_string(in_block) +
                                                       " of " + std::to_string(block) + " entries");
            grid.push_back(g);
            grid_line.push_back(lineno);
            values.emplace_back(CMatrix::Zero(p, m));
            seen.emplace_back(block, false);
            in_block = 0;
        }
        const auto slot = static_cast<std::size_t>(out * m + inp);
        if (seen.back()[slot])
            parse_fail(origin, lineno, fields[1].col, "duplicate entry for this grid point");
        seen.back()[slot] = true;
        values.back()(out, inp) = cplx(re, im);
        ++in_block;
    }
    if (grid.empty())
        fail(ErrorCode::EmptyGrid, origin + ": dataset has no rows");
    if (in_block != block)
        fail(ErrorCode::DimensionMismatch, origin + ": last grid point is incomplete");
    if (grid.size() != npts)
        fail(ErrorCode::DimensionMismatch, origin + ": header declares " + std::to_string(npts) +
                                               " points, found " + std::to_string(grid.size()));

    if (grid.size() > 1)
    {
        const double h = (grid.back() - grid.front()) / static_cast<double>(grid.size() - 1);
        if (std::abs(spacing - h) > kGridJitterTol * h)
            parse_fail(origin, 2, 1, "header spacing does not match the grid");
        for (std::size_t k = 1; k < grid.size(); ++k)
            if (std::abs((grid[k] - grid[k - 1]) - h) > kGridJitterTol * h)
                parse_fail(origin, grid_line[k], 1, "grid spacing deviates from uniform");
    }

    try
    {
        if (frd)
        {
            FrequencyResponseData d{std::move(grid), std::move(values), domain};
            d.validate();
            return d;
        }
        ImpulseResponseData d;
        d.times  = std::move(grid);
        d.domain = domain;
        d.values.reserve(values.size());
        for (const CMatrix& v : values)
            d.values.emplace_back(v.real());
        d.validate();
        return d;
    }
    catch (const Error& e)
    {
        if (e.code() == ErrorCode::DimensionMismatch || e.code() == ErrorCode::EmptyGrid)
            throw;
        fail(ErrorCode::ParseError, origin + ": " + e.detail());
    }
}

std::string format_dataset(const Dataset& data)
{
    std::string out;
    auto emit = [&](const auto& d, const char* kind, auto&& value_at) {
        d.validate();
        const auto& grid = [&]() -> const std::vector<double>& {
            if constexpr (std::is_same_v<std::decay_t<decltype(d)>, FrequencyResponseData>)
                return d.omegas;
            else
                return d.times;
        }();
        const Index p = d.outputs();
        const Index m = d.inputs();
        const double h =
            grid.size() > 1 ? (grid.back() - grid.front()) / static_cast<double>(grid.size() - 1) : 0.0;
        out.reserve(grid.size() * static_cast<std::size_t>(p * m) * 64 + 256);
        out += kDatasetMagic;
        out += "\n# domain=" + domain_name(d.domain) + " kind=" + kind + " p=" + std::to_string(p) +
               " m=" + std::to_string(m) + " points=" + std::to_string(grid.size()) + " spacing=";
        append_double(out, h);
        out += '\n';
        out += kColumns;
        out += '\n';
        for (std::size_t k = 0; k < grid.size(); ++k)
            for (Index i = 0; i < p; ++i)
                for (Index j = 0; j < m; ++j)
                {
                    const cplx v = value_at(d, k, i, j);
                    append_double(out, grid[k]);
                    out += ',' + std::to_string(i) + ',' + std::to_string(j) + ',';
                    append_double(out, v.real());
                    out += ',';
                    append_double(out, v.imag());
                    out += '\n';
                }
    };
    if (const auto* f = std::get_if<FrequencyResponseData>(&data))
        emit(*f, "frd", [](const FrequencyResponseData& d, std::size_t k, Index i, Index j) { return d.values[k](i, j); });
    else
        emit(std::get<ImpulseResponseData>(data), "ird", [](const ImpulseResponseData& d, std::size_t k, Index i, Index j) {
            return cplx(d.values[k](i, j), 0.0);
        });
    return out;
}

Dataset load_dataset(const std::filesystem::path& path) { return parse_dataset(read_text(path), path.string()); }

FrequencyResponseData load_frd(const std::filesystem::path& path)
{
    Dataset d = load_dataset(path);
    require(std::holds_alternative<FrequencyResponseData>(d), ErrorCode::ParseError,
            path.string() + ": expected frequency-response data (kind=frd)");
    return std::get<FrequencyResponseData>(std::move(d));
}

ImpulseResponseData load_ird(const std::filesystem::path& path)
{
    Dataset d = load_dataset(path);
    require(std::holds_alternative<ImpulseResponseData>(d), ErrorCode::ParseError,
            path.string() + ": expected impulse-response data (kind=ird)");
    return std::get<ImpulseResponseData>(std::move(d));
}

void save_dataset(const std::filesystem::path& path, const Dataset& data) { write_text(path, format_dataset(data)); }

// ------------------------------------------------------------------ models

json model_to_json(const ComplexRom& rom)
{
    const bool complex = rom.A.imag().cwiseAbs().maxCoeff() > 0.0 || rom.B.imag().cwiseAbs().maxCoeff() > 0.0 ||
                         rom.C.imag().cwiseAbs().maxCoeff() > 0.0;
    json j;
    j["format"]  = "qlmor-model";
    j["version"] = 1;
    j["domain"]  = domain_name(rom.domain);
    j["n"]       = rom.order();
    j["m"]       = rom.inputs();
    j["p"]       = rom.outputs();
    j["A"]       = flat_part(rom.A, false);
    j["B"]       = flat_part(rom.B, false);
    j["C"]       = flat_part(rom.C, false);
    if (complex)
    {
        j["A_imag"] = flat_part(rom.A, true);
        j["B_imag"] = flat_part(rom.B, true);
        j["C_imag"] = flat_part(rom.C, true);
    }
    return j;
}

json model_to_json(const StateSpaceModel& model) { return model_to_json(to_complex(model)); }

ComplexRom complex_model_from_json(const json& j)
{
    return with_json_errors("model", [&] {
        check_format(j, "qlmor-model", "model");
        const Domain domain = parse_domain(j.at("domain").get<std::string>(), "model");
        const auto n = j.at("n").get<long long>();
        const auto m = j.at("m").get<long long>();
        const auto p = j.at("p").get<long long>();
        require(n >= 1 && m >= 1 && p >= 1, ErrorCode::DimensionMismatch, "model: n, m, p must be positive");
        const auto sz = [](long long a, long long b) { return static_cast<std::size_t>(a * b); };
        const auto A = flat(j, "A", sz(n, n));
        const auto B = flat(j, "B", sz(n, m));
        const auto C = flat(j, "C", sz(p, n));
        const bool complex = j.contains("A_imag") || j.contains("B_imag") || j.contains("C_imag");
        std::vector<double> Ai, Bi, Ci;
        if (complex)
        {
            Ai = flat(j, "A_imag", sz(n, n));
            Bi = flat(j, "B_imag", sz(n, m));
            Ci = flat(j, "C_imag", sz(p, n));
        }
        return ComplexRom(shaped(A, complex ? &Ai : nullptr, n, n), shaped(B, complex ? &Bi : nullptr, n, m),
                          shaped(C, complex ? &Ci : nullptr, p, n), domain);
    });
}

StateSpaceModel model_from_json(const json& j)
{
    const ComplexRom rom = complex_model_from_json(j);
    require(rom.A.imag().isZero(0.0) && rom.B.imag().isZero(0.0) && rom.C.imag().isZero(0.0),
            ErrorCode::ParseError, "model: expected a real realization");
    return StateSpaceModel(rom.A.real(), rom.B.real(), rom.C.real(), rom.domain);
}

StateSpaceModel load_model(const std::filesystem::path& path)
{
    try
    {
        return model_from_json(read_json(path));
    }
    catch (const Error& e)
    {
        if (e.code() == ErrorCode::IoError)
            throw;
        fail(e.code(), path.string() + ": " + e.detail());
    }
}

ComplexRom load_complex_model(const std::filesystem::path& path)
{
    try
    {
        return complex_model_from_json(read_json(path));
    }
    catch (const Error& e)
    {
        if (e.code() == ErrorCode::IoError)
            throw;
        fail(e.code(), path.string() + ": " + e.detail());
    }
}

void save_model(const std::filesystem::path& path, const StateSpaceModel& model)
{
    write_text(path, model_to_json(model).dump(2) + "\n");
}

void save_model(const std::filesystem::path& path, const ComplexRom& rom)
{
    write_text(path, model_to_json(rom).dump(2) + "\n");
}

// ------------------------------------------------------------ points/samples

json cplx_to_json(cplx z) { return json::array({z.real(), z.imag()}); }

cplx cplx_from_json(const json& j)
{
    require(j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number(), ErrorCode::ParseError,
            "complex numbers must be [re, im] pairs");
    return {j[0].get<double>(), j[1].get<double>()};
}

json matrix_to_json(const CMatrix& M)
{
    json rows = json::array();
    for (Index i = 0; i < M.rows(); ++i)
    {
        json row = json::array();
        for (Index k = 0; k < M.cols(); ++k)
            row.push_back(cplx_to_json(M(i, k)));
        rows.push_back(std::move(row));
    }
    return rows;
}

CMatrix matrix_from_json(const json& j, Index rows, Index cols, const char* what)
{
    require(j.is_array(), ErrorCode::ParseError, std::string(what) + " must be an array of rows");
    require(static_cast<Index>(j.size()) == rows, ErrorCode::DimensionMismatch,
            std::string(what) + " has " + std::to_string(j.size()) + " rows, expected " + std::to_string(rows));
    CMatrix M(rows, cols);
    for (Index i = 0; i < rows; ++i)
    {
        const json& row = j[static_cast<std::size_t>(i)];
        require(row.is_array() && static_cast<Index>(row.size()) == cols, ErrorCode::DimensionMismatch,
                std::string(what) + " row " + std::to_string(i) + " must have " + std::to_string(cols) + " entries");
        for (Index k = 0; k < cols; ++k)
            M(i, k) = cplx_from_json(row[static_cast<std::size_t>(k)]);
    }
    return M;
}

json points_to_json(const TangentialData& data)
{
    json j;
    j["format"]  = "qlmor-points";
    j["version"] = 1;
    j["hermite"] = data.hermite;
    j["sigma"]   = json::array();
    j["mu"]      = json::array();
    for (cplx s : data.sigma)
        j["sigma"].push_back(cplx_to_json(s));
    for (cplx s : data.mu)
        j["mu"].push_back(cplx_to_json(s));
    j["b"] = matrix_to_json(data.b);
    j["c"] = matrix_to_json(data.c);
    return j;
}

TangentialData points_from_json(const json& j)
{
    return with_json_errors("points", [&] {
        check_format(j, "qlmor-points", "points");
        const bool hermite = j.value("hermite", false);
        std::vector<cplx> sigma;
        std::vector<cplx> mu;
        for (const json& z : j.at("sigma"))
            sigma.push_back(cplx_from_json(z));
        if (j.contains("mu"))
            for (const json& z : j.at("mu"))
                mu.push_back(cplx_from_json(z));
        const Index r = static_cast<Index>(sigma.size());
        require(r >= 1, ErrorCode::DimensionMismatch, "points: no interpolation points");
        const json& bj = j.at("b");
        const json& cj = j.at("c");
        require(bj.is_array() && !bj.empty() && cj.is_array() && cj.size() == static_cast<std::size_t>(r) &&
                    cj[0].is_array(),
                ErrorCode::DimensionMismatch, "points: b must be m x r and c must be r x p");
        const Index m = static_cast<Index>(bj.size());
        const Index p = static_cast<Index>(cj[0].size());
        CMatrix b = matrix_from_json(bj, m, r, "b");
        CMatrix c = matrix_from_json(cj, r, p, "c");
        if (hermite)
        {
            require(mu.empty() || mu == sigma, ErrorCode::InvalidArgument, "points: Hermite data needs mu == sigma");
            return TangentialData::hermite_data(std::move(sigma), std::move(b), std::move(c));
        }
        require(static_cast<Index>(mu.size()) == r, ErrorCode::DimensionMismatch,
                "points: mu must have as many entries as sigma");
        return TangentialData::two_sided(std::move(sigma), std::move(mu), std::move(b), std::move(c));
    });
}

TangentialData load_points(const std::filesystem::path& path)
{
    try
    {
        return points_from_json(read_json(path));
    }
    catch (const Error& e)
    {
        if (e.code() == ErrorCode::IoError)
            throw;
        fail(e.code(), path.string() + ": " + e.detail());
    }
}

void save_points(const std::filesystem::path& path, const TangentialData& data)
{
    write_text(path, points_to_json(data).dump(2) + "\n");
}

void save_samples(const std::filesystem::path& path, const SampleSet& samples, const TangentialData& data,
                  std::string_view sampler)
{
    samples.check_against(data);
    json j;
    j["format"]  = "qlmor-samples";
    j["version"] = 1;
    j["sampler"] = std::string(sampler);
    j["points"]  = points_to_json(data);
    j["right"]   = matrix_to_json(samples.right);
    j["left"]    = matrix_to_json(samples.left);
    if (samples.hermite_diag)
        j["hermite_diag"] = matrix_to_json(*samples.hermite_diag);
    write_text(path, j.dump(2) + "\n");
}

LoadedSamples load_samples(const std::filesystem::path& path)
{
    const json j = read_json(path);
    const std::string origin = path.string();
    try
    {
        return with_json_errors(origin, [&] {
            check_format(j, "qlmor-samples", origin);
            LoadedSamples out;
            out.data    = points_from_json(j.at("points"));
            out.sampler = j.at("sampler").get<std::string>();
            const Index r = out.data.order();
            const Index m = out.data.inputs();
            const Index p = out.data.outputs();
            out.samples.right = matrix_from_json(j.at("right"), p, r, "right");
            out.samples.left  = matrix_from_json(j.at("left"), r, m, "left");
            if (j.contains("hermite_diag"))
                out.samples.hermite_diag = matrix_from_json(j.at("hermite_diag"), p, r, "hermite_diag");
            out.samples.check_against(out.data);
            return out;
        });
    }
    catch (const Error& e)
    {
        fail(e.code(), origin + ": " + e.detail());
    }
}

void save_report(const std::filesystem::path& path, const json& report) { write_text(path, report.dump(2) + "\n"); }

// -------------------------------------------------------------- synthesis

Dataset synthesize_dataset(const StateSpaceModel& model, DatasetKind kind, const GridSpec& grid)
{
    require(is_stable(model), ErrorCode::UnstableModel, "cannot synthesize data from an unstable model");
    require(grid.domain == model.domain, ErrorCode::InvalidArgument, "grid domain differs from the model domain");
    if (grid.points <= 0)
        fail(ErrorCode::EmptyGrid, "grid needs at least one point");
    require(std::isfinite(grid.from) && std::isfinite(grid.to) && grid.from >= 0.0 &&
                (grid.points == 1 ? grid.to >= grid.from : grid.to > grid.from),
            ErrorCode::InvalidArgument, "grid must satisfy 0 <= from < to");

    if (kind == DatasetKind::Frd)
    {
        if (model.domain == Domain::Discrete)
            require(grid.to <= std::acos(-1.0) * (1.0 + 1e-15), ErrorCode::InvalidArgument,
                    "discrete frequencies must lie in [0, pi]");
        FrequencyResponseData d;
        d.domain = model.domain;
        d.omegas = linspace(grid.from, grid.to, grid.points);
        const ComplexRom sys = to_complex(model);
        d.values.reserve(d.omegas.size());
        for (double w : d.omegas)
            d.values.push_back(eval_tf(sys, model.domain == Domain::Continuous ? cplx(0.0, w) : std::polar(1.0, w)));
        d.validate();
        return d;
    }

    ImpulseResponseData d;
    d.domain = model.domain;
    if (model.domain == Domain::Discrete)
    {
        require(grid.from == 0.0 && grid.to == static_cast<double>(grid.points - 1), ErrorCode::InvalidArgument,
                "discrete impulse data uses the index grid 0, 1, ..., points-1");
        d.times.resize(static_cast<std::size_t>(grid.points));
        for (int k = 0; k < grid.points; ++k)
            d.times[static_cast<std::size_t>(k)] = k;
    }
    else
    {
        require(grid.from == 0.0, ErrorCode::InvalidArgument, "impulse data must start at t = 0");
        d.times = linspace(grid.from, grid.to, grid.points);
    }
    d.values = impulse_response(model, d.times);
    d.validate();
    return d;
}

// --------------------------------------------------------------------- files

json read_json(const std::filesystem::path& path)
{
    const std::string text = read_text(path);
    try
    {
        return json::parse(text);
    }
    catch (const json::parse_error& e)
    {
        fail(ErrorCode::ParseError, path.string() + ": " + e.what());
    }
}

void write_text(const std::filesystem::path& path, const std::string& text)
{
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    require(out.good(), ErrorCode::IoError, "cannot write '" + path.string() + "'");
    out << text;
    out.flush();
    require(out.good(), ErrorCode::IoError, "write to '" + path.string() + "' failed");
}

} // namespace qlmor::io
