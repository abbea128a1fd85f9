#ifndef QLMOR_IO_HPP
#define QLMOR_IO_HPP

#include <filesystem>
#include <string>
#include <variant>

#include <json.hpp>

#include "qlmor/interpolation.hpp"
#include "qlmor/lti.hpp"
#include "qlmor/sampling.hpp"

namespace qlmor::io
{

///
/// Dataset CSV:
///
///   # qlmor-dataset v1
///   # domain=continuous kind=frd p=2 m=3 points=25000 spacing=0.02000080003200128
///   grid,out,in,re,im
///   0,0,0,<re>,<im>
///   ...
///
/// Rows are grouped by grid value (ascending), each group holding all p*m
/// entries. Impulse data must have an all-zero imaginary column. Values are
/// written with 17 significant digits, which round-trips doubles exactly.
///
using Dataset = std::variant<FrequencyResponseData, ImpulseResponseData>;

Dataset load_dataset(const std::filesystem::path& path);
FrequencyResponseData load_frd(const std::filesystem::path& path);
ImpulseResponseData load_ird(const std::filesystem::path& path);
void save_dataset(const std::filesystem::path& path, const Dataset& data);

Dataset parse_dataset(const std::string& text, const std::string& origin = "<memory>");
std::string format_dataset(const Dataset& data);

/// Model JSON: {"format": "qlmor-model", "version": 1, "domain", "n", "m",
/// "p", "A", "B", "C"} with row-major arrays; complex realizations add
/// "A_imag", "B_imag" and "C_imag".
StateSpaceModel load_model(const std::filesystem::path& path);
ComplexRom load_complex_model(const std::filesystem::path& path);
void save_model(const std::filesystem::path& path, const StateSpaceModel& model);
void save_model(const std::filesystem::path& path, const ComplexRom& rom);

nlohmann::json model_to_json(const StateSpaceModel& model);
nlohmann::json model_to_json(const ComplexRom& rom);
ComplexRom complex_model_from_json(const nlohmann::json& j);
/// Throws ParseError if the document carries nonzero imaginary parts.
StateSpaceModel model_from_json(const nlohmann::json& j);

/// Points JSON: {"format": "qlmor-points", "version": 1, "hermite", "sigma",
/// "mu", "b", "c"}; complex numbers are [re, im] pairs and b (m x r), c (r x p)
/// are arrays of rows. Hermite files may omit "mu".
TangentialData load_points(const std::filesystem::path& path);
void save_points(const std::filesystem::path& path, const TangentialData& data);
nlohmann::json points_to_json(const TangentialData& data);
TangentialData points_from_json(const nlohmann::json& j);

/// Sample JSON: {"format": "qlmor-samples", "version": 1, "sampler",
/// "points", "right", "left", optional "hermite_diag"}.
void save_samples(const std::filesystem::path& path, const SampleSet& samples, const TangentialData& data,
                  std::string_view sampler);
struct LoadedSamples
{
    SampleSet samples;
    TangentialData data;
    std::string sampler;
};
LoadedSamples load_samples(const std::filesystem::path& path);

/// Report JSON is written with sorted keys and fixed formatting, so equal
/// inputs produce byte-identical files.
void save_report(const std::filesystem::path& path, const nlohmann::json& report);

inline constexpr int kReportVersion = 1;

/// Grid for synthetic data: `points` uniform values on [from, to].
struct GridSpec
{
    double from   = 0.0;
    double to     = 0.0;
    int points    = 0;
    Domain domain = Domain::Continuous;
};

enum class DatasetKind
{
    Frd,
    Ird,
};

/// Exact G(j w_k) (or G(e^{j w_k})) / h(t_k) on the grid. Throws
/// UnstableModel, EmptyGrid or InvalidArgument.
Dataset synthesize_dataset(const StateSpaceModel& model, DatasetKind kind, const GridSpec& grid);

/// Text helpers shared with the CLI.
nlohmann::json cplx_to_json(cplx z);
cplx cplx_from_json(const nlohmann::json& j);
nlohmann::json matrix_to_json(const CMatrix& M);
CMatrix matrix_from_json(const nlohmann::json& j, Index rows, Index cols, const char* what);

nlohmann::json read_json(const std::filesystem::path& path);
void write_text(const std::filesystem::path& path, const std::string& text);

} // namespace qlmor::io

#endif // QLMOR_IO_HPP
