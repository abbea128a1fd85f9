#ifndef QLMOR_IRKA_HPP
#define QLMOR_IRKA_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "qlmor/interpolation.hpp"
#include "qlmor/lti.hpp"
#include "qlmor/sampling.hpp"

namespace qlmor
{

/// Seeded random start: conjugate-closed shifts and unit directions.
struct RandomInit
{
    std::uint64_t seed = 0;
};

using IrkaInit = std::variant<RandomInit, TangentialData>;

struct IrkaConfig
{
    Index order = 0;
    int max_iterations = 50;
    double shift_tolerance = 1e-6;
    int surrogate_window = 3;
    double surrogate_tolerance = 1e-8; ///< 0 disables the plateau test
    /// Finite-difference step for Hermite data; ignored when the sampler has
    /// exact derivatives and `prefer_exact_derivative` is set.
    std::optional<cplx> delta_s = kDefaultDeltaS;
    bool prefer_exact_derivative = true;
    IrkaInit init = RandomInit{};
    /// Discrete-time iteration (mirror 1/lambda) is untested against
    /// reference results and must be switched on explicitly.
    bool experimental_discrete = false;

    void validate() const;
};

enum class IrkaTermination
{
    ShiftsConverged,
    SurrogatePlateau,
    MaxIterations,
    Failure,
};

std::string_view to_string(IrkaTermination t) noexcept;

struct IrkaIteration
{
    int index = 0;
    std::vector<cplx> shifts;     ///< interpolation points used in this iteration
    double shift_change = 0.0;    ///< relative change to the next point set
    std::optional<double> surrogate; ///< error surrogate of this iteration's ROM
    double wall_seconds = 0.0;
};

struct IrkaTrace
{
    std::vector<IrkaIteration> iterations;
    IrkaTermination termination = IrkaTermination::MaxIterations;
    std::string failure_detail;
    int restarts = 0;
};

struct IrkaResult
{
    std::optional<StateSpaceModel> rom; ///< realified ROM (absent on early failure)
    std::optional<ComplexRom> complex_rom;
    TangentialData data; ///< interpolation data that produced the ROM
    IrkaTrace trace;
};

/// Random conjugate-closed Hermite data of order r for an m-input, p-output
/// system. Magnitudes are log-uniform in [0.1, 100]; continuous points lie in
/// the open right half-plane, discrete ones outside the unit disk.
TangentialData init_shifts(Index r, std::uint64_t seed, Index m, Index p, Domain domain = Domain::Continuous);

struct IrkaStep
{
    ComplexRom rom;
    PoleResidueForm modal;
    TangentialData next; ///< mirrored poles with the modal residue directions
};

///
/// One fixed-point step: sample, build the Loewner ROM, and mirror its poles.
///
/// For ROM pole lambda_k the next point is |Re lambda_k| - j Im lambda_k
/// (continuous) and the next directions are the transpose residue factors
/// (row k of X^{-1}B transposed, column k of CX), kept conjugate-closed.
///
IrkaStep irka_step(const Sampler& sampler, const TangentialData& data, std::optional<cplx> delta_s,
                   bool experimental_discrete = false);

/// Modal data of a ROM in the point set that IRKA would sample next.
TangentialData mirror_data(const PoleResidueForm& modal, Domain domain);

IrkaResult run_irka(const Sampler& sampler, const IrkaConfig& config);

enum class SurrogateSide
{
    Right,
    Left,
};

///
/// Data-only estimate of ||G||^2 - ||G - rom||^2.
///
/// The interpolation data has to be the mirror image of the ROM's modal form
/// (points at -lambda_k, or 1/lambda_k for discrete ROMs, directions parallel
/// to the transpose residue factors); otherwise SurrogateMisaligned. With
/// exact samples the value is exact.
///
double error_surrogate(const SampleSet& samples, const TangentialData& data, const ComplexRom& rom,
                       SurrogateSide side = SurrogateSide::Right);

/// Relative residuals of the first-order H2 optimality conditions at the
/// mirrored ROM poles.
struct OptimalityReport
{
    std::vector<double> right;   ///< G(-l) d_k vs rom(-l) d_k
    std::vector<double> left;    ///< l_k^T G(-l) vs l_k^T rom(-l)
    std::vector<double> hermite; ///< l_k^T G'(-l) d_k vs l_k^T rom'(-l) d_k

    [[nodiscard]] double max() const;
};

/// Throws UnstableROM.
OptimalityReport verify_h2_optimality(const TransferOracle& truth, const ComplexRom& rom);
OptimalityReport verify_h2_optimality(const TransferOracle& truth, const StateSpaceModel& rom);

/// Max pointwise relative distance between two point sets after sorting.
double shift_change(const std::vector<cplx>& a, const std::vector<cplx>& b);

} // namespace qlmor

#endif // QLMOR_IRKA_HPP
