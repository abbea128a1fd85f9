#ifndef QLMOR_LTI_HPP
#define QLMOR_LTI_HPP

#include <cstddef>
#include <vector>

#include "qlmor/linalg.hpp"

namespace qlmor
{

enum class Domain
{
    Continuous,
    Discrete
};

///
/// Real state-space realization `G(s) = C (sI - A)^{-1} B` (no feedthrough).
///
/// Dimensions are validated at construction. Stability is not: unstable
/// models are representable, and the reduction entry points reject them.
///
struct StateSpaceModel
{
    RMatrix A;
    RMatrix B;
    RMatrix C;
    Domain domain = Domain::Continuous;

    StateSpaceModel() = default;
    StateSpaceModel(RMatrix a, RMatrix b, RMatrix c, Domain d = Domain::Continuous);

    [[nodiscard]] Index order() const noexcept { return A.rows(); }
    [[nodiscard]] Index inputs() const noexcept { return B.cols(); }
    [[nodiscard]] Index outputs() const noexcept { return C.rows(); }
};

/// Complex realization, as produced by Loewner and PORK constructions before
/// realification.
struct ComplexRom
{
    CMatrix A;
    CMatrix B;
    CMatrix C;
    Domain domain = Domain::Continuous;

    ComplexRom() = default;
    ComplexRom(CMatrix a, CMatrix b, CMatrix c, Domain d = Domain::Continuous);

    [[nodiscard]] Index order() const noexcept { return A.rows(); }
    [[nodiscard]] Index inputs() const noexcept { return B.cols(); }
    [[nodiscard]] Index outputs() const noexcept { return C.rows(); }
};

ComplexRom to_complex(const StateSpaceModel& model);

/// `G(s) = sum_k l_k r_k^* / (s - lambda_k)`.
struct PoleResidueForm
{
    std::vector<cplx> poles;
    std::vector<CVector> left_factors;  ///< l_k, length p
    std::vector<CVector> right_factors; ///< r_k, length m (row k of X^{-1}B is r_k^*)

    [[nodiscard]] CMatrix evaluate(cplx s) const;
};

/// Relative eigenvalue separation below which poles count as repeated.
inline constexpr double kRepeatedPoleTol = 1e-8;

CMatrix eval_tf(const StateSpaceModel& model, cplx s);
CMatrix eval_tf(const ComplexRom& rom, cplx s);

/// `G'(s) = -C (sI - A)^{-2} B`.
CMatrix eval_tf_derivative(const StateSpaceModel& model, cplx s);
CMatrix eval_tf_derivative(const ComplexRom& rom, cplx s);

/// `C e^{At} B` for continuous models, `C A^k B` for discrete ones, where the
/// time argument must then be a nonnegative integer.
RMatrix impulse_response(const StateSpaceModel& model, double t);

/// Impulse response tabulated at each time (or index) of `times`.
std::vector<RMatrix> impulse_response(const StateSpaceModel& model, const std::vector<double>& times);

PoleResidueForm pole_residue(const StateSpaceModel& model);
PoleResidueForm pole_residue(const ComplexRom& rom);

bool is_stable(const StateSpaceModel& model);
bool is_stable(const ComplexRom& rom);

/// H2 norm through the controllability Gramian (Lyapunov or Stein equation).
double h2_norm(const StateSpaceModel& model);
double h2_norm(const ComplexRom& rom);

/// `G1 - G2` as a block-diagonal realization; both must share the domain and
/// input/output dimensions.
ComplexRom difference_system(const ComplexRom& lhs, const ComplexRom& rhs);

/// Convenience: `||G1 - G2||_{H2}`.
double h2_error(const StateSpaceModel& truth, const ComplexRom& rom);
double h2_error(const StateSpaceModel& truth, const StateSpaceModel& rom);

} // namespace qlmor

#endif // QLMOR_LTI_HPP
