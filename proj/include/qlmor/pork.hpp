#ifndef QLMOR_PORK_HPP
#define QLMOR_PORK_HPP

#include <vector>

#include "qlmor/lti.hpp"

namespace qlmor
{

enum class GramianKind
{
    ObservabilityQs,   ///< S^* Qs + Qs S = L_b^* L_b
    ControllabilityPs, ///< U Ps + Ps U^* = L_c L_c^*
};

/// Hermitian positive-definite Gramian of the interpolation data, in closed
/// (Cauchy-like) form since S and U are diagonal.
struct PorkGramian
{
    CMatrix matrix;
    GramianKind kind;
};

/// Qs(i,j) = b_i^* b_j / (conj(sigma_i) + sigma_j). Throws NotObservable.
PorkGramian gramian_qs(const std::vector<cplx>& sigma, const CMatrix& b);

/// Ps(i,j) = c_i c_j^* / (mu_i + conj(mu_j)). Throws NotControllable.
PorkGramian gramian_ps(const std::vector<cplx>& mu, const CMatrix& c);

///
/// Output-type pseudo-optimal ROM from right samples V = [G(sigma_i) b_i]:
///
///   A = -Qs^{-1} S^* Qs,  B = Qs^{-1} L_b^*,  C = V,
///
/// so that A = S - B L_b and the poles are -conj(sigma_i).
///
ComplexRom pork_output(const CMatrix& right_samples, const std::vector<cplx>& sigma, const CMatrix& b);

///
/// Input-type pseudo-optimal ROM from left samples W = [c_i G(mu_i)]:
///
///   A = -Ps U^* Ps^{-1},  B = W,  C = L_c^* Ps^{-1},
///
/// so that A = U - L_c C and the poles are -conj(mu_i).
///
ComplexRom pork_input(const CMatrix& left_samples, const std::vector<cplx>& mu, const CMatrix& c);

} // namespace qlmor

#endif // QLMOR_PORK_HPP
