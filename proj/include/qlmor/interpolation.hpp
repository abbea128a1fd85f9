#ifndef QLMOR_INTERPOLATION_HPP
#define QLMOR_INTERPOLATION_HPP

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "qlmor/lti.hpp"

namespace qlmor
{

/// Index pairs (i, j) with point_j = conj(point_i), plus self-conjugate indices.
struct ConjugatePairing
{
    std::vector<std::pair<Index, Index>> pairs;
    std::vector<Index> reals;

    [[nodiscard]] bool empty() const noexcept { return pairs.empty(); }
};

///
/// Right points sigma_i with directions b_i (columns of `b`, m x r) and left
/// points mu_i with directions c_i (rows of `c`, r x p).
///
/// In Hermite mode mu is a copy of sigma by construction.
///
struct TangentialData
{
    std::vector<cplx> sigma;
    std::vector<cplx> mu;
    CMatrix b; ///< L_b
    CMatrix c; ///< L_c
    bool hermite = false;

    static TangentialData two_sided(std::vector<cplx> sigma, std::vector<cplx> mu, CMatrix b, CMatrix c);
    static TangentialData hermite_data(std::vector<cplx> sigma, CMatrix b, CMatrix c);

    [[nodiscard]] Index order() const noexcept { return static_cast<Index>(sigma.size()); }
    [[nodiscard]] Index inputs() const noexcept { return b.rows(); }
    [[nodiscard]] Index outputs() const noexcept { return c.cols(); }

    /// Shape and Hermite consistency; throws DimensionMismatch/InvalidArgument.
    void check_shape() const;

    /// Points valid for the domain: Re > 0 (continuous) or |z| > 1 (discrete).
    void check_points(Domain domain) const;

    /// Pairing of the right data (sigma_i, b_i); nullopt if not closed.
    [[nodiscard]] std::optional<ConjugatePairing> right_pairing(double tol = 1e-10) const;
    /// Pairing of the left data (mu_i, c_i); nullopt if not closed.
    [[nodiscard]] std::optional<ConjugatePairing> left_pairing(double tol = 1e-10) const;
};

/// Pairing of a point set with matching columns of `dirs`; nullopt if the set
/// is not closed under conjugation.
std::optional<ConjugatePairing> find_conjugate_pairing(const std::vector<cplx>& points, const CMatrix& dirs,
                                                       double tol = 1e-10);

/// Tangential samples: the only thing the reduction algorithms see.
struct SampleSet
{
    CMatrix right;                      ///< p x r, column i ~ G(sigma_i) b_i
    CMatrix left;                       ///< r x m, row i ~ c_i G(mu_i)
    std::optional<CMatrix> hermite_diag; ///< p x r, column i ~ G'(sigma_i) b_i

    void check_against(const TangentialData& data) const;
};

struct LoewnerPencil
{
    CMatrix L;       ///< Loewner matrix, equals W^* V
    CMatrix Ls;      ///< shifted Loewner matrix, equals W^* A V
    CMatrix W_stack; ///< r x m, rows c_i G(mu_i)
    CMatrix V_stack; ///< p x r, columns G(sigma_i) b_i
};

///
/// Loewner and shifted Loewner matrices from tangential samples only:
///
///   L(i,j)  = -(c_i v_j - w_i b_j) / (sigma_j - mu_i)
///   Ls(i,j) = -(sigma_j c_i v_j - mu_i w_i b_j) / (sigma_j - mu_i)
///
/// with Hermite diagonal entries L(i,i) = -c_i d_i and
/// Ls(i,i) = -c_i (v_i + sigma_i d_i).
///
LoewnerPencil build_pencil(const TangentialData& data, const SampleSet& samples);

/// `A = L^{-1} Ls, B = L^{-1} W, C = V`. Throws SingularLoewner.
ComplexRom lf_rom(const LoewnerPencil& pencil, Domain domain = Domain::Continuous);

/// Evaluation capability used for diagnostics (a full-order model, or any
/// other source of ground truth).
struct TransferOracle
{
    std::function<CMatrix(cplx)> value;
    std::function<CMatrix(cplx)> derivative;
};

TransferOracle make_oracle(const StateSpaceModel& model);
TransferOracle make_oracle(const ComplexRom& rom);

struct InterpolationReport
{
    std::vector<double> right;   ///< relative residual of G(sigma_i) b_i
    std::vector<double> left;    ///< relative residual of c_i G(mu_i)
    std::vector<double> hermite; ///< relative residual of c_i G'(sigma_i) b_i (Hermite only)

    [[nodiscard]] double max_right() const;
    [[nodiscard]] double max_left() const;
    [[nodiscard]] double max_hermite() const;
};

InterpolationReport verify_interpolation(const TransferOracle& truth, const ComplexRom& rom,
                                         const TangentialData& data);

///
/// Real realization of a ROM whose state basis is conjugate-closed.
///
/// Each pair (i, j) is transformed with the 2x2 block [[1, -j], [1, j]] / 2,
/// which maps the pair's output columns to (Re, Im) of column i. Throws
/// NotConjugateClosed if the transformed matrices keep imaginary parts above
/// 1e-8 relative.
///
StateSpaceModel realify_rom(const ComplexRom& rom, const ConjugatePairing& pairing);

/// Relative imaginary content tolerated by realify_rom.
inline constexpr double kRealifyTol = 1e-8;

} // namespace qlmor

#endif // QLMOR_INTERPOLATION_HPP
