#ifndef QLMOR_SAMPLING_HPP
#define QLMOR_SAMPLING_HPP

#include <memory>
#include <optional>
#include <string_view>
#include <vector>

#include "qlmor/interpolation.hpp"
#include "qlmor/lti.hpp"

namespace qlmor
{

/// Relative spacing jitter tolerated in a "uniform" grid.
inline constexpr double kGridJitterTol = 1e-9;

/// Default finite-difference step for derivative samples.
inline const cplx kDefaultDeltaS{1e-4, 1e-4};

///
/// Measured frequency response on a uniform grid of nonnegative frequencies:
/// G(j w_k) for continuous data, G(e^{j w_k}) with w_k in [0, pi] for discrete.
///
struct FrequencyResponseData
{
    std::vector<double> omegas;
    std::vector<CMatrix> values;
    Domain domain = Domain::Continuous;

    /// Throws EmptyGrid, InvalidArgument (negative, unordered or non-uniform
    /// frequencies) or DimensionMismatch.
    void validate() const;

    [[nodiscard]] Index outputs() const { return values.empty() ? 0 : values.front().rows(); }
    [[nodiscard]] Index inputs() const { return values.empty() ? 0 : values.front().cols(); }
};

///
/// Measured impulse response h(t_k) on a uniform grid starting at t_0 = 0;
/// for discrete data the grid is the index sequence 0, 1, ..., N.
///
struct ImpulseResponseData
{
    std::vector<double> times;
    std::vector<RMatrix> values;
    Domain domain = Domain::Continuous;

    void validate() const;

    [[nodiscard]] Index outputs() const { return values.empty() ? 0 : values.front().rows(); }
    [[nodiscard]] Index inputs() const { return values.empty() ? 0 : values.front().cols(); }
};

///
/// Source of tangential transfer-function samples at arbitrary points.
///
/// Right samples come back as a p x r matrix (column i ~ G(sigma_i) b_i),
/// left samples as an r x m matrix (row i ~ c_i G(mu_i)). Implementations are
/// read-only after construction and safe to share between threads.
///
class Sampler
{
public:
    virtual ~Sampler() = default;

    [[nodiscard]] virtual Domain domain() const noexcept = 0;
    [[nodiscard]] virtual Index outputs() const noexcept = 0;
    [[nodiscard]] virtual Index inputs() const noexcept = 0;
    [[nodiscard]] virtual std::string_view name() const noexcept = 0;

    /// Full p x m estimate of G(s). Every tangential sample is a contraction
    /// of this matrix.
    [[nodiscard]] virtual CMatrix transfer(cplx s) const = 0;

    /// True if derivatives can be evaluated exactly (model-based sampler).
    [[nodiscard]] virtual bool has_exact_derivative() const noexcept { return false; }
    [[nodiscard]] virtual CMatrix transfer_derivative(cplx s) const;

    [[nodiscard]] CMatrix right_samples(const std::vector<cplx>& sigma, const CMatrix& b) const;
    [[nodiscard]] CMatrix left_samples(const std::vector<cplx>& mu, const CMatrix& c) const;

protected:
    /// Throws NonPositiveRealPart / PointInsideUnitDisk.
    void check_point(cplx s) const;
};

/// Model-based ground truth through lti_core.
class ExactSampler final : public Sampler
{
public:
    explicit ExactSampler(StateSpaceModel model);

    [[nodiscard]] Domain domain() const noexcept override { return model_.domain; }
    [[nodiscard]] Index outputs() const noexcept override { return model_.outputs(); }
    [[nodiscard]] Index inputs() const noexcept override { return model_.inputs(); }
    [[nodiscard]] std::string_view name() const noexcept override { return "exact"; }
    [[nodiscard]] CMatrix transfer(cplx s) const override;
    [[nodiscard]] bool has_exact_derivative() const noexcept override { return true; }
    [[nodiscard]] CMatrix transfer_derivative(cplx s) const override;

    [[nodiscard]] const StateSpaceModel& model() const noexcept { return model_; }

private:
    StateSpaceModel model_;
    ComplexRom sys_;
};

///
/// Quadrature over a mirrored frequency grid.
///
/// Continuous data: trapezoid of G(jw) / (s - jw) / (2 pi) over [-w_N, w_N],
/// with G(-jw) = conj(G(jw)) synthesized from the stored half. A grid that
/// starts at w_1 > 0 is bridged by a single panel across (-w_1, w_1).
///
/// Discrete data: periodic trapezoid of G(e^{jw}) / (e^{-jw} - 1/z) / (2 pi)
/// over [-pi, pi], then multiplied by 1/z.
///
class FqlfSampler final : public Sampler
{
public:
    explicit FqlfSampler(const FrequencyResponseData& frd);

    [[nodiscard]] Domain domain() const noexcept override { return domain_; }
    [[nodiscard]] Index outputs() const noexcept override { return p_; }
    [[nodiscard]] Index inputs() const noexcept override { return m_; }
    [[nodiscard]] std::string_view name() const noexcept override { return "fqlf"; }
    [[nodiscard]] CMatrix transfer(cplx s) const override;

    [[nodiscard]] std::size_t nodes() const noexcept { return weight_.size(); }

private:
    Domain domain_;
    Index p_ = 0;
    Index m_ = 0;
    // Symmetric grid in split-complex layout; entry (i, j) of G occupies
    // series_re_[i * m + j], series_im_[i * m + j].
    std::vector<double> weight_;
    std::vector<double> u_;
    std::vector<double> v_;
    std::vector<std::vector<double>> series_re_;
    std::vector<std::vector<double>> series_im_;
};

///
/// Quadrature of the Laplace integral from impulse-response data.
///
/// Continuous data: trapezoid of h(t) e^{-st} over [0, t_N].
/// Discrete data: truncated sum of h(k) z^{-(k+1)}, k = 0..N.
///
class TqlfSampler final : public Sampler
{
public:
    explicit TqlfSampler(const ImpulseResponseData& ird);

    [[nodiscard]] Domain domain() const noexcept override { return domain_; }
    [[nodiscard]] Index outputs() const noexcept override { return p_; }
    [[nodiscard]] Index inputs() const noexcept override { return m_; }
    [[nodiscard]] std::string_view name() const noexcept override { return "tqlf"; }
    [[nodiscard]] CMatrix transfer(cplx s) const override;

private:
    Domain domain_;
    Index p_ = 0;
    Index m_ = 0;
    std::vector<double> times_;
    std::vector<double> weight_;
    std::vector<std::vector<double>> series_;
};

CMatrix fqlf_right_samples(const FrequencyResponseData& frd, const std::vector<cplx>& sigma, const CMatrix& b);
CMatrix fqlf_left_samples(const FrequencyResponseData& frd, const std::vector<cplx>& mu, const CMatrix& c);
CMatrix tqlf_right_samples(const ImpulseResponseData& ird, const std::vector<cplx>& sigma, const CMatrix& b);
CMatrix tqlf_left_samples(const ImpulseResponseData& ird, const std::vector<cplx>& mu, const CMatrix& c);

CMatrix dt_fqlf_right_samples(const FrequencyResponseData& frd, const std::vector<cplx>& sigma, const CMatrix& b);
CMatrix dt_fqlf_left_samples(const FrequencyResponseData& frd, const std::vector<cplx>& mu, const CMatrix& c);
CMatrix dt_impulse_right_samples(const ImpulseResponseData& ird, const std::vector<cplx>& sigma, const CMatrix& b);
CMatrix dt_impulse_left_samples(const ImpulseResponseData& ird, const std::vector<cplx>& mu, const CMatrix& c);

/// Forward-difference estimate of [G'(sigma_i) b_i], p x r. Points with
/// Im < 0 use the step conj(delta_s) and real points the mean of both steps,
/// so conjugate-closed data yields conjugate-closed estimates.
CMatrix derivative_samples(const Sampler& sampler, const std::vector<cplx>& sigma, const CMatrix& b,
                           cplx delta_s = kDefaultDeltaS);

///
/// Right, left and (Hermite) derivative samples for `data`.
///
/// Derivatives use forward differences when `delta_s` is given; otherwise the
/// sampler must be able to evaluate them exactly (MissingDeltaS).
///
SampleSet build_sample_set(const Sampler& sampler, const TangentialData& data, std::optional<cplx> delta_s);

} // namespace qlmor

#endif // QLMOR_SAMPLING_HPP
