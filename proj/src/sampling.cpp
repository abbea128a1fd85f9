#include "qlmor/sampling.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "qlmor/error.hpp"
#include "qlmor/kernels.hpp"

namespace qlmor
{

namespace
{

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void check_uniform(const std::vector<double>& grid, const char* what)
{
    require(grid.size() >= 2, ErrorCode::EmptyGrid, std::string(what) + " grid needs at least two points");
    const double h = grid[1] - grid[0];
    require(h > 0.0, ErrorCode::InvalidArgument, std::string(what) + " grid must be strictly increasing");
    for (std::size_t k = 1; k < grid.size(); ++k)
    {
        const double step = grid[k] - grid[k - 1];
        require(step > 0.0, ErrorCode::InvalidArgument, std::string(what) + " grid must be strictly increasing");
        require(std::abs(step - h) <= kGridJitterTol * h, ErrorCode::InvalidArgument,
                std::string(what) + " grid is not uniform at index " + std::to_string(k));
    }
}

template <typename M>
void check_shapes(const std::vector<M>& values, std::size_t n)
{
    require(values.size() == n, ErrorCode::DimensionMismatch, "grid and value counts differ");
    for (const M& v : values)
        require(v.rows() == values.front().rows() && v.cols() == values.front().cols(),
                ErrorCode::DimensionMismatch, "response matrices have inconsistent shapes");
    require(values.front().size() > 0, ErrorCode::DimensionMismatch, "response matrices are empty");
}

// Trapezoid weights for an arbitrary ascending grid.
std::vector<double> trapezoid_weights(const std::vector<double>& x)
{
    const std::size_t n = x.size();
    std::vector<double> w(n, 0.0);
    for (std::size_t k = 1; k < n; ++k)
    {
        const double half = 0.5 * (x[k] - x[k - 1]);
        w[k - 1] += half;
        w[k] += half;
    }
    return w;
}

kernels::ComplexSpan view(const std::vector<double>& re, const std::vector<double>& im) { return {re, im}; }

} // namespace

void FrequencyResponseData::validate() const
{
    require(!omegas.empty(), ErrorCode::EmptyGrid, "frequency grid is empty");
    check_uniform(omegas, "frequency");
    require(omegas.front() >= 0.0, ErrorCode::InvalidArgument, "frequencies must be nonnegative");
    if (domain == Domain::Discrete)
        require(omegas.back() <= std::numbers::pi * (1.0 + 1e-12), ErrorCode::InvalidArgument,
                "discrete frequencies must lie in [0, pi]");
    check_shapes(values, omegas.size());
}

void ImpulseResponseData::validate() const
{
    require(!times.empty(), ErrorCode::EmptyGrid, "time grid is empty");
    check_uniform(times, "time");
    require(times.front() == 0.0, ErrorCode::InvalidArgument, "impulse data must start at t = 0");
    if (domain == Domain::Discrete)
        for (std::size_t k = 0; k < times.size(); ++k)
            require(times[k] == static_cast<double>(k), ErrorCode::InvalidArgument,
                    "discrete impulse data must be indexed 0, 1, ..., N");
    check_shapes(values, times.size());
}

CMatrix Sampler::transfer_derivative(cplx) const
{
    fail(ErrorCode::MissingDeltaS, std::string(name()) + " sampler cannot evaluate derivatives exactly");
}

void Sampler::check_point(cplx s) const
{
    if (domain() == Domain::Continuous)
        require(s.real() > 0.0, ErrorCode::NonPositiveRealPart,
                "sampling point must have Re > 0, got Re = " + std::to_string(s.real()));
    else
        require(std::abs(s) > 1.0, ErrorCode::PointInsideUnitDisk,
                "discrete sampling point must satisfy |z| > 1, got " + std::to_string(std::abs(s)));
}

CMatrix Sampler::right_samples(const std::vector<cplx>& sigma, const CMatrix& b) const
{
    require(b.rows() == inputs() && b.cols() == static_cast<Index>(sigma.size()), ErrorCode::DimensionMismatch,
            "right directions must be m x r");
    CMatrix out(outputs(), b.cols());
    for (Index i = 0; i < b.cols(); ++i)
    {
        const cplx s = sigma[static_cast<std::size_t>(i)];
        check_point(s);
        out.col(i) = transfer(s) * b.col(i);
    }
    return out;
}

CMatrix Sampler::left_samples(const std::vector<cplx>& mu, const CMatrix& c) const
{
    require(c.cols() == outputs() && c.rows() == static_cast<Index>(mu.size()), ErrorCode::DimensionMismatch,
            "left directions must be r x p");
    CMatrix out(c.rows(), inputs());
    for (Index i = 0; i < c.rows(); ++i)
    {
        const cplx s = mu[static_cast<std::size_t>(i)];
        check_point(s);
        out.row(i) = c.row(i) * transfer(s);
    }
    return out;
}

ExactSampler::ExactSampler(StateSpaceModel model) : model_(std::move(model)), sys_(to_complex(model_)) {}

CMatrix ExactSampler::transfer(cplx s) const { return eval_tf(sys_, s); }

CMatrix ExactSampler::transfer_derivative(cplx s) const
{
    check_point(s);
    return eval_tf_derivative(sys_, s);
}

FqlfSampler::FqlfSampler(const FrequencyResponseData& frd) : domain_(frd.domain)
{
    frd.validate();
    p_ = frd.outputs();
    m_ = frd.inputs();

    // Mirror the nonnegative half: -w_N, ..., -w_1, [0], w_1, ..., w_N.
    const std::size_t n    = frd.omegas.size();
    const bool has_zero    = frd.omegas.front() == 0.0;
    const std::size_t skip = has_zero ? 1 : 0;
    std::vector<double> grid;
    std::vector<const CMatrix*> src;
    std::vector<bool> conj;
    grid.reserve(2 * n);
    for (std::size_t k = n; k-- > skip;)
    {
        grid.push_back(-frd.omegas[k]);
        src.push_back(&frd.values[k]);
        conj.push_back(true);
    }
    for (std::size_t k = 0; k < n; ++k)
    {
        grid.push_back(frd.omegas[k]);
        src.push_back(&frd.values[k]);
        conj.push_back(false);
    }

    weight_ = trapezoid_weights(grid);
    for (double& w : weight_)
        w /= kTwoPi;

    const std::size_t total = grid.size();
    u_.resize(total);
    v_.resize(total);
    for (std::size_t k = 0; k < total; ++k)
    {
        if (domain_ == Domain::Continuous)
        {
            // s - j w  =  (0 + Re s) + j(-w + Im s)
            u_[k] = 0.0;
            v_[k] = -grid[k];
        }
        else
        {
            // e^{-jw} - 1/z  =  (cos w + Re(-1/z)) + j(-sin w + Im(-1/z))
            u_[k] = std::cos(grid[k]);
            v_[k] = -std::sin(grid[k]);
        }
    }

    const auto entries = static_cast<std::size_t>(p_ * m_);
    series_re_.assign(entries, std::vector<double>(total));
    series_im_.assign(entries, std::vector<double>(total));
    for (std::size_t k = 0; k < total; ++k)
    {
        const CMatrix& G = *src[k];
        for (Index i = 0; i < p_; ++i)
            for (Index j = 0; j < m_; ++j)
            {
                const auto e     = static_cast<std::size_t>(i * m_ + j);
                series_re_[e][k] = G(i, j).real();
                series_im_[e][k] = conj[k] ? -G(i, j).imag() : G(i, j).imag();
            }
    }
}

CMatrix FqlfSampler::transfer(cplx s) const
{
    check_point(s);
    const std::size_t total = weight_.size();
    std::vector<double> cre(total);
    std::vector<double> cim(total);
    const cplx shift = domain_ == Domain::Continuous ? s : -1.0 / s;
    kernels::cauchy_weights(weight_, u_, v_, shift, {cre, cim});

    CMatrix G(p_, m_);
    for (Index i = 0; i < p_; ++i)
        for (Index j = 0; j < m_; ++j)
        {
            const auto e = static_cast<std::size_t>(i * m_ + j);
            G(i, j)      = kernels::dot(view(cre, cim), view(series_re_[e], series_im_[e]));
        }
    if (domain_ == Domain::Discrete)
        G /= s;
    return G;
}

TqlfSampler::TqlfSampler(const ImpulseResponseData& ird) : domain_(ird.domain), times_(ird.times)
{
    ird.validate();
    p_ = ird.outputs();
    m_ = ird.inputs();

    if (domain_ == Domain::Continuous)
        weight_ = trapezoid_weights(times_);
    else
        weight_.assign(times_.size(), 1.0);

    const std::size_t total = times_.size();
    series_.assign(static_cast<std::size_t>(p_ * m_), std::vector<double>(total));
    for (std::size_t k = 0; k < total; ++k)
        for (Index i = 0; i < p_; ++i)
            for (Index j = 0; j < m_; ++j)
                series_[static_cast<std::size_t>(i * m_ + j)][k] = ird.values[k](i, j);
}

CMatrix TqlfSampler::transfer(cplx s) const
{
    check_point(s);
    const std::size_t total = times_.size();
    std::vector<double> cre(total);
    std::vector<double> cim(total);
    if (domain_ == Domain::Continuous)
    {
        for (std::size_t k = 0; k < total; ++k)
        {
            const cplx c = weight_[k] * std::exp(-s * times_[k]);
            cre[k]       = c.real();
            cim[k]       = c.imag();
        }
    }
    else
    {
        const cplx zinv = 1.0 / s;
        for (std::size_t k = 0; k < total; ++k)
        {
            const cplx c = std::pow(zinv, static_cast<double>(k + 1));
            cre[k]       = c.real();
            cim[k]       = c.imag();
        }
    }

    CMatrix G(p_, m_);
    for (Index i = 0; i < p_; ++i)
        for (Index j = 0; j < m_; ++j)
            G(i, j) = kernels::dot_real(view(cre, cim), series_[static_cast<std::size_t>(i * m_ + j)]);
    return G;
}

namespace
{

void require_domain(Domain have, Domain want, const char* op)
{
    require(have == want, ErrorCode::InvalidArgument,
            std::string(op) + ": dataset is " + (have == Domain::Continuous ? "continuous" : "discrete"));
}

} // namespace

CMatrix fqlf_right_samples(const FrequencyResponseData& frd, const std::vector<cplx>& sigma, const CMatrix& b)
{
    require_domain(frd.domain, Domain::Continuous, "fqlf_right_samples");
    return FqlfSampler(frd).right_samples(sigma, b);
}

CMatrix fqlf_left_samples(const FrequencyResponseData& frd, const std::vector<cplx>& mu, const CMatrix& c)
{
    require_domain(frd.domain, Domain::Continuous, "fqlf_left_samples");
    return FqlfSampler(frd).left_samples(mu, c);
}

CMatrix tqlf_right_samples(const ImpulseResponseData& ird, const std::vector<cplx>& sigma, const CMatrix& b)
{
    require_domain(ird.domain, Domain::Continuous, "tqlf_right_samples");
    return TqlfSampler(ird).right_samples(sigma, b);
}

CMatrix tqlf_left_samples(const ImpulseResponseData& ird, const std::vector<cplx>& mu, const CMatrix& c)
{
    require_domain(ird.domain, Domain::Continuous, "tqlf_left_samples");
    return TqlfSampler(ird).left_samples(mu, c);
}

CMatrix dt_fqlf_right_samples(const FrequencyResponseData& frd, const std::vector<cplx>& sigma, const CMatrix& b)
{
    require_domain(frd.domain, Domain::Discrete, "dt_fqlf_right_samples");
    return FqlfSampler(frd).right_samples(sigma, b);
}

CMatrix dt_fqlf_left_samples(const FrequencyResponseData& frd, const std::vector<cplx>& mu, const CMatrix& c)
{
    require_domain(frd.domain, Domain::Discrete, "dt_fqlf_left_samples");
    return FqlfSampler(frd).left_samples(mu, c);
}

CMatrix dt_impulse_right_samples(const ImpulseResponseData& ird, const std::vector<cplx>& sigma, const CMatrix& b)
{
    require_domain(ird.domain, Domain::Discrete, "dt_impulse_right_samples");
    return TqlfSampler(ird).right_samples(sigma, b);
}

CMatrix dt_impulse_left_samples(const ImpulseResponseData& ird, const std::vector<cplx>& mu, const CMatrix& c)
{
    require_domain(ird.domain, Domain::Discrete, "dt_impulse_left_samples");
    return TqlfSampler(ird).left_samples(mu, c);
}

namespace
{

// Points below the real axis step by conj(delta_s), so conjugate points get
// conjugate estimates. Real points average both steps, which keeps the
// estimate real.
CMatrix forward_differences(const Sampler& sampler, const std::vector<cplx>& sigma, const CMatrix& b,
                            const CMatrix& base, cplx delta_s)
{
    require(delta_s != cplx(0.0, 0.0), ErrorCode::InvalidArgument, "finite-difference step must be nonzero");
    std::vector<cplx> up(sigma);
    std::vector<cplx> down(sigma);
    for (std::size_t i = 0; i < sigma.size(); ++i)
    {
        up[i]   += delta_s;
        down[i] += std::conj(delta_s);
    }
    const CMatrix fu = sampler.right_samples(up, b);
    const CMatrix fd = sampler.right_samples(down, b);

    CMatrix d(base.rows(), base.cols());
    for (Index i = 0; i < base.cols(); ++i)
    {
        const double im = sigma[static_cast<std::size_t>(i)].imag();
        const CVector du = (fu.col(i) - base.col(i)) / delta_s;
        const CVector dd = (fd.col(i) - base.col(i)) / std::conj(delta_s);
        d.col(i) = im > 0.0 ? du : im < 0.0 ? dd : CVector(0.5 * (du + dd));
    }
    return d;
}

} // namespace

CMatrix derivative_samples(const Sampler& sampler, const std::vector<cplx>& sigma, const CMatrix& b, cplx delta_s)
{
    return forward_differences(sampler, sigma, b, sampler.right_samples(sigma, b), delta_s);
}

SampleSet build_sample_set(const Sampler& sampler, const TangentialData& data, std::optional<cplx> delta_s)
{
    data.check_shape();
    data.check_points(sampler.domain());

    SampleSet set;
    set.right = sampler.right_samples(data.sigma, data.b);
    set.left  = sampler.left_samples(data.mu, data.c);
    if (!data.hermite)
        return set;

    if (delta_s)
    {
        set.hermite_diag = forward_differences(sampler, data.sigma, data.b, set.right, *delta_s);
    }
    else if (sampler.has_exact_derivative())
    {
        CMatrix d(sampler.outputs(), data.order());
        for (Index i = 0; i < data.order(); ++i)
            d.col(i) = sampler.transfer_derivative(data.sigma[static_cast<std::size_t>(i)]) * data.b.col(i);
        set.hermite_diag = std::move(d);
    }
    else
    {
        fail(ErrorCode::MissingDeltaS, std::string(sampler.name()) +
                                           " sampler needs a finite-difference step for Hermite data");
    }
    return set;
}

} // namespace qlmor
