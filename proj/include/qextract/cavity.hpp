#pragma once

// Single-mode high-Q cavity: decay rates, extraction efficiency eta(t) and
// extraction-quality predicates. All times are elapsed times t - t0.

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "quadrature.hpp"

namespace qextract {

inline constexpr double kVacuumLightSpeed = 299792458.0; // m/s

/// Physical description of the cavity. Validated on construction; |T| > 0.
class CavityParams
{
public:
    CavityParams(double cavity_length, std::complex<double> transmission_coeff,
                 std::complex<double> absorption_coeff, double mode_frequency,
                 double light_speed = kVacuumLightSpeed)
        : length_(cavity_length)
        , light_speed_(light_speed)
        , transmission_(transmission_coeff)
        , absorption_(absorption_coeff)
        , mode_frequency_(mode_frequency)
    {
        if (!(cavity_length > 0.0) || !std::isfinite(cavity_length))
            throw std::invalid_argument("CavityParams: cavity length must be positive");
        if (!(light_speed > 0.0) || !std::isfinite(light_speed))
            throw std::invalid_argument("CavityParams: light speed must be positive");
        if (!(std::abs(transmission_coeff) > 0.0))
            throw std::invalid_argument("CavityParams: |T| must be > 0 (zero transmission extracts nothing)");
        if (!std::isfinite(std::abs(transmission_coeff)) || !std::isfinite(std::abs(absorption_coeff)))
            throw std::invalid_argument("CavityParams: mirror coefficients must be finite");
    }

    double cavity_length() const { return length_; }
    double light_speed() const { return light_speed_; }
    std::complex<double> transmission_coeff() const { return transmission_; }
    std::complex<double> absorption_coeff() const { return absorption_; }
    double mode_frequency() const { return mode_frequency_; }

    /// c / 2l, the round-trip rate that converts |T|^2, |A|^2 into decay rates.
    double round_trip_rate() const { return light_speed_ / (2.0 * length_); }
    double gamma_rad() const { return round_trip_rate() * std::norm(transmission_); }
    double gamma_abs() const { return round_trip_rate() * std::norm(absorption_); }
    double total_rate() const { return gamma_rad() + gamma_abs(); }

    /// Free spectral range pi c / l; the frequency window owned by this mode.
    double mode_spacing() const { return std::numbers::pi * light_speed_ / length_; }

    /// Non-fatal notes when the parameters leave the high-Q regime.
    std::vector<std::string> regime_warnings() const
    {
        std::vector<std::string> w;
        if (std::abs(transmission_) > 0.1)
            w.push_back("|T| = " + std::to_string(std::abs(transmission_)) + " exceeds 0.1; high-Q approximation is questionable");
        if (std::abs(absorption_) > 0.1)
            w.push_back("|A| = " + std::to_string(std::abs(absorption_)) + " exceeds 0.1; high-Q approximation is questionable");
        return w;
    }

private:
    double length_;
    double light_speed_;
    std::complex<double> transmission_;
    std::complex<double> absorption_;
    double mode_frequency_;
};

struct DecayRates
{
    double rad = 0.0; // transmission through the coupling mirror
    double abs = 0.0; // absorption and scattering
};

inline DecayRates decay_rates(const CavityParams& params)
{
    return {params.gamma_rad(), params.gamma_abs()};
}

namespace detail {
inline void check_rates(double gamma_rad, double gamma_abs)
{
    if (!(gamma_rad > 0.0) || !std::isfinite(gamma_rad))
        throw std::domain_error("gamma_rad must be positive and finite");
    if (!(gamma_abs >= 0.0) || !std::isfinite(gamma_abs))
        throw std::domain_error("gamma_abs must be non-negative and finite");
}
} // namespace detail

/// Long-time efficiency gamma_rad / (gamma_rad + gamma_abs); upper bound of eta(t).
inline double eta_asymptote(double gamma_rad, double gamma_abs)
{
    detail::check_rates(gamma_rad, gamma_abs);
    return gamma_rad / (gamma_rad + gamma_abs);
}

inline double eta_closed(double gamma_rad, double gamma_abs, double elapsed)
{
    detail::check_rates(gamma_rad, gamma_abs);
    if (!(elapsed >= 0.0))
        throw std::domain_error("eta_closed: elapsed time must be >= 0");
    const double total = gamma_rad + gamma_abs;
    return gamma_rad / total * -std::expm1(-total * elapsed);
}

inline double eta_closed(const DecayRates& rates, double elapsed)
{
    return eta_closed(rates.rad, rates.abs, elapsed);
}

/// Squared modulus of the filter kernel F(omega, t) at detuning omega - omega_cav.
inline double filter_kernel_norm(const CavityParams& params, double detuning, double elapsed)
{
    const double half_width = 0.5 * params.total_rate();
    // e^{-(G/2 + i d) t} - 1, written to avoid cancellation for small arguments.
    const double x = -half_width * elapsed;
    const double y = -detuning * elapsed;
    const double s = std::sin(0.5 * y);
    const double re = std::expm1(x) * std::cos(y) - 2.0 * s * s;
    const double im = std::exp(x) * std::sin(y);
    const double num = re * re + im * im;
    return params.gamma_rad() / (2.0 * std::numbers::pi) * num / (detuning * detuning + half_width * half_width);
}

struct EtaQuadratureReport
{
    double value = 0.0;          // in-band + out-of-band, i.e. the full-line integral
    double in_band = 0.0;        // integral over the physical window |omega - omega_cav| <= pi c / 2l
    double out_of_band = 0.0;    // tail beyond the window
    double closed_form = 0.0;
    double relative_error = 0.0; // |value - closed_form| / closed_form
    double band_residual = 0.0;  // (closed_form - in_band) / closed_form
    int refinements = 0;
    bool converged = false;
};

/// Quadrature of |F(omega,t)|^2 over frequency.
///
/// With c = Gamma/2 the integrand is (gamma_rad/2pi) (A - B cos(d t)) / (d^2 + c^2)
/// in the detuning d. Composite Gauss-Legendre panels cover |d| <= X: uniform
/// over +-20 Gamma, then bounded by the local Lorentzian scale and by half a
/// period of cos(d t). Panel widths halve per refinement until successive
/// values agree to `tolerance`. Beyond X the Lorentzian part is integrated in
/// u = 1/d and the oscillating part by its integration-by-parts series.
/// X = K c with K large enough that even two terms of that series would leave
/// a relative remainder ~ 30 / (K^4 (Gamma t)^4) below 1e-13. `in_band` stops at the window edge pi c / 2l, `value` continues to
/// infinity and `band_residual` shows what the window drops.
inline EtaQuadratureReport eta_numeric(const CavityParams& params, double elapsed, int quadrature_points = 64,
                                       double tolerance = 1e-11, int max_refinements = 10)
{
    if (!(elapsed >= 0.0))
        throw std::domain_error("eta_numeric: elapsed time must be >= 0");
    if (quadrature_points < 64)
        throw std::invalid_argument("eta_numeric: quadrature_points must be >= 64");

    EtaQuadratureReport report;
    report.closed_form = eta_closed(params.gamma_rad(), params.gamma_abs(), elapsed);
    if (elapsed == 0.0) {
        report.converged = true;
        return report;
    }

    const double total = params.total_rate();
    const double c = 0.5 * total;
    const double half_band = 0.5 * params.mode_spacing();
    const double core = std::min(20.0 * total, half_band);
    const double damping = std::exp(-c * elapsed);
    // Once the oscillating term is below double precision it need not be resolved.
    const bool resolve_oscillation = damping > 1e-18;
    const double lifetimes = total * elapsed;
    const double reach =
        resolve_oscillation ? std::clamp(c * std::pow(30.0 / 1e-13, 0.25) / lifetimes, core, half_band) : core;
    const double period = 2.0 * std::numbers::pi / elapsed;
    const auto gl = quadrature::gauss_legendre(8);

    auto near = [&](int level) {
        const double scale = std::ldexp(1.0, -level);
        std::vector<double> edges = quadrature::uniform_edges(0.0, core, core / (quadrature_points / 8) * scale);
        double x = core;
        while (x < reach) {
            double width = x * scale;
            if (resolve_oscillation)
                width = std::min(width, 0.5 * period * scale);
            x = std::min(reach, x + width);
            edges.push_back(x);
        }
        const auto rule = quadrature::composite(gl, edges);
        double sum = 0.0;
        for (std::size_t i = 0; i < rule.size(); ++i)
            sum += rule.weights[i] * filter_kernel_norm(params, rule.nodes[i], elapsed);
        return 2.0 * sum;
    };

    double previous = near(0);
    double inner = previous;
    for (int level = 1; level <= max_refinements; ++level) {
        inner = near(level);
        report.refinements = level;
        if (std::abs(inner - previous) <= tolerance * std::abs(inner)) {
            report.converged = true;
            break;
        }
        previous = inner;
    }

    const double big_a = 1.0 + std::exp(-total * elapsed);
    const double big_b = 2.0 * damping;
    // int_lo^hi dd / (d^2 + c^2) = int_{1/hi}^{1/lo} du / (1 + c^2 u^2)
    auto lorentz = [&](double lo, double hi) {
        const double u_hi = 1.0 / lo;
        const double u_lo = std::isinf(hi) ? 0.0 : 1.0 / hi;
        if (!(u_lo < u_hi))
            return 0.0;
        const auto rule = quadrature::composite(quadrature::gauss_legendre(16), {u_lo, u_hi});
        double sum = 0.0;
        for (std::size_t i = 0; i < rule.size(); ++i) {
            const double cu = c * rule.nodes[i];
            sum += rule.weights[i] / (1.0 + cu * cu);
        }
        return sum;
    };
    // int_x^inf cos(d t) / (d^2 + c^2) dd = Re[-e^{ixt} sum_n g^(n)(x) (-1)^n / (it)^(n+1)],
    // g^(n)(x) = (-1)^n n! Im((x - ic)^-(n+1)) / c. Truncated where the terms stop shrinking.
    auto oscillating = [&](double x) {
        const std::complex<double> z(x, -c);
        const std::complex<double> it(0.0, elapsed);
        std::complex<double> power = 1.0 / z; // (x - ic)^-(n+1)
        std::complex<double> factor = 1.0 / it;   // n! / (it)^(n+1)
        std::complex<double> sum = 0.0;
        double last = std::numeric_limits<double>::infinity();
        for (int n = 0; n < 40; ++n) {
            const std::complex<double> term = power.imag() / c * factor;
            const double size = std::abs(term);
            if (size > last)
                break;
            sum += term;
            last = size;
            if (size <= 1e-17 * std::abs(sum))
                break;
            power /= z;
            factor *= (n + 1.0) / it;
        }
        return (-std::exp(std::complex<double>(0.0, x * elapsed)) * sum).real();
    };
    const double pref = params.gamma_rad() / (2.0 * std::numbers::pi) * 2.0;
    const double bridge = pref * (big_a * lorentz(reach, half_band) - big_b * (oscillating(reach) - oscillating(half_band)));
    report.in_band = inner + bridge;
    report.out_of_band =
        pref * (big_a * lorentz(half_band, std::numeric_limits<double>::infinity()) - big_b * oscillating(half_band));

    report.value = report.in_band + report.out_of_band;
    if (report.closed_form > 0.0) {
        report.relative_error = std::abs(report.value - report.closed_form) / report.closed_form;
        report.band_residual = (report.closed_form - report.in_band) / report.closed_form;
    }
    return report;
}

/// Sampled eta(t). Times must be ascending and non-negative.
struct EfficiencyCurve
{
    std::vector<double> times;
    std::vector<double> values;
    double asymptote = 0.0;
};

inline EfficiencyCurve efficiency_curve(const DecayRates& rates, const std::vector<double>& times)
{
    EfficiencyCurve curve;
    curve.asymptote = eta_asymptote(rates.rad, rates.abs);
    curve.times = times;
    curve.values.reserve(times.size());
    for (std::size_t i = 0; i < times.size(); ++i) {
        if (i > 0 && !(times[i] >= times[i - 1]))
            throw std::invalid_argument("efficiency_curve: times must be ascending");
        curve.values.push_back(eta_closed(rates, times[i]));
    }
    return curve;
}

struct ExtractionQuality
{
    double ratio = 0.0; // eta / (1 - eta)
    bool near_perfect = false;
};

/// eta/(1-eta) >> 1 test. `ratio_threshold` quantifies ">>".
inline ExtractionQuality extraction_quality(double eta, double ratio_threshold = 100.0)
{
    if (!(eta >= 0.0) || !(eta <= 1.0))
        throw std::domain_error("extraction_quality: eta must lie in [0, 1]");
    if (eta == 1.0)
        return {std::numeric_limits<double>::infinity(), true};
    const double ratio = eta / (1.0 - eta);
    return {ratio, ratio >= ratio_threshold};
}

} // namespace qextract
