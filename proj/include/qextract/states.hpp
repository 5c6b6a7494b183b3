#pragma once

// Fock and even Schroedinger-cat states: cavity Wigner functions, their
// closed-form counterparts after lossy extraction, and the thresholds at
// which their nonclassical features survive.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdlib>
#include <memory>
#include <numbers>
#include <stdexcept>
#include <string>
#include <variant>

#include "density_matrix.hpp"
#include "phase_space.hpp"

namespace qextract {

struct FockState
{
    int n = 0;
};

struct CatState
{
    double alpha0 = 1.0; // real, > 0
};

struct ExplicitState
{
    std::shared_ptr<const DensityMatrix> rho;
};

using StateSpec = std::variant<FockState, CatState, ExplicitState>;

inline StateSpec make_fock(int n)
{
    if (n < 0)
        throw std::invalid_argument("Fock photon number must be >= 0");
    return FockState{n};
}

inline StateSpec make_cat(double alpha0)
{
    if (!(alpha0 > 0.0) || !std::isfinite(alpha0))
        throw std::invalid_argument("cat displacement alpha0 must be real and > 0");
    return CatState{alpha0};
}

/// "fock:<n>" or "cat:<alpha0>".
inline StateSpec parse_state(const std::string& text)
{
    const auto colon = text.find(':');
    if (colon == std::string::npos)
        throw std::invalid_argument("state descriptor must be fock:<n> or cat:<alpha0>, got '" + text + "'");
    const std::string kind = text.substr(0, colon);
    const std::string arg = text.substr(colon + 1);
    char* end = nullptr;
    if (kind == "fock") {
        const long n = std::strtol(arg.c_str(), &end, 10);
        if (arg.empty() || *end != '\0' || n > 100000)
            throw std::invalid_argument("bad photon number in '" + text + "'");
        return make_fock(static_cast<int>(n));
    }
    if (kind == "cat") {
        const double a = std::strtod(arg.c_str(), &end);
        if (arg.empty() || *end != '\0')
            throw std::invalid_argument("bad displacement in '" + text + "'");
        return make_cat(a);
    }
    throw std::invalid_argument("unknown state kind '" + kind + "'");
}

inline std::string describe(const StateSpec& spec)
{
    struct Visitor
    {
        std::string operator()(const FockState& f) const { return "fock:" + std::to_string(f.n); }
        std::string operator()(const CatState& c) const { return "cat:" + detail::format_number(c.alpha0); }
        std::string operator()(const ExplicitState& e) const
        {
            return "explicit:dim=" + std::to_string(e.rho ? e.rho->dim() : 0);
        }
    };
    return std::visit(Visitor{}, spec);
}

/// L_n(x) by (k+1) L_{k+1} = (2k+1-x) L_k - k L_{k-1}.
inline double laguerre(int n, double x)
{
    if (n < 0)
        throw std::invalid_argument("laguerre: order must be >= 0");
    double prev = 1.0;
    if (n == 0)
        return prev;
    double cur = 1.0 - x;
    for (int k = 1; k < n; ++k) {
        const double next = ((2.0 * k + 1.0 - x) * cur - k * prev) / (k + 1.0);
        prev = cur;
        cur = next;
    }
    return cur;
}

namespace detail {
inline double fock_support(int n) { return std::sqrt(static_cast<double>(n)) + 6.0; }
} // namespace detail

inline QuasiDistribution fock_wigner(int n)
{
    if (n < 0)
        throw std::invalid_argument("fock_wigner: n must be >= 0");
    const double sign = (n % 2 == 0) ? 1.0 : -1.0;
    return {0.0,
            [n, sign](std::complex<double> alpha) {
                const double r2 = std::norm(alpha);
                return 2.0 / std::numbers::pi * sign * std::exp(-2.0 * r2) * laguerre(n, 4.0 * r2);
            },
            "cavity:fock(" + std::to_string(n) + ")", detail::fock_support(n)};
}

/// Below this |2 eta - 1| the output Fock Wigner function switches to the
/// expanded polynomial in (2 eta - 1), which stays finite at eta = 1/2.
inline constexpr double kHalfEfficiencyBand = 1e-6;

/// (2eta-1)^n L_n(y/(2eta-1)) = sum_k C(n,k) (-y)^k / k! (2eta-1)^(n-k).
inline double scaled_laguerre_expanded(int n, double eps, double y)
{
    double sum = 0.0;
    double term = std::pow(eps, n); // k = 0
    double binom = 1.0;
    double ypow = 1.0;
    double fact = 1.0;
    for (int k = 0; k <= n; ++k) {
        if (k > 0) {
            binom *= static_cast<double>(n - k + 1) / k;
            ypow *= -y;
            fact *= k;
            term = std::pow(eps, n - k);
        }
        sum += binom * ypow / fact * term;
    }
    return sum;
}

inline double fock_output_wigner_value(int n, double eta, std::complex<double> alpha)
{
    const double r2 = std::norm(alpha);
    const double sign = (n % 2 == 0) ? 1.0 : -1.0;
    const double eps = 2.0 * eta - 1.0;
    const double y = 4.0 * eta * r2;
    const double poly = std::abs(eps) < kHalfEfficiencyBand ? scaled_laguerre_expanded(n, eps, y)
                                                            : std::pow(eps, n) * laguerre(n, y / eps);
    return 2.0 / std::numbers::pi * sign * std::exp(-2.0 * r2) * poly;
}

/// Wigner function of the pulse extracted with efficiency eta from |n>.
inline QuasiDistribution fock_output_wigner(int n, double eta)
{
    if (n < 0)
        throw std::invalid_argument("fock_output_wigner: n must be >= 0");
    if (!(eta >= 0.0) || !(eta <= 1.0))
        throw std::domain_error("fock_output_wigner: eta must lie in [0, 1]");
    return {0.0, [n, eta](std::complex<double> alpha) { return fock_output_wigner_value(n, eta, alpha); },
            "output:fock(" + std::to_string(n) + ")@eta=" + detail::format_number(eta), detail::fock_support(n)};
}

/// Minimal efficiency 1 - 1/(2n) for the n-photon component to prevail.
inline double fock_threshold(int n)
{
    if (n < 1)
        throw std::invalid_argument("fock_threshold: defined for n >= 1 (vacuum has no threshold)");
    return 1.0 - 1.0 / (2.0 * n);
}

struct MixtureWeights
{
    double vacuum = 0.0;
    double one_photon = 0.0;
};

/// A single photon extracted with efficiency eta is the mixture (1-eta)|0><0| + eta|1><1|.
inline MixtureWeights single_photon_mixture_weights(double eta)
{
    if (!(eta >= 0.0) || !(eta <= 1.0))
        throw std::domain_error("single_photon_mixture_weights: eta must lie in [0, 1]");
    return {1.0 - eta, eta};
}

/// W_out^(1)(alpha) - [(1-eta) W^(0)(alpha) + eta W^(1)(alpha)].
inline double mixture_residual(double eta, std::complex<double> alpha)
{
    const auto w = single_photon_mixture_weights(eta);
    const double mix = w.vacuum * fock_wigner(0)(alpha) + w.one_photon * fock_wigner(1)(alpha);
    return fock_output_wigner_value(1, eta, alpha) - mix;
}

/// N^2 for N(|a0> + |-a0>): 1 / (2 (1 + exp(-2 a0^2))), since <a0|-a0> = exp(-2 a0^2).
inline double cat_norm_squared(double alpha0)
{
    return 0.5 / (1.0 + std::exp(-2.0 * alpha0 * alpha0));
}

namespace detail {
inline void check_cat(double alpha0)
{
    if (!(alpha0 > 0.0) || !std::isfinite(alpha0))
        throw std::invalid_argument("cat displacement alpha0 must be real and > 0");
}

/// Two displaced Gaussians at +-a plus fringes damped by `damping`.
inline double cat_like_value(double norm2, double a, double fringe_freq, double damping, std::complex<double> alpha)
{
    const double g_plus = std::exp(-2.0 * std::norm(alpha - a));
    const double g_minus = std::exp(-2.0 * std::norm(alpha + a));
    const double fringe = 2.0 * std::exp(-2.0 * std::norm(alpha)) * std::cos(fringe_freq * alpha.imag()) * damping;
    return 2.0 * norm2 / std::numbers::pi * (g_plus + g_minus + fringe);
}
} // namespace detail

inline QuasiDistribution cat_wigner(double alpha0)
{
    detail::check_cat(alpha0);
    const double norm2 = cat_norm_squared(alpha0);
    return {0.0,
            [norm2, alpha0](std::complex<double> alpha) {
                return detail::cat_like_value(norm2, alpha0, 4.0 * alpha0, 1.0, alpha);
            },
            "cavity:cat(" + detail::format_number(alpha0) + ")", alpha0 + 6.0};
}

/// Fringe damping exp(-2 a0^2 (1 - eta)) of the extracted cat.
inline double cat_fringe_damping(double alpha0, double eta)
{
    return std::exp(-2.0 * alpha0 * alpha0 * (1.0 - eta));
}

inline QuasiDistribution cat_output_wigner(double alpha0, double eta)
{
    detail::check_cat(alpha0);
    if (!(eta >= 0.0) || !(eta <= 1.0))
        throw std::domain_error("cat_output_wigner: eta must lie in [0, 1]");
    const double norm2 = cat_norm_squared(alpha0);
    const double root = std::sqrt(eta);
    const double damping = cat_fringe_damping(alpha0, eta);
    return {0.0,
            [norm2, a = root * alpha0, f = 4.0 * root * alpha0, damping](std::complex<double> alpha) {
                return detail::cat_like_value(norm2, a, f, damping, alpha);
            },
            "output:cat(" + detail::format_number(alpha0) + ")@eta=" + detail::format_number(eta), alpha0 + 6.0};
}

struct CatCondition
{
    double margin = 0.0; // (1 - eta) 2 a0^2
    bool satisfied = false;
};

/// Near-perfect cat extraction needs (1 - eta) 2 a0^2 << 1; `margin_threshold` quantifies "<<".
inline CatCondition cat_condition(double alpha0, double eta, double margin_threshold = 0.1)
{
    detail::check_cat(alpha0);
    if (!(eta >= 0.0) || !(eta <= 1.0))
        throw std::domain_error("cat_condition: eta must lie in [0, 1]");
    const double margin = (1.0 - eta) * 2.0 * alpha0 * alpha0;
    return {margin, margin < margin_threshold};
}

/// Smallest eta meeting cat_condition: 1 - threshold / (2 a0^2).
inline double cat_threshold(double alpha0, double margin_threshold = 0.1)
{
    detail::check_cat(alpha0);
    return std::max(0.0, 1.0 - margin_threshold / (2.0 * alpha0 * alpha0));
}

/// Closed-form cavity Wigner function for Fock and cat specs.
inline QuasiDistribution cavity_wigner(const StateSpec& spec)
{
    if (const auto* f = std::get_if<FockState>(&spec))
        return fock_wigner(f->n);
    if (const auto* c = std::get_if<CatState>(&spec))
        return cat_wigner(c->alpha0);
    throw std::invalid_argument("cavity_wigner: no closed form for explicit density matrices");
}

/// Closed-form output Wigner function for Fock and cat specs.
inline QuasiDistribution output_wigner(const StateSpec& spec, double eta)
{
    if (const auto* f = std::get_if<FockState>(&spec))
        return fock_output_wigner(f->n, eta);
    if (const auto* c = std::get_if<CatState>(&spec))
        return cat_output_wigner(c->alpha0, eta);
    throw std::invalid_argument("output_wigner: no closed form for explicit density matrices");
}

} // namespace qextract
