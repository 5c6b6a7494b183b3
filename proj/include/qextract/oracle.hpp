#pragma once

// Brute-force reference path: truncated Fock-basis states, the transmittance-eta
// loss channel in Kraus form, and phase-space functions from displaced parity.
// Shares no formulas with states.hpp / phase_space.hpp beyond the grid types.

#include <array>
#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "density_matrix.hpp"
#include "phase_space.hpp"
#include "states.hpp"

namespace qextract::oracle {

namespace detail {
/// log(n!), exact table up to 20 and lgamma beyond.
inline double log_factorial(int n)
{
    static constexpr std::array<double, 21> table = [] {
        std::array<double, 21> t{};
        double f = 1.0;
        for (int i = 0; i <= 20; ++i) {
            if (i > 0)
                f *= i;
            t[static_cast<std::size_t>(i)] = f;
        }
        return t;
    }();
    if (n < 0)
        throw std::invalid_argument("log_factorial: negative argument");
    if (n <= 20)
        return std::log(table[static_cast<std::size_t>(n)]);
    return std::lgamma(n + 1.0);
}

inline double log_binomial(int n, int k)
{
    return log_factorial(n) - log_factorial(k) - log_factorial(n - k);
}
} // namespace detail

/// Fock cutoff keeping the cat truncation error below 1e-10 for a0 <= 3.
inline int cat_cutoff(double alpha0)
{
    return static_cast<int>(std::ceil(alpha0 * alpha0 + 10.0 * std::abs(alpha0) + 20.0));
}

inline int default_cutoff(const StateSpec& spec)
{
    if (const auto* f = std::get_if<FockState>(&spec))
        return f->n + 1;
    if (const auto* c = std::get_if<CatState>(&spec))
        return cat_cutoff(c->alpha0);
    return std::get<ExplicitState>(spec).rho->dim();
}

/// Truncated density matrix for `spec` in dimension `cutoff`.
inline DensityMatrix build_state(const StateSpec& spec, int cutoff, double max_norm_deficit = 1e-10)
{
    if (const auto* f = std::get_if<FockState>(&spec)) {
        if (cutoff <= f->n)
            throw std::invalid_argument("build_state: cutoff must exceed the photon number");
        return DensityMatrix::fock(f->n, cutoff);
    }
    if (const auto* c = std::get_if<CatState>(&spec)) {
        const double a = c->alpha0;
        if (cutoff < 1)
            throw std::invalid_argument("build_state: cutoff must be positive");
        // Coherent amplitudes a^k e^{-a^2/2} / sqrt(k!); |a> + |-a> keeps the even k twice.
        Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(cutoff);
        double poisson_mass = 0.0;
        for (int k = 0; k < cutoff; ++k) {
            const double log_amp = k * std::log(a) - 0.5 * a * a - 0.5 * detail::log_factorial(k);
            const double amp = std::exp(log_amp);
            poisson_mass += amp * amp;
            if (k % 2 == 0)
                psi(k) = 2.0 * amp;
        }
        const double deficit = 1.0 - poisson_mass;
        if (deficit > max_norm_deficit)
            throw std::invalid_argument("build_state: cutoff " + std::to_string(cutoff) +
                                        " too small for cat state, truncated norm deficit " + std::to_string(deficit));
        psi /= psi.norm();
        return DensityMatrix::pure(psi);
    }
    return *std::get<ExplicitState>(spec).rho;
}

/// rho' = sum_k A_k rho A_k^dagger, <m-k|A_k|m> = sqrt(C(m,k)) eta^{(m-k)/2} (1-eta)^{k/2}.
inline DensityMatrix loss_channel(const DensityMatrix& rho, double eta)
{
    if (!(eta >= 0.0) || !(eta <= 1.0))
        throw std::domain_error("loss_channel: eta must lie in [0, 1]");
    const int d = rho.dim();
    const auto& in = rho.elements();
    DensityMatrix::Matrix out = DensityMatrix::Matrix::Zero(d, d);
    // Kraus element squared amplitudes: coeff(m, k) = C(m, k) eta^{m-k} (1-eta)^k, stored as sqrt.
    auto amp = [eta](int m, int k) {
        const double p = std::exp(detail::log_binomial(m, k)) * std::pow(eta, m - k) * std::pow(1.0 - eta, k);
        return std::sqrt(p);
    };
    for (int k = 0; k < d; ++k)
        for (int a = 0; a + k < d; ++a)
            for (int b = 0; b + k < d; ++b)
                out(a, b) += amp(a + k, k) * amp(b + k, k) * in(a + k, b + k);
    // Exact symmetrization removes rounding asymmetry before validation.
    out = 0.5 * (out + out.adjoint()).eval();
    return DensityMatrix(std::move(out));
}

/// Displaced-parity matrix elements are only trustworthy for |alpha|^2 <= dim / 4.
inline bool reconstruction_reliable(const DensityMatrix& rho, std::complex<double> alpha)
{
    return std::norm(alpha) <= rho.dim() / 4.0;
}

/// s-parametrized phase-space function of rho at alpha (s < 1; s = 0 is Wigner, s = -1 Husimi).
///
/// P(alpha; s) = sum_{m,n} rho_{mn} E_{mn}(alpha; s), where for m = n + k
///   E_{mn} = 2/(pi(1-s)) r^n sqrt(n!/m!) (2 conj(alpha)/(1-s))^k
///            exp(-2|alpha|^2/(1-s)) L_n^{(k)}(4|alpha|^2/(1-s^2)),
/// r = (s+1)/(s-1), and E_{nm} = conj(E_{mn}). The factor r^n L_n^{(k)} is
/// carried through its own three-term recurrence so s = -1 stays finite.
inline double wigner_from_density_matrix(const DensityMatrix& rho, std::complex<double> alpha, double s = 0.0)
{
    if (!(s < 1.0))
        throw std::domain_error("wigner_from_density_matrix: order s must be < 1");
    const int d = rho.dim();
    const auto& el = rho.elements();
    const double r2 = std::norm(alpha);
    const double one_minus_s = 1.0 - s;
    const double ratio = (s + 1.0) / (s - 1.0);
    const double q = 4.0 * r2 / (one_minus_s * one_minus_s);
    const double mag = std::abs(alpha);
    const std::complex<double> phase = mag > 0.0 ? std::conj(alpha) / mag : std::complex<double>(1.0, 0.0);
    const double log_base = std::log(2.0 / (std::numbers::pi * one_minus_s)) - 2.0 * r2 / one_minus_s;
    const double log_ratio_arg = mag > 0.0 ? std::log(2.0 * mag / one_minus_s) : -INFINITY;

    std::complex<double> total = 0.0;
    std::vector<double> scaled(static_cast<std::size_t>(d));
    for (int k = 0; k < d; ++k) {
        bool any = false;
        for (int n = 0; n + k < d && !any; ++n)
            any = el(n + k, n) != 0.0 || el(n, n + k) != 0.0;
        if (!any || (k > 0 && mag == 0.0))
            continue;
        // scaled[n] = r^n L_n^{(k)}(x)
        scaled[0] = 1.0;
        if (d - k > 1)
            scaled[1] = ratio * (1.0 + k) + q;
        for (int n = 1; n + 1 < d - k; ++n)
            scaled[static_cast<std::size_t>(n) + 1] =
                (((2.0 * n + 1.0 + k) * ratio + q) * scaled[static_cast<std::size_t>(n)] -
                 ratio * ratio * (n + k) * scaled[static_cast<std::size_t>(n) - 1]) /
                (n + 1.0);
        const std::complex<double> phase_k = std::pow(phase, k);
        for (int n = 0; n + k < d; ++n) {
            const int m = n + k;
            const double log_pref =
                log_base + 0.5 * (detail::log_factorial(n) - detail::log_factorial(m)) + (k > 0 ? k * log_ratio_arg : 0.0);
            const std::complex<double> e_mn = std::exp(log_pref) * scaled[static_cast<std::size_t>(n)] * phase_k;
            total += el(m, n) * e_mn;
            if (k > 0)
                total += el(n, m) * std::conj(e_mn);
        }
    }
    if (std::abs(total.imag()) > 1e-10)
        throw std::runtime_error("wigner_from_density_matrix: imaginary residue " + std::to_string(total.imag()));
    return total.real();
}

inline PhaseGrid oracle_grid(const DensityMatrix& rho, const GridSpec& spec, double s = 0.0)
{
    spec.validate();
    PhaseGrid grid;
    grid.spec = spec;
    grid.metadata.order = s;
    grid.metadata.path = "oracle";
    grid.values.resize(spec.size());
    bool outside = false;
    for (int j = 0; j < spec.n_im; ++j)
        for (int i = 0; i < spec.n_re; ++i) {
            const auto alpha = spec.node(i, j);
            outside = outside || !reconstruction_reliable(rho, alpha);
            grid.at(i, j) = wigner_from_density_matrix(rho, alpha, s);
        }
    if (outside)
        grid.warnings.push_back("grid extends beyond |alpha|^2 = dim/4 = " + std::to_string(rho.dim() / 4.0) +
                                "; values there rely on the truncated state being exact");
    return grid;
}

/// Output distribution for `spec` after extraction with efficiency eta, oracle route.
inline PhaseGrid extracted_grid(const StateSpec& spec, double eta, const GridSpec& grid, double s = 0.0, int cutoff = 0)
{
    const DensityMatrix rho = loss_channel(build_state(spec, cutoff > 0 ? cutoff : default_cutoff(spec)), eta);
    PhaseGrid g = oracle_grid(rho, grid, s);
    g.metadata.label = "output:" + describe(spec) + "@eta=" + qextract::detail::format_number(eta);
    g.metadata.eta = eta;
    return g;
}

} // namespace qextract::oracle
