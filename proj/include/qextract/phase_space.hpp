#pragma once

// s-parametrized phase-space functions: order conversion by Gaussian
// smoothing, the extraction transform cavity -> output pulse, and sampled
// grids.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <numbers>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "quadrature.hpp"

namespace qextract {

/// Target order above source order (would need Gaussian de-convolution).
class OrderError : public std::domain_error
{
    using std::domain_error::domain_error;
};

/// The (s0, s, eta) triple violates 1 - s - eta (1 - s0) >= 0.
class ValidityError : public std::domain_error
{
    using std::domain_error::domain_error;
};

/// An s-parametrized quasiprobability P(alpha; s) given by an evaluator.
///
/// `support_radius` bounds the region where |P| is non-negligible (below
/// ~1e-16 of its peak outside); quadratures use it as their window.
struct QuasiDistribution
{
    using Evaluator = std::function<double(std::complex<double>)>;

    double order = 0.0;
    Evaluator evaluate;
    std::string label;
    double support_radius = 8.0;

    double operator()(std::complex<double> alpha) const { return evaluate(alpha); }
};

struct GridSpec
{
    double re_min = -5.0;
    double re_max = 5.0;
    int n_re = 161;
    double im_min = -5.0;
    double im_max = 5.0;
    int n_im = 161;

    void validate() const
    {
        if (n_re < 2 || n_im < 2)
            throw std::invalid_argument("GridSpec: need at least 2 nodes per axis");
        if (!(re_min < re_max) || !(im_min < im_max))
            throw std::invalid_argument("GridSpec: bounds must be ordered (min < max)");
        if (!std::isfinite(re_min) || !std::isfinite(re_max) || !std::isfinite(im_min) || !std::isfinite(im_max))
            throw std::invalid_argument("GridSpec: bounds must be finite");
    }

    double re_step() const { return (re_max - re_min) / (n_re - 1); }
    double im_step() const { return (im_max - im_min) / (n_im - 1); }
    double re(int i) const { return i == n_re - 1 ? re_max : re_min + i * re_step(); }
    double im(int j) const { return j == n_im - 1 ? im_max : im_min + j * im_step(); }
    std::complex<double> node(int i, int j) const { return {re(i), im(j)}; }
    std::size_t size() const { return static_cast<std::size_t>(n_re) * static_cast<std::size_t>(n_im); }

    static GridSpec square(double half_width, int n) { return {-half_width, half_width, n, -half_width, half_width, n}; }
};

/// Parses "remin:remax:n,immin:immax:n".
inline GridSpec parse_grid_spec(const std::string& text)
{
    GridSpec g;
    char tail = 0;
    if (std::sscanf(text.c_str(), "%lf:%lf:%d,%lf:%lf:%d%c", &g.re_min, &g.re_max, &g.n_re, &g.im_min, &g.im_max,
                    &g.n_im, &tail) != 6)
        throw std::invalid_argument("grid spec must look like remin:remax:n,immin:immax:n, got '" + text + "'");
    g.validate();
    return g;
}

struct GridMetadata
{
    double order = 0.0;
    std::string label;
    std::optional<double> eta;
    std::optional<double> elapsed;
    std::string path = "analytic";
};

/// Row-major samples: values[j * n_re + i] is the value at (re(i), im(j)).
struct PhaseGrid
{
    GridSpec spec;
    std::vector<double> values;
    GridMetadata metadata;
    std::vector<std::string> warnings;

    double at(int i, int j) const { return values[static_cast<std::size_t>(j) * spec.n_re + i]; }
    double& at(int i, int j) { return values[static_cast<std::size_t>(j) * spec.n_re + i]; }

    double min() const { return *std::min_element(values.begin(), values.end()); }
    double max() const { return *std::max_element(values.begin(), values.end()); }
};

inline PhaseGrid evaluate_on_grid(const QuasiDistribution& p, const GridSpec& spec)
{
    spec.validate();
    PhaseGrid grid;
    grid.spec = spec;
    grid.metadata.order = p.order;
    grid.metadata.label = p.label;
    grid.values.resize(spec.size());
    for (int j = 0; j < spec.n_im; ++j)
        for (int i = 0; i < spec.n_re; ++i)
            grid.at(i, j) = p(spec.node(i, j));
    return grid;
}

/// Trapezoidal integral of the grid over its rectangle.
inline double grid_integral(const PhaseGrid& grid)
{
    const auto& s = grid.spec;
    double sum = 0.0;
    for (int j = 0; j < s.n_im; ++j) {
        const double wj = (j == 0 || j == s.n_im - 1) ? 0.5 : 1.0;
        for (int i = 0; i < s.n_re; ++i) {
            const double wi = (i == 0 || i == s.n_re - 1) ? 0.5 : 1.0;
            sum += wi * wj * grid.at(i, j);
        }
    }
    return sum * s.re_step() * s.im_step();
}

inline double max_abs_difference(const PhaseGrid& a, const PhaseGrid& b)
{
    if (a.values.size() != b.values.size())
        throw std::invalid_argument("max_abs_difference: grid sizes differ");
    double m = 0.0;
    for (std::size_t k = 0; k < a.values.size(); ++k)
        m = std::max(m, std::abs(a.values[k] - b.values[k]));
    return m;
}

struct SmoothingOptions
{
    /// Gauss-Hermite nodes per axis; 0 picks a count from the kernel width.
    int hermite_nodes = 0;
};

namespace detail {
inline std::string format_number(double x)
{
    std::ostringstream os;
    os << x;
    return os.str();
}

inline int hermite_nodes_for(double order_gap, const SmoothingOptions& opts)
{
    if (opts.hermite_nodes > 0)
        return opts.hermite_nodes;
    return std::clamp(static_cast<int>(std::lround(24.0 + 40.0 * order_gap)), 24, 160);
}
} // namespace detail

/// Smooths `p` down to order `target_s`:
///   P(a; s) = 2/(pi (s'-s)) int d^2b P(b; s') exp(-2|b - a|^2 / (s'-s)).
/// The integral uses tensor Gauss-Hermite nodes centred on the kernel.
inline QuasiDistribution convert_s_order(const QuasiDistribution& p, double target_s, const SmoothingOptions& opts = {})
{
    if (target_s > p.order)
        throw OrderError("convert_s_order: target order " + detail::format_number(target_s) +
                         " exceeds source order " + detail::format_number(p.order));
    if (target_s == p.order)
        return p;

    const double gap = p.order - target_s;
    const auto rule = quadrature::gauss_hermite(detail::hermite_nodes_for(gap, opts));
    const double scale = std::sqrt(0.5 * gap);

    QuasiDistribution out;
    out.order = target_s;
    out.label = p.label + "|s=" + detail::format_number(target_s);
    out.support_radius = p.support_radius + 3.0 * std::sqrt(gap);
    out.evaluate = [src = p.evaluate, rule, scale](std::complex<double> alpha) {
        double sum = 0.0;
        for (std::size_t j = 0; j < rule.size(); ++j) {
            double row = 0.0;
            for (std::size_t i = 0; i < rule.size(); ++i)
                row += rule.weights[i] * src(alpha + std::complex<double>(scale * rule.nodes[i], scale * rule.nodes[j]));
            sum += rule.weights[j] * row;
        }
        return sum / std::numbers::pi;
    };
    return out;
}

/// s' = 1 - (1 - s)/eta: the cavity order whose rescaled copy is the output at order s.
inline double source_order_for(double eta, double target_s)
{
    return 1.0 - (1.0 - target_s) / eta;
}

/// 1 - s - eta (1 - s0); must be >= 0 for the output at order s to exist.
inline double extraction_width(double cavity_order, double eta, double target_s)
{
    return 1.0 - target_s - eta * (1.0 - cavity_order);
}

namespace detail {
inline void check_efficiency(double eta)
{
    if (!(eta > 0.0) || !(eta <= 1.0))
        throw std::domain_error("efficiency must satisfy 0 < eta <= 1, got " + format_number(eta));
}
} // namespace detail

/// Output-pulse distribution at order `target_s` for a cavity prepared in `cavity`:
///   P_out(a; s) = P_cav(a / sqrt(eta); s') / eta,  s' = 1 - (1 - s)/eta.
/// When s' is below the cavity's order the cavity distribution is first
/// smoothed to s'; s' above it means the requested order is unreachable.
inline QuasiDistribution extract_state(const QuasiDistribution& cavity, double eta, double target_s,
                                       const SmoothingOptions& opts = {})
{
    detail::check_efficiency(eta);
    const double s_prime = source_order_for(eta, target_s);
    if (s_prime > cavity.order + 1e-14)
        throw ValidityError("extract_state: 1 - s - eta(1 - s0) = " +
                            detail::format_number(extraction_width(cavity.order, eta, target_s)) + " < 0");
    const QuasiDistribution source =
        std::abs(s_prime - cavity.order) <= 1e-14 ? cavity : convert_s_order(cavity, s_prime, opts);

    QuasiDistribution out;
    out.order = target_s;
    out.label = "output:" + cavity.label + "@eta=" + detail::format_number(eta);
    out.support_radius = source.support_radius;
    const double root = std::sqrt(eta);
    out.evaluate = [src = source.evaluate, eta, root](std::complex<double> alpha) { return src(alpha / root) / eta; };
    return out;
}

struct ConvolutionOptions
{
    /// Upper bound on Gauss-Legendre panel width in the cavity-plane variable.
    double max_panel_width = 0.125;
    int nodes_per_panel = 8;
    /// Relative boundary magnitude above which a tail-mass warning is attached.
    double tail_tolerance = 1e-12;
};

/// Output grid at order `target_s` by direct quadrature of
///   P_out(a; s) = 2/(pi D) int d^2b P_cav(b; s0) exp(-2|sqrt(eta) b - a|^2 / D),
///   D = 1 - s - eta (1 - s0) > 0.
///
/// The kernel factorizes over Re/Im, so the cavity function is sampled once
/// on a tensor composite Gauss-Legendre mesh over its support square and the
/// two axis contractions are matrix products. Panels are no wider than the
/// kernel's standard deviation in the cavity plane.
inline PhaseGrid convolve_extraction(const QuasiDistribution& cavity, double eta, double target_s, const GridSpec& spec,
                                     const ConvolutionOptions& opts = {})
{
    spec.validate();
    detail::check_efficiency(eta);
    const double width = extraction_width(cavity.order, eta, target_s);
    if (width < 0.0)
        throw ValidityError("convolve_extraction: 1 - s - eta(1 - s0) = " + detail::format_number(width) + " < 0");
    if (width == 0.0)
        throw ValidityError("convolve_extraction: zero-width kernel is a limit; use extract_state");

    const double root = std::sqrt(eta);
    const double sigma = std::sqrt(width / (4.0 * eta)); // kernel std dev per axis in the cavity plane
    const double radius = cavity.support_radius;
    const double panel = std::min(sigma, opts.max_panel_width);
    const auto gl = quadrature::gauss_legendre(opts.nodes_per_panel);

    auto axis_rule = [&](double lo, double hi) {
        const double a = std::max(-radius, lo / root - 9.0 * sigma);
        const double b = std::min(radius, hi / root + 9.0 * sigma);
        if (!(a < b))
            return quadrature::Rule{};
        return quadrature::composite(gl, quadrature::uniform_edges(a, b, panel));
    };
    const auto rx = axis_rule(spec.re_min, spec.re_max);
    const auto ry = axis_rule(spec.im_min, spec.im_max);

    PhaseGrid grid;
    grid.spec = spec;
    grid.metadata.order = target_s;
    grid.metadata.label = "output:" + cavity.label + "@eta=" + detail::format_number(eta);
    grid.metadata.eta = eta;
    grid.metadata.path = "convolution";
    grid.values.assign(spec.size(), 0.0);
    if (rx.size() == 0 || ry.size() == 0)
        return grid;

    const Eigen::Index nx = static_cast<Eigen::Index>(rx.size());
    const Eigen::Index ny = static_cast<Eigen::Index>(ry.size());
    Eigen::MatrixXd samples(nx, ny);
    for (Eigen::Index j = 0; j < ny; ++j)
        for (Eigen::Index i = 0; i < nx; ++i)
            samples(i, j) = cavity({rx.nodes[i], ry.nodes[j]});

    const double k = 2.0 * eta / width;
    auto kernel = [&](const quadrature::Rule& r, int n, auto coord) {
        Eigen::MatrixXd m(n, static_cast<Eigen::Index>(r.size()));
        for (int a = 0; a < n; ++a) {
            const double centre = coord(a) / root;
            for (std::size_t i = 0; i < r.size(); ++i) {
                const double d = r.nodes[i] - centre;
                m(a, static_cast<Eigen::Index>(i)) = r.weights[i] * std::exp(-k * d * d);
            }
        }
        return m;
    };
    const Eigen::MatrixXd kx = kernel(rx, spec.n_re, [&](int i) { return spec.re(i); });
    const Eigen::MatrixXd ky = kernel(ry, spec.n_im, [&](int j) { return spec.im(j); });
    const Eigen::MatrixXd out = (kx * samples) * ky.transpose(); // n_re x n_im

    const double prefactor = 2.0 / (std::numbers::pi * width);
    for (int j = 0; j < spec.n_im; ++j)
        for (int i = 0; i < spec.n_re; ++i)
            grid.at(i, j) = prefactor * out(i, j);

    // Tail check: the cavity function on the edge of its support square.
    double edge = 0.0;
    for (int t = 0; t <= 64; ++t) {
        const double x = -radius + 2.0 * radius * t / 64.0;
        for (const auto z : {std::complex<double>(x, -radius), std::complex<double>(x, radius),
                             std::complex<double>(-radius, x), std::complex<double>(radius, x)})
            edge = std::max(edge, std::abs(cavity(z)));
    }
    const double peak = samples.cwiseAbs().maxCoeff();
    if (peak > 0.0 && edge > opts.tail_tolerance * peak)
        grid.warnings.push_back("cavity distribution has relative magnitude " + detail::format_number(edge / peak) +
                                " on the edge of its support window; output may miss tail mass");
    return grid;
}

/// Wigner-to-Wigner form (s = s0 = 0), kernel variance (1 - eta)/4. Requires 0 < eta < 1.
inline PhaseGrid wigner_convolution(const QuasiDistribution& cavity_wigner, double eta, const GridSpec& spec,
                                    const ConvolutionOptions& opts = {})
{
    if (cavity_wigner.order != 0.0)
        throw OrderError("wigner_convolution: cavity distribution must be a Wigner function (s = 0)");
    if (eta == 1.0)
        throw std::domain_error("wigner_convolution: eta = 1 is the delta-kernel limit; use extract_state");
    if (!(eta > 0.0) || !(eta < 1.0))
        throw std::domain_error("wigner_convolution: need 0 < eta < 1");
    return convolve_extraction(cavity_wigner, eta, 0.0, spec, opts);
}

} // namespace qextract
