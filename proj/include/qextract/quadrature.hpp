#pragma once

// Fixed-order Gauss rules used by the phase-space and cavity modules.

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <utility>
#include <vector>

namespace qextract::quadrature {

struct Rule
{
    std::vector<double> nodes;
    std::vector<double> weights;

    std::size_t size() const { return nodes.size(); }
};

/// n-point Gauss-Legendre rule on [-1, 1], Newton iteration on P_n.
inline Rule gauss_legendre(int n)
{
    if (n < 1)
        throw std::invalid_argument("gauss_legendre: n must be >= 1");
    Rule r;
    r.nodes.resize(n);
    r.weights.resize(n);
    const int m = (n + 1) / 2;
    for (int i = 0; i < m; ++i) {
        double z = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p1 = 1.0, p2 = 0.0;
            for (int j = 0; j < n; ++j) {
                const double p3 = p2;
                p2 = p1;
                p1 = ((2.0 * j + 1.0) * z * p2 - j * p3) / (j + 1.0);
            }
            dp = n * (z * p1 - p2) / (z * z - 1.0);
            const double dz = p1 / dp;
            z -= dz;
            if (std::abs(dz) < 1e-15)
                break;
        }
        r.nodes[i] = -z;
        r.nodes[n - 1 - i] = z;
        r.weights[i] = r.weights[n - 1 - i] = 2.0 / ((1.0 - z * z) * dp * dp);
    }
    return r;
}

/// n-point Gauss-Hermite rule for the weight exp(-x^2) on the real line.
///
/// Uses orthonormal Hermite recurrences so that n in the low hundreds stays
/// in range; initial guesses follow the usual asymptotic placement.
inline Rule gauss_hermite(int n)
{
    if (n < 1)
        throw std::invalid_argument("gauss_hermite: n must be >= 1");
    Rule r;
    r.nodes.resize(n);
    r.weights.resize(n);
    const double pim4 = 1.0 / std::pow(std::numbers::pi, 0.25);
    const int m = (n + 1) / 2;
    double z = 0.0;
    for (int i = 0; i < m; ++i) {
        if (i == 0)
            z = std::sqrt(2.0 * n + 1.0) - 1.85575 * std::pow(2.0 * n + 1.0, -1.0 / 6.0);
        else if (i == 1)
            z -= 1.14 * std::pow(static_cast<double>(n), 0.426) / z;
        else if (i == 2)
            z = 1.86 * z - 0.86 * r.nodes[0];
        else if (i == 3)
            z = 1.91 * z - 0.91 * r.nodes[1];
        else
            z = 2.0 * z - r.nodes[i - 2];
        double pp = 0.0;
        for (int iter = 0; iter < 200; ++iter) {
            double p1 = pim4, p2 = 0.0;
            for (int j = 0; j < n; ++j) {
                const double p3 = p2;
                p2 = p1;
                p1 = z * std::sqrt(2.0 / (j + 1)) * p2 - std::sqrt(static_cast<double>(j) / (j + 1)) * p3;
            }
            pp = std::sqrt(2.0 * n) * p2;
            const double dz = p1 / pp;
            z -= dz;
            if (std::abs(dz) < 1e-15 * std::max(1.0, std::abs(z)))
                break;
        }
        r.nodes[i] = z;
        r.nodes[n - 1 - i] = -z;
        r.weights[i] = r.weights[n - 1 - i] = 2.0 / (pp * pp);
    }
    // Newton above fills from the largest node down; store ascending.
    for (int i = 0; i < n / 2; ++i) {
        std::swap(r.nodes[i], r.nodes[n - 1 - i]);
        std::swap(r.weights[i], r.weights[n - 1 - i]);
    }
    return r;
}

/// Composite rule: `rule` mapped onto each panel [edges[k], edges[k+1]].
inline Rule composite(const Rule& rule, const std::vector<double>& edges)
{
    Rule out;
    if (edges.size() < 2)
        return out;
    out.nodes.reserve(rule.size() * (edges.size() - 1));
    out.weights.reserve(out.nodes.capacity());
    for (std::size_t k = 0; k + 1 < edges.size(); ++k) {
        const double mid = 0.5 * (edges[k] + edges[k + 1]);
        const double half = 0.5 * (edges[k + 1] - edges[k]);
        for (std::size_t i = 0; i < rule.size(); ++i) {
            out.nodes.push_back(mid + half * rule.nodes[i]);
            out.weights.push_back(half * rule.weights[i]);
        }
    }
    return out;
}

/// Uniform panel edges covering [a, b] with panels no wider than max_width.
inline std::vector<double> uniform_edges(double a, double b, double max_width)
{
    const auto panels = std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil((b - a) / max_width)));
    std::vector<double> edges(panels + 1);
    for (std::size_t k = 0; k <= panels; ++k)
        edges[k] = a + (b - a) * static_cast<double>(k) / static_cast<double>(panels);
    return edges;
}

} // namespace qextract::quadrature
