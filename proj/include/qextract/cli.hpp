#pragma once

// Command implementations behind the `qextract` executable. Kept in a header
// so the acceptance and CLI tests can drive them in-process.
//
// Exit codes:
//   0  success
//   2  invalid configuration
//   3  frequency quadrature did not converge
//   4  requested order/efficiency violates 1 - s - eta (1 - s0) >= 0
//   5  filesystem error

#include <cmath>
#include <complex>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>
#include <openssl/evp.h>

#include "cavity.hpp"
#include "oracle.hpp"
#include "phase_space.hpp"
#include "states.hpp"

namespace qextract::cli {

inline constexpr const char* kToolVersion = "0.1.0";

enum ExitCode : int
{
    kOk = 0,
    kInvalidConfig = 2,
    kNoConvergence = 3,
    kValidity = 4,
    kFilesystem = 5,
};

class CliError : public std::runtime_error
{
public:
    CliError(int code, const std::string& what) : std::runtime_error(what), code_(code) {}
    int code() const { return code_; }

private:
    int code_;
};

enum class ComputePath
{
    analytic,
    convolution,
    oracle,
};

inline const char* to_string(ComputePath p)
{
    switch (p) {
    case ComputePath::analytic: return "analytic";
    case ComputePath::convolution: return "convolution";
    case ComputePath::oracle: return "oracle";
    }
    return "?";
}

struct CavityInput
{
    double length = 0.0;
    std::complex<double> transmission;
    std::complex<double> absorption;
    double mode_frequency = 0.0;
    double light_speed = kVacuumLightSpeed;
};

/// Exactly one of: explicit eta, rates + elapsed, cavity + elapsed.
struct EfficiencySource
{
    std::optional<double> eta;
    std::optional<double> gamma_rad;
    std::optional<double> gamma_abs;
    std::optional<double> elapsed;
    std::optional<CavityInput> cavity;
};

struct ScenarioConfig
{
    std::string state;
    EfficiencySource efficiency;
    double s = 0.0;
    GridSpec grid;
    std::string format = "csv";
    std::string out;
    ComputePath path = ComputePath::analytic;
    bool numeric = false;
    int samples = 11;
    double ratio_threshold = 100.0;
    double margin_threshold = 0.1;
};

/// "re" or "re,im".
inline std::complex<double> parse_complex(const std::string& text)
{
    double re = 0.0, im = 0.0;
    char tail = 0;
    const int got = std::sscanf(text.c_str(), "%lf,%lf%c", &re, &im, &tail);
    if (got == 2 || (got == 1 && text.find(',') == std::string::npos))
        return {re, im};
    throw CliError(kInvalidConfig, "expected a real number or 're,im', got '" + text + "'");
}

inline std::string format_double(double x)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x == 0.0 ? 0.0 : x); // no "-0"
    return buf;
}

struct ResolvedEfficiency
{
    double eta = 0.0;
    std::optional<DecayRates> rates;
    std::optional<double> elapsed;
    std::vector<std::string> warnings;
};

inline std::optional<CavityParams> make_cavity(const EfficiencySource& src)
{
    if (!src.cavity)
        return std::nullopt;
    const auto& c = *src.cavity;
    try {
        return CavityParams(c.length, c.transmission, c.absorption, c.mode_frequency, c.light_speed);
    } catch (const std::invalid_argument& e) {
        throw CliError(kInvalidConfig, e.what());
    }
}

/// Rates from either the explicit rate flags or the cavity description.
inline std::optional<DecayRates> resolve_rates(const EfficiencySource& src, std::vector<std::string>* warnings = nullptr)
{
    const bool has_rates = src.gamma_rad.has_value() || src.gamma_abs.has_value();
    if (has_rates && src.cavity)
        throw CliError(kInvalidConfig, "give either --gamma-rad/--gamma-abs or cavity parameters, not both");
    if (has_rates) {
        if (!src.gamma_rad || !src.gamma_abs)
            throw CliError(kInvalidConfig, "--gamma-rad and --gamma-abs must be given together");
        if (!(*src.gamma_rad > 0.0) || !(*src.gamma_abs >= 0.0))
            throw CliError(kInvalidConfig, "need gamma_rad > 0 and gamma_abs >= 0");
        return DecayRates{*src.gamma_rad, *src.gamma_abs};
    }
    if (auto cav = make_cavity(src)) {
        if (warnings)
            for (auto& w : cav->regime_warnings())
                warnings->push_back(w);
        return decay_rates(*cav);
    }
    return std::nullopt;
}

inline ResolvedEfficiency resolve_efficiency(const EfficiencySource& src)
{
    ResolvedEfficiency r;
    const bool has_eta = src.eta.has_value();
    const bool has_dynamic = src.gamma_rad || src.gamma_abs || src.cavity;
    if (has_eta == has_dynamic)
        throw CliError(kInvalidConfig,
                       "give exactly one efficiency mode: --eta, or rates/cavity parameters with --elapsed");
    if (has_eta) {
        if (src.elapsed)
            throw CliError(kInvalidConfig, "--elapsed has no meaning together with --eta");
        if (!(*src.eta >= 0.0) || !(*src.eta <= 1.0))
            throw CliError(kInvalidConfig, "--eta must lie in [0, 1]");
        r.eta = *src.eta;
        return r;
    }
    r.rates = resolve_rates(src, &r.warnings);
    if (!src.elapsed)
        throw CliError(kInvalidConfig, "--elapsed is required with rates or cavity parameters");
    if (!(*src.elapsed >= 0.0))
        throw CliError(kInvalidConfig, "--elapsed must be >= 0");
    r.elapsed = *src.elapsed;
    r.eta = eta_closed(*r.rates, *src.elapsed);
    return r;
}

inline StateSpec resolve_state(const std::string& text)
{
    if (text.empty())
        throw CliError(kInvalidConfig, "--state is required");
    try {
        return parse_state(text);
    } catch (const std::invalid_argument& e) {
        throw CliError(kInvalidConfig, e.what());
    }
}

// ---------------------------------------------------------------------------
// eta

inline void cmd_eta(const ScenarioConfig& cfg, std::ostream& out, std::ostream& err)
{
    if (cfg.efficiency.eta)
        throw CliError(kInvalidConfig, "eta needs rates or cavity parameters, not --eta");
    std::vector<std::string> warnings;
    const auto rates = resolve_rates(cfg.efficiency, &warnings);
    if (!rates)
        throw CliError(kInvalidConfig, "eta needs --gamma-rad/--gamma-abs or cavity parameters");
    if (!cfg.efficiency.elapsed || !(*cfg.efficiency.elapsed >= 0.0))
        throw CliError(kInvalidConfig, "eta needs --elapsed >= 0 (end of the time range)");
    if (cfg.samples < 2)
        throw CliError(kInvalidConfig, "--samples must be >= 2");
    const auto cavity = make_cavity(cfg.efficiency);
    if (cfg.numeric && !cavity)
        throw CliError(kInvalidConfig, "--numeric needs cavity parameters (--length, --transmission, ...)");

    std::vector<double> times(static_cast<std::size_t>(cfg.samples));
    for (int i = 0; i < cfg.samples; ++i)
        times[static_cast<std::size_t>(i)] = *cfg.efficiency.elapsed * i / (cfg.samples - 1);
    const auto curve = efficiency_curve(*rates, times);

    std::vector<EtaQuadratureReport> numeric;
    if (cfg.numeric) {
        for (double t : times) {
            numeric.push_back(eta_numeric(*cavity, t));
            if (!numeric.back().converged)
                throw CliError(kNoConvergence, "frequency quadrature did not converge at t = " + format_double(t));
        }
    }
    for (const auto& w : warnings)
        err << "warning: " << w << "\n";

    if (cfg.format == "json") {
        nlohmann::json doc;
        doc["metadata"] = {{"gamma_rad", rates->rad},     {"gamma_abs", rates->abs},
                           {"asymptote", curve.asymptote}, {"samples", cfg.samples},
                           {"numeric", cfg.numeric},       {"tool_version", kToolVersion},
                           {"warnings", warnings}};
        auto rows = nlohmann::json::array();
        for (std::size_t i = 0; i < times.size(); ++i) {
            nlohmann::json row = {{"t", times[i]}, {"eta_closed", curve.values[i]}};
            if (cfg.numeric) {
                row["eta_numeric"] = numeric[i].value;
                row["eta_in_band"] = numeric[i].in_band;
                row["relative_error"] = numeric[i].relative_error;
                row["band_residual"] = numeric[i].band_residual;
            }
            rows.push_back(row);
        }
        doc["rows"] = rows;
        out << doc.dump(2) << "\n";
        return;
    }
    out << (cfg.numeric ? "t,eta_closed,eta_numeric\n" : "t,eta_closed\n");
    for (std::size_t i = 0; i < times.size(); ++i) {
        out << format_double(times[i]) << ',' << format_double(curve.values[i]);
        if (cfg.numeric)
            out << ',' << format_double(numeric[i].value);
        out << '\n';
    }
}

// ---------------------------------------------------------------------------
// wigner

/// Output distribution on the configured grid along the chosen computation path.
inline PhaseGrid compute_output_grid(const StateSpec& spec, double eta, double s, const GridSpec& grid,
                                     ComputePath path)
{
    if (!(s < 1.0))
        throw CliError(kInvalidConfig, "--s must be < 1 (the P function is not representable)");
    PhaseGrid result;
    try {
        switch (path) {
        case ComputePath::analytic:
            if (s == 0.0)
                result = evaluate_on_grid(output_wigner(spec, eta), grid);
            else {
                if (eta == 0.0)
                    throw CliError(kInvalidConfig, "eta = 0 leaves nothing to rescale at s != 0");
                result = evaluate_on_grid(extract_state(cavity_wigner(spec), eta, s), grid);
            }
            break;
        case ComputePath::convolution: {
            if (eta == 0.0)
                throw CliError(kInvalidConfig, "the convolution path needs eta > 0");
            const auto cavity = cavity_wigner(spec);
            if (extraction_width(cavity.order, eta, s) == 0.0)
                result = evaluate_on_grid(extract_state(cavity, eta, s), grid);
            else
                result = convolve_extraction(cavity, eta, s, grid);
            break;
        }
        case ComputePath::oracle:
            result = oracle::extracted_grid(spec, eta, grid, s);
            break;
        }
    } catch (const ValidityError& e) {
        throw CliError(kValidity, e.what());
    } catch (const OrderError& e) {
        throw CliError(kValidity, e.what());
    }
    result.metadata.order = s;
    result.metadata.eta = eta;
    result.metadata.label = describe(spec);
    result.metadata.path = to_string(path);
    return result;
}

inline nlohmann::json grid_metadata_json(const PhaseGrid& g)
{
    nlohmann::json m = {{"state", g.metadata.label},
                        {"s", g.metadata.order},
                        {"path", g.metadata.path},
                        {"grid",
                         {{"re_min", g.spec.re_min},
                          {"re_max", g.spec.re_max},
                          {"n_re", g.spec.n_re},
                          {"im_min", g.spec.im_min},
                          {"im_max", g.spec.im_max},
                          {"n_im", g.spec.n_im}}},
                        {"layout", "row-major, im outer, re inner"},
                        {"tool_version", kToolVersion}};
    m["eta"] = g.metadata.eta ? nlohmann::json(*g.metadata.eta) : nlohmann::json(nullptr);
    if (g.metadata.elapsed)
        m["elapsed"] = *g.metadata.elapsed;
    return m;
}

/// `re,im,value` rows, im outer / re inner, 17 significant digits.
inline void write_grid_csv(const PhaseGrid& g, std::ostream& out)
{
    out << "re,im,value\n";
    for (int j = 0; j < g.spec.n_im; ++j)
        for (int i = 0; i < g.spec.n_re; ++i)
            out << format_double(g.spec.re(i)) << ',' << format_double(g.spec.im(j)) << ','
                << format_double(g.at(i, j)) << '\n';
}

inline void write_grid_json(const PhaseGrid& g, std::ostream& out)
{
    nlohmann::json doc;
    doc["metadata"] = grid_metadata_json(g);
    doc["values"] = g.values;
    out << doc.dump() << "\n";
}

inline void write_grid(const PhaseGrid& g, const std::string& format, std::ostream& out)
{
    if (format == "json")
        write_grid_json(g, out);
    else
        write_grid_csv(g, out);
}

inline PhaseGrid cmd_wigner(const ScenarioConfig& cfg, std::ostream& err)
{
    const auto spec = resolve_state(cfg.state);
    const auto eff = resolve_efficiency(cfg.efficiency);
    for (const auto& w : eff.warnings)
        err << "warning: " << w << "\n";
    auto g = compute_output_grid(spec, eff.eta, cfg.s, cfg.grid, cfg.path);
    g.metadata.elapsed = eff.elapsed;
    for (const auto& w : g.warnings)
        err << "warning: " << w << "\n";
    return g;
}

// ---------------------------------------------------------------------------
// thresholds

inline nlohmann::json cmd_thresholds(const ScenarioConfig& cfg)
{
    const auto spec = resolve_state(cfg.state);
    std::optional<double> eta;
    if (cfg.efficiency.eta || cfg.efficiency.gamma_rad || cfg.efficiency.gamma_abs || cfg.efficiency.cavity)
        eta = resolve_efficiency(cfg.efficiency).eta;

    nlohmann::json r;
    r["state"] = describe(spec);
    double eta_min = 0.0;
    if (const auto* f = std::get_if<FockState>(&spec)) {
        if (f->n < 1)
            throw CliError(kInvalidConfig, "the vacuum has no extraction threshold");
        eta_min = fock_threshold(f->n);
        r["kind"] = "fock";
        r["threshold"] = eta_min;
        if (eta) {
            r["satisfied"] = *eta > eta_min;
            r["origin_value"] = fock_output_wigner_value(f->n, *eta, 0.0);
        }
    } else if (const auto* c = std::get_if<CatState>(&spec)) {
        eta_min = cat_threshold(c->alpha0, cfg.margin_threshold);
        r["kind"] = "cat";
        r["threshold"] = eta_min;
        r["margin_threshold"] = cfg.margin_threshold;
        if (eta) {
            const auto cond = cat_condition(c->alpha0, *eta, cfg.margin_threshold);
            r["margin"] = cond.margin;
            r["satisfied"] = cond.satisfied;
            r["fringe_damping"] = cat_fringe_damping(c->alpha0, *eta);
        }
    } else {
        throw CliError(kInvalidConfig, "thresholds need fock:<n> or cat:<alpha0>");
    }
    // Long-time gamma_abs/gamma_rad that still reaches eta_min.
    r["required_rate_ratio"] = (1.0 - eta_min) / eta_min;
    if (eta) {
        r["eta"] = *eta;
        const auto q = extraction_quality(*eta, cfg.ratio_threshold);
        r["extraction_ratio"] = std::isinf(q.ratio) ? nlohmann::json("inf") : nlohmann::json(q.ratio);
        r["near_perfect"] = q.near_perfect;
    }
    return r;
}

// ---------------------------------------------------------------------------
// reproduce-figures

struct FigureCase
{
    const char* name;
    const char* state;
    double eta;
};

inline constexpr FigureCase kFigureCases[] = {
    {"fig1a", "fock:1", 0.99},  {"fig1b", "fock:1", 0.71},  {"fig1c", "fock:1", 0.5},
    {"fig2a", "cat:3", 0.998}, {"fig2b", "cat:3", 0.952}, {"fig2c", "cat:3", 0.84},
};

inline std::string sha256_hex(const std::string& data)
{
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr) != 1)
        throw std::runtime_error("sha256 failed");
    std::ostringstream os;
    for (unsigned int i = 0; i < len; ++i)
        os << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(digest[i]);
    return os.str();
}

/// Origin value of a cat Wigner grid with the two coherent branches removed.
inline double cat_fringe_amplitude(double origin_value, double alpha0, double eta)
{
    const double branch = 4.0 * cat_norm_squared(alpha0) / std::numbers::pi * std::exp(-2.0 * eta * alpha0 * alpha0);
    return origin_value - branch;
}

inline void write_file(const std::filesystem::path& path, const std::string& content)
{
    std::ofstream f(path, std::ios::binary);
    if (!f)
        throw CliError(kFilesystem, "cannot open " + path.string() + " for writing");
    f << content;
    if (!f)
        throw CliError(kFilesystem, "failed writing " + path.string());
}

/// Six output grids (single photon and a0 = 3 cat at the reference efficiencies) plus manifest.json.
inline nlohmann::json reproduce_figures(const std::filesystem::path& dir, const GridSpec& grid = {})
{
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec)
        throw CliError(kFilesystem, "cannot create " + dir.string() + ": " + ec.message());

    nlohmann::json manifest;
    manifest["tool_version"] = kToolVersion;
    manifest["grid"] = {{"re_min", grid.re_min}, {"re_max", grid.re_max}, {"n_re", grid.n_re},
                        {"im_min", grid.im_min}, {"im_max", grid.im_max}, {"n_im", grid.n_im}};
    manifest["figures"] = nlohmann::json::array();
    for (const auto& fc : kFigureCases) {
        const auto spec = parse_state(fc.state);
        const auto g = compute_output_grid(spec, fc.eta, 0.0, grid, ComputePath::analytic);
        std::ostringstream csv;
        write_grid_csv(g, csv);
        const std::string file = std::string(fc.name) + ".csv";
        write_file(dir / file, csv.str());

        const double origin = output_wigner(spec, fc.eta)(0.0);
        nlohmann::json entry = {{"name", fc.name},
                                {"state", fc.state},
                                {"eta", fc.eta},
                                {"long_time_rate_ratio", (1.0 - fc.eta) / fc.eta},
                                {"file", file},
                                {"sha256", sha256_hex(csv.str())},
                                {"min", g.min()},
                                {"max", g.max()},
                                {"origin_value", origin},
                                {"integral", grid_integral(g)}};
        if (const auto* c = std::get_if<CatState>(&spec)) {
            const double input_origin = cat_wigner(c->alpha0)(0.0);
            entry["fringe_amplitude"] = cat_fringe_amplitude(origin, c->alpha0, fc.eta);
            entry["input_fringe_amplitude"] = cat_fringe_amplitude(input_origin, c->alpha0, 1.0);
        }
        manifest["figures"].push_back(entry);
    }
    write_file(dir / "manifest.json", manifest.dump(2) + "\n");
    return manifest;
}

// ---------------------------------------------------------------------------
// dispatch

inline void emit(const std::string& text, const std::string& path, std::ostream& out)
{
    if (path.empty() || path == "-")
        out << text;
    else
        write_file(path, text);
}

/// Parses argv and runs one subcommand; returns the process exit code.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Quantum state of the pulse extracted from a lossy high-Q cavity"};
    app.set_version_flag("--version", kToolVersion);
    app.require_subcommand(1);

    ScenarioConfig cfg;
    std::optional<double> eta, gamma_rad, gamma_abs, elapsed, length, mode_frequency, light_speed;
    std::string transmission, absorption, grid_text;
    bool via_convolution = false, via_oracle = false;

    auto add_efficiency = [&](CLI::App* sub) {
        sub->add_option("--eta", eta, "extraction efficiency in [0, 1]");
        sub->add_option("--gamma-rad", gamma_rad, "transmission decay rate (1/s)");
        sub->add_option("--gamma-abs", gamma_abs, "absorption decay rate (1/s)");
        sub->add_option("--elapsed", elapsed, "elapsed time t - t0 (s)");
        sub->add_option("--length", length, "cavity length (m)");
        sub->add_option("--transmission", transmission, "mirror transmission coefficient T as re[,im]");
        sub->add_option("--absorption", absorption, "absorption coefficient A as re[,im]");
        sub->add_option("--mode-frequency", mode_frequency, "cavity mode angular frequency (rad/s)");
        sub->add_option("--light-speed", light_speed, "speed of light (m/s)");
    };
    auto add_output = [&](CLI::App* sub) {
        sub->add_option("--format", cfg.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
        sub->add_option("--out", cfg.out, "output path (default stdout)");
    };

    auto* eta_cmd = app.add_subcommand("eta", "extraction efficiency curve eta(t) on [0, elapsed]");
    add_efficiency(eta_cmd);
    add_output(eta_cmd);
    eta_cmd->add_option("--samples", cfg.samples, "number of time samples");
    eta_cmd->add_flag("--numeric", cfg.numeric, "add the frequency-quadrature column");

    auto* wigner_cmd = app.add_subcommand("wigner", "output-pulse phase-space function on a grid");
    wigner_cmd->add_option("--state", cfg.state, "fock:<n> or cat:<alpha0>");
    add_efficiency(wigner_cmd);
    add_output(wigner_cmd);
    wigner_cmd->add_option("--s", cfg.s, "order parameter s (0 = Wigner, -1 = Husimi)");
    wigner_cmd->add_option("--grid", grid_text, "remin:remax:n,immin:immax:n");
    wigner_cmd->add_flag("--via-convolution", via_convolution, "direct quadrature of the Gaussian convolution");
    wigner_cmd->add_flag("--via-oracle", via_oracle, "Fock-basis loss channel and displaced parity");

    auto* thr_cmd = app.add_subcommand("thresholds", "efficiency needed to keep nonclassical features");
    thr_cmd->add_option("--state", cfg.state, "fock:<n> or cat:<alpha0>");
    add_efficiency(thr_cmd);
    thr_cmd->add_option("--out", cfg.out, "output path (default stdout)");
    thr_cmd->add_option("--margin-threshold", cfg.margin_threshold, "cat margin counted as << 1");
    thr_cmd->add_option("--ratio-threshold", cfg.ratio_threshold, "eta/(1-eta) counted as >> 1");

    auto* fig_cmd = app.add_subcommand("reproduce-figures", "six reference grids plus manifest.json");
    fig_cmd->add_option("--out", cfg.out, "output directory")->required();
    fig_cmd->add_option("--grid", grid_text, "remin:remax:n,immin:immax:n");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kInvalidConfig;
    }

    try {
        cfg.efficiency.eta = eta;
        cfg.efficiency.gamma_rad = gamma_rad;
        cfg.efficiency.gamma_abs = gamma_abs;
        cfg.efficiency.elapsed = elapsed;
        const bool any_cavity = length || mode_frequency || light_speed || !transmission.empty() || !absorption.empty();
        if (any_cavity) {
            if (!length || transmission.empty())
                throw CliError(kInvalidConfig, "cavity parameters need at least --length and --transmission");
            CavityInput c;
            c.length = *length;
            c.transmission = parse_complex(transmission);
            c.absorption = absorption.empty() ? std::complex<double>{} : parse_complex(absorption);
            c.mode_frequency = mode_frequency.value_or(0.0);
            c.light_speed = light_speed.value_or(kVacuumLightSpeed);
            cfg.efficiency.cavity = c;
        }
        if (via_convolution && via_oracle)
            throw CliError(kInvalidConfig, "--via-convolution and --via-oracle are exclusive");
        cfg.path = via_convolution ? ComputePath::convolution : via_oracle ? ComputePath::oracle : ComputePath::analytic;
        if (!grid_text.empty()) {
            try {
                cfg.grid = parse_grid_spec(grid_text);
            } catch (const std::invalid_argument& e) {
                throw CliError(kInvalidConfig, e.what());
            }
        }

        if (eta_cmd->parsed()) {
            std::ostringstream os;
            cmd_eta(cfg, os, err);
            emit(os.str(), cfg.out, out);
        } else if (wigner_cmd->parsed()) {
            const auto g = cmd_wigner(cfg, err);
            std::ostringstream os;
            write_grid(g, cfg.format, os);
            emit(os.str(), cfg.out, out);
        } else if (thr_cmd->parsed()) {
            emit(cmd_thresholds(cfg).dump(2) + "\n", cfg.out, out);
        } else if (fig_cmd->parsed()) {
            const auto manifest = reproduce_figures(cfg.out, cfg.grid);
            out << "wrote " << manifest["figures"].size() << " grids and manifest.json to " << cfg.out << "\n";
        }
    } catch (const CliError& e) {
        err << "error: " << e.what() << "\n";
        return e.code();
    } catch (const std::filesystem::filesystem_error& e) {
        err << "error: " << e.what() << "\n";
        return kFilesystem;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kInvalidConfig;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return kInvalidConfig;
    }
    return kOk;
}

} // namespace qextract::cli
