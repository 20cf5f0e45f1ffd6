#include <algorithm>
#include <cmath>
#include <cstdio>
#include <exception>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pho/sweep.hpp"
#include "pho/verify.hpp"

namespace {

struct CliOptions {
    pho::sweep::SweepConfig config;
    std::string a_log_range;
    std::string alpha_range;
    bool quick = false;
    double tol = 0.0;
};

std::vector<double> parse_list(const std::string& value, const std::string& key) {
    std::istringstream is(value);
    std::vector<double> out;
    std::string tok;
    while (is >> tok) {
        if (!tok.empty() && tok.back() == ',') tok.pop_back();
        try {
            out.push_back(std::stod(tok));
        } catch (...) {
            throw std::invalid_argument("config key '" + key +
                                        "': bad number '" + tok + "'");
        }
    }
    if (out.empty())
        throw std::invalid_argument("config key '" + key + "': empty value");
    return out;
}

// Flat key=value configuration, applied before flag parsing so that
// command-line flags override the file.
void apply_config_file(const std::string& path, CliOptions& opt) {
    for (const auto& [key, value] : pho::sweep::read_flat_config(path)) {
        if (key == "a") {
            opt.config.a_values = parse_list(value, key);
        } else if (key == "a-log-range") {
            opt.a_log_range = value;
        } else if (key == "n") {
            opt.config.n_values.clear();
            for (double v : parse_list(value, key))
                opt.config.n_values.push_back(static_cast<int>(v));
        } else if (key == "alpha") {
            opt.config.alpha_values = parse_list(value, key);
        } else if (key == "alpha-range") {
            opt.alpha_range = value;
        } else if (key == "energy") {
            opt.config.energy_values = parse_list(value, key);
        } else if (key == "format") {
            opt.config.format = value;
        } else if (key == "out") {
            opt.config.out_path = value;
        } else if (key == "tol") {
            opt.tol = parse_list(value, key).front();
        } else if (key == "quick") {
            opt.quick = (value == "1" || value == "true" || value == "yes");
        } else {
            throw std::invalid_argument("config: unknown key '" + key + "'");
        }
    }
}

void add_common_options(CLI::App* cmd, std::string& config_path, CliOptions& opt) {
    cmd->add_option("--config", config_path,
                    "flat key=value config file; flags override");
    cmd->add_option("--a", opt.config.a_values, "repulsion parameter values");
    cmd->add_option("--a-log-range", opt.a_log_range,
                    "log-spaced a grid as lo:hi:count (overrides --a)");
    cmd->add_option("--format", opt.config.format, "output format: csv | json")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--out", opt.config.out_path, "output file (default stdout)");
    cmd->add_option("--tol", opt.tol,
                    "relative quadrature tolerance (sweeps) or check tolerance "
                    "override (verify)");
}

int run_verify(const CliOptions& opt) {
    pho::verify::VerifyOptions vo;
    vo.quick = opt.quick;
    vo.tol_override = opt.tol;
    auto report = pho::verify::run_verification(vo);
    double worst = 0.0;
    std::string worst_name = "-";
    for (const auto& c : report.checks) {
        std::printf("[%s] %-32s worst %.3e  tol %.3e%s%s\n",
                    c.pass ? "PASS" : "FAIL", c.name.c_str(), c.worst, c.tolerance,
                    c.detail.empty() ? "" : "  ", c.detail.c_str());
        if (std::isfinite(c.worst) && c.worst > worst) {
            worst = c.worst;
            worst_name = c.name;
        }
    }
    std::printf("%d/%zu checks passed; worst residual %.3e (%s)\n",
                static_cast<int>(report.checks.size()) - report.failed,
                report.checks.size(), worst, worst_name.c_str());
    return report.all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"1D pseudoharmonic oscillator toolkit: spectra, classical "
                 "motion, and quantum-information measures"};
    app.require_subcommand(1);
    app.failure_message(CLI::FailureMessage::help);

    CliOptions opt;

    // config files load before flag parsing so that flags win
    try {
        for (int i = 1; i < argc; ++i) {
            std::string arg = argv[i];
            if (arg == "--config" && i + 1 < argc)
                apply_config_file(argv[i + 1], opt);
            else if (arg.rfind("--config=", 0) == 0)
                apply_config_file(arg.substr(9), opt);
        }
    } catch (const std::exception& e) {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return 2;
    }

    std::string config_path;
    auto* spectrum = app.add_subcommand("spectrum", "closed-form energy levels");
    add_common_options(spectrum, config_path, opt);
    spectrum->add_option("--n", opt.config.n_values, "orbital indices");

    auto* classical = app.add_subcommand(
        "classical", "turning points, symmetry factor, period, average speed");
    add_common_options(classical, config_path, opt);
    classical->add_option("--energy", opt.config.energy_values,
                          "classical energies in units of D_omega");

    auto* measures = app.add_subcommand(
        "measures", "deviations, Shannon, Fisher, Onicescu, non-Gaussianities");
    add_common_options(measures, config_path, opt);
    measures->add_option("--n", opt.config.n_values, "orbital indices");

    auto* renyi = app.add_subcommand(
        "renyi", "Renyi/Tsallis entropies, thresholds and uncertainty gaps");
    add_common_options(renyi, config_path, opt);
    renyi->add_option("--n", opt.config.n_values, "orbital indices");
    renyi->add_option("--alpha", opt.config.alpha_values, "entropy orders");
    renyi->add_option("--alpha-range", opt.alpha_range,
                      "linear alpha grid as lo:hi:count");

    auto* verify = app.add_subcommand(
        "verify", "run the numeric-oracle comparisons and the invariant suite");
    verify->add_option("--config", config_path,
                       "flat key=value config file; flags override");
    verify->add_flag("--quick", opt.quick, "reduced grid, runs in seconds");
    verify->add_option("--tol", opt.tol, "override every check tolerance");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;  // usage/config errors
    }

    try {
        if (!opt.a_log_range.empty())
            opt.config.a_values = pho::sweep::parse_log_range(opt.a_log_range);
        if (!opt.alpha_range.empty())
            opt.config.alpha_values = pho::sweep::parse_linear_range(opt.alpha_range);
        if (opt.tol > 0.0) {
            opt.config.quad.rel_tol = opt.tol;
            opt.config.quad.abs_tol = std::min(opt.config.quad.abs_tol, opt.tol);
        }
        pho::sweep::Table table;
        if (spectrum->parsed()) {
            table = pho::sweep::spectrum_table(opt.config);
        } else if (classical->parsed()) {
            table = pho::sweep::classical_table(opt.config);
        } else if (measures->parsed()) {
            table = pho::sweep::measures_table(opt.config);
        } else if (renyi->parsed()) {
            table = pho::sweep::renyi_table(opt.config);
        } else if (verify->parsed()) {
            return run_verify(opt);
        }
        pho::sweep::write_table(table, opt.config);
        return 0;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
}
