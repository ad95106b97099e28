#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "stiffshell/config.hpp"
#include "stiffshell/errors.hpp"
#include "stiffshell/self_check.hpp"
#include "stiffshell/sweep.hpp"

using namespace stiffshell;

namespace {

enum Exit { ok = 0, other = 1, config_error = 2, non_excitable = 3, singular = 4, check_failed = 5 };

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out << text;
    if (!out) throw std::runtime_error("write failed for '" + path + "'");
}

std::string image_path_for(const std::string& csv) {
    const auto dot = csv.rfind('.');
    const auto slash = csv.find_last_of('/');
    const bool has_ext = dot != std::string::npos && (slash == std::string::npos || dot > slash);
    return (has_ext ? csv.substr(0, dot) : csv) + ".png";
}

int solve(const std::string& config_path, std::string out_path) {
    const RunConfig config = load_config(config_path);
    const SolveOutcome outcome = run_single(config);
    const CriticalForceResult& r = outcome.result;
    std::printf("n* = %d  m* = %d  p1b = %.12g Pa  p1b/E1 = %.12g  T = %.12g s\n", r.argmin.n, r.argmin.m, r.p1b,
                r.p1b / outcome.e1, r.time);
    if (out_path.empty()) out_path = config.output.report;
    if (!out_path.empty()) write_file(out_path, solve_report_json(config, outcome));
    return ok;
}

int sweep(const std::string& config_path, std::string out_path, std::string plot_path) {
    const RunConfig config = load_config(config_path);
    if (out_path.empty()) out_path = config.output.csv;
    if (plot_path.empty()) plot_path = config.output.plot_script;
    if (out_path.empty()) throw ValidationError("sweep needs --out or output.csv");
    const auto rows = run_sweep(config);
    write_file(out_path, sweep_csv(config.sweep.parameter, rows));
    if (!plot_path.empty()) {
        write_file(plot_path, plot_script(out_path, image_path_for(out_path), config.sweep.parameter));
    }
    int failed = 0;
    for (const auto& row : rows) failed += row.ok() ? 0 : 1;
    std::printf("%zu rows written to %s (%d failed)\n", rows.size(), out_path.c_str(), failed);
    return ok;
}

int check(bool full, bool flip) {
    SelfCheckOptions opts;
    opts.level = full ? CheckLevel::full : CheckLevel::fast;
    opts.flip_b12 = flip;
    const SelfCheckReport report = self_check(opts);
    std::fputs(report.text().c_str(), stdout);
    return report.passed() ? ok : check_failed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Critical pulsating load of stiffened orthotropic shells on a viscoelastic foundation"};
    app.require_subcommand(1);

    std::string config_path, out_path, plot_path;
    auto* solve_cmd = app.add_subcommand("solve", "minimize p1 over the wave-number search range");
    solve_cmd->add_option("--config", config_path, "config document")->required();
    solve_cmd->add_option("--out", out_path, "JSON report path");

    auto* sweep_cmd = app.add_subcommand("sweep", "solve once per sweep value and write CSV");
    sweep_cmd->add_option("--config", config_path, "config document")->required();
    sweep_cmd->add_option("--out", out_path, "CSV path");
    sweep_cmd->add_option("--plot-script", plot_path, "write a matplotlib script rendering the CSV");

    auto* echo_cmd = app.add_subcommand("echo", "print the canonical SI form of a config");
    echo_cmd->add_option("--config", config_path, "config document")->required();

    bool full = false, flip = false;
    auto* check_cmd = app.add_subcommand("check", "run the oracle self-check suites");
    check_cmd->add_flag("--full", full, "include the action oracle and reductions");
    check_cmd->add_flag("--inject-b12-flip", flip, "test hook: flip the sign of b12 in assembly")
        ->group("");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? ok : config_error;
    }

    try {
        if (*solve_cmd) return solve(config_path, out_path);
        if (*sweep_cmd) return sweep(config_path, out_path, plot_path);
        if (*echo_cmd) {
            std::fputs(echo_config(load_config(config_path)).c_str(), stdout);
            return ok;
        }
        if (*check_cmd) return check(full, flip);
    } catch (const ConfigParseError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return config_error;
    } catch (const ValidationError& e) {
        std::cerr << "invalid config: " << e.what() << '\n';
        return config_error;
    } catch (const AllModesNonExcitable& e) {
        std::cerr << "no excitable mode: " << e.what() << '\n';
        return non_excitable;
    } catch (const SingularSystemError& e) {
        std::cerr << "singular system: " << e.what() << '\n';
        return singular;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return other;
    }
    return other;
}
