#pragma once

#include <string>
#include <vector>

#include "stiffshell/config.hpp"
#include "stiffshell/solver.hpp"

namespace stiffshell {

/// Copy of the shell config with one sweep parameter set (SI value).
///   ring_count     rings.count (default placement is used)
///   sigma, tau     ring modulus / density slope
///   modulus_ratio  E1 = value * E2 at fixed E2; nu2 = nu1 * E2 / E1 keeps reciprocity
///   winkler, pasternak, gamma, R_l  the matching foundation/damage field
ShellConfig apply_sweep(const ShellConfig& shell, SweepParameter parameter, double value);

struct SolveOutcome {
    CriticalForceResult result;
    double e1 = 0.0;  ///< E1 of the solved config, for the ratio column
};

/// Deterministic minimization over the configured search range.
SolveOutcome run_single(const RunConfig& config);

/// JSON report: argmin, p1b, T, and per mode the excitability, alpha11,
/// alpha22 and p1.
std::string solve_report_json(const RunConfig& config, const SolveOutcome& outcome);

struct SweepRow {
    double value = 0.0;
    ModeIndex mode;
    double p1b = 0.0;
    double ratio = 0.0;        ///< p1b / E1
    std::string status = "ok"; ///< "ok" or an error kind; numbers unset otherwise

    bool ok() const { return status == "ok"; }
};

/// Status token for an exception caught while solving one row.
std::string status_for(const std::exception& error);

/// Solves every sweep value (concurrently, at most `threads` at a time;
/// 0 = hardware concurrency). Rows come back in input order; a failing row
/// records its error kind and the rest still run.
std::vector<SweepRow> run_sweep(const RunConfig& config, unsigned threads = 0);

inline constexpr const char* csv_header = "sweep_param,sweep_value,n_star,m_star,p1b_pa,p1b_over_E1,status";

/// Header plus one line per row, 12 significant digits.
std::string sweep_csv(SweepParameter parameter, const std::vector<SweepRow>& rows);

/// Standalone matplotlib script that renders csv_path to image_path
/// (p1b/E1 against the sweep value) without opening a display.
std::string plot_script(const std::string& csv_path, const std::string& image_path, SweepParameter parameter);

}  // namespace stiffshell
