#pragma once

#include <string>
#include <vector>

#include "stiffshell/core_model.hpp"
#include "stiffshell/solver.hpp"

namespace stiffshell {

enum class SweepParameter { none, ring_count, sigma, tau, modulus_ratio, winkler, pasternak, gamma, rheologic };

/// Config-file spelling ("ring_count", "sigma", ..., "R_l").
const char* to_string(SweepParameter parameter);

/// Throws ConfigParseError for names outside the closed set.
SweepParameter parse_sweep_parameter(const std::string& name);

struct SweepSpec {
    SweepParameter parameter = SweepParameter::none;
    std::vector<double> values;  ///< SI, in input order

    bool operator==(const SweepSpec&) const = default;
};

struct OutputPaths {
    std::string csv;
    std::string plot_script;
    std::string report;

    bool operator==(const OutputPaths&) const = default;
};

struct RunConfig {
    ShellConfig shell;
    SearchRange search;
    SweepSpec sweep;
    OutputPaths output;

    bool operator==(const RunConfig&) const = default;
};

/// Parses the sectioned key = value document described in
/// docs/config_format.md. Quantities carry unit suffixes and are converted to
/// SI. Syntax errors, unknown sections or keys and bad units raise
/// ConfigParseError with "line N" context; invariant violations raise the
/// ValidationError subtype with the field path set (e.g. "material.nu1").
RunConfig parse_config(const std::string& text);

/// Reads and parses a file; I/O failures raise ConfigParseError.
RunConfig load_config(const std::string& path);

/// Canonical SI echo. parse_config(echo_config(c)) == c.
std::string echo_config(const RunConfig& config);

void validate(const RunConfig& config);

}  // namespace stiffshell
