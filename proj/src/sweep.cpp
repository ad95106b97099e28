#include "stiffshell/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <thread>

#include "json.hpp"

#include "stiffshell/errors.hpp"

namespace stiffshell {

ShellConfig apply_sweep(const ShellConfig& shell, SweepParameter parameter, double value) {
    ShellConfig c = shell;
    switch (parameter) {
        case SweepParameter::none: break;
        case SweepParameter::ring_count:
            if (value < 0.0 || value != std::floor(value)) throw ValidationError("ring_count must be a non-negative integer");
            c.rings.count = static_cast<int>(value);
            c.rings.positions.clear();
            break;
        case SweepParameter::sigma: c.rings.modulus = c.rings.modulus.with_slope(value); break;
        case SweepParameter::tau: c.rings.density = c.rings.density.with_slope(value); break;
        case SweepParameter::modulus_ratio:
            c.material.e1 = value * c.material.e2;
            c.material.nu2 = c.material.nu1 * c.material.e2 / c.material.e1;
            break;
        case SweepParameter::winkler: c.foundation.winkler = value; break;
        case SweepParameter::pasternak: c.foundation.pasternak = value; break;
        case SweepParameter::gamma: c.damage.gamma = value; break;
        case SweepParameter::rheologic: c.damage.rheologic = value; break;
    }
    validate(c);
    return c;
}

SolveOutcome run_single(const RunConfig& config) {
    validate(config);
    SolveOutcome out;
    out.result = find_critical_force(config.shell, config.search, action_time(config.shell));
    out.e1 = config.shell.material.e1;
    return out;
}

std::string solve_report_json(const RunConfig& config, const SolveOutcome& outcome) {
    using nlohmann::json;
    const CriticalForceResult& r = outcome.result;
    json modes = json::array();
    for (const ModeResult& m : r.table) {
        json row{{"n", m.mode.n},
                 {"m", m.mode.m},
                 {"excitable", m.excitable},
                 {"alpha11", m.alpha.alpha11},
                 {"alpha22", m.alpha.alpha22}};
        row["p1_pa"] = m.excitable ? json(m.p1) : json(nullptr);
        modes.push_back(row);
    }
    json doc{{"n_star", r.argmin.n},
             {"m_star", r.argmin.m},
             {"p1b_pa", r.p1b},
             {"p1b_over_E1", r.p1b / outcome.e1},
             {"action_time_s", r.time},
             {"omega_rad_s", config.shell.loading.omega},
             {"w0_target_m", config.shell.loading.w0_target},
             {"modes", modes}};
    return doc.dump(2) + "\n";
}

std::string status_for(const std::exception& error) {
    if (dynamic_cast<const AllModesNonExcitable*>(&error)) return "non_excitable";
    if (dynamic_cast<const SingularSystemError*>(&error)) return "singular";
    if (dynamic_cast<const ValidationError*>(&error)) return "invalid_config";
    if (dynamic_cast<const QuadratureConvergenceError*>(&error)) return "quadrature";
    return "error";
}

namespace {

SweepRow solve_row(const RunConfig& config, double value) {
    SweepRow row;
    row.value = value;
    try {
        const ShellConfig shell = apply_sweep(config.shell, config.sweep.parameter, value);
        const CriticalForceResult r = find_critical_force(shell, config.search, action_time(shell));
        row.mode = r.argmin;
        row.p1b = r.p1b;
        row.ratio = r.p1b / shell.material.e1;
    } catch (const std::exception& e) {
        row.status = status_for(e);
    }
    return row;
}

}  // namespace

std::vector<SweepRow> run_sweep(const RunConfig& config, unsigned threads) {
    validate(config);
    if (config.sweep.parameter == SweepParameter::none) throw ValidationError("no sweep parameter configured");
    const std::vector<double>& values = config.sweep.values;
    std::vector<SweepRow> rows(values.size());
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = std::min<unsigned>(threads, static_cast<unsigned>(values.size()));

    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < values.size(); i = next++) rows[i] = solve_row(config, values[i]);
    };
    {
        std::vector<std::jthread> pool;
        for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
        worker();
    }
    return rows;
}

namespace {

std::string g12(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

}  // namespace

std::string sweep_csv(SweepParameter parameter, const std::vector<SweepRow>& rows) {
    std::string out = std::string(csv_header) + "\n";
    for (const SweepRow& r : rows) {
        out += std::string(to_string(parameter)) + "," + g12(r.value) + ",";
        if (r.ok()) {
            out += std::to_string(r.mode.n) + "," + std::to_string(r.mode.m) + "," + g12(r.p1b) + "," + g12(r.ratio);
        } else {
            out += ",,,";
        }
        out += "," + r.status + "\n";
    }
    return out;
}

std::string plot_script(const std::string& csv_path, const std::string& image_path, SweepParameter parameter) {
    const nlohmann::json csv = csv_path, image = image_path, name = to_string(parameter);
    return "#!/usr/bin/env python3\n"
           "# Renders the sweep CSV: critical-force ratio p1b/E1 against the swept value.\n"
           "import csv\n"
           "import matplotlib\n"
           "matplotlib.use(\"Agg\")\n"
           "import matplotlib.pyplot as plt\n"
           "\n"
           "CSV = " + csv.dump() + "\n"
           "IMAGE = " + image.dump() + "\n"
           "\n"
           "xs, ys = [], []\n"
           "with open(CSV, newline=\"\") as f:\n"
           "    for row in csv.DictReader(f):\n"
           "        if row[\"status\"] == \"ok\":\n"
           "            xs.append(float(row[\"sweep_value\"]))\n"
           "            ys.append(float(row[\"p1b_over_E1\"]))\n"
           "\n"
           "fig, ax = plt.subplots(figsize=(6, 4))\n"
           "ax.plot(xs, ys, marker=\"o\")\n"
           "ax.set_xlabel(" + name.dump() + ")\n"
           "ax.set_ylabel(\"p1b / E1\")\n"
           "ax.grid(True, alpha=0.3)\n"
           "fig.tight_layout()\n"
           "fig.savefig(IMAGE, dpi=150)\n";
}

}  // namespace stiffshell
