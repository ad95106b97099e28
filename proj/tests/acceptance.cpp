// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <Eigen/Dense>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>

#include "oracle_util.hpp"
#include "stiffshell/config.hpp"
#include "stiffshell/solver.hpp"
#include "stiffshell/sweep.hpp"

using namespace stiffshell;
using namespace testing_util;

namespace {

struct Verdict {
    bool ok = false;
    std::string detail;
};

std::string sci(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2e", v);
    return buf;
}

int failures = 0;

void criterion(int id, const char* title, double limit_s, const std::function<Verdict()>& body) {
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
        v = body();
    } catch (const std::exception& e) {
        v = {false, std::string("exception: ") + e.what()};
    }
    const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = limit_s <= 0 || elapsed < limit_s;
    const bool ok = v.ok && in_time;
    failures += ok ? 0 : 1;
    std::printf("%s criterion %d: %s [%s; %.3f s", ok ? "PASS" : "FAIL", id, title, v.detail.c_str(), elapsed);
    if (limit_s > 0) std::printf(" of %.0f s%s", limit_s, in_time ? "" : ", TOO SLOW");
    std::printf("]\n");
    std::fflush(stdout);
}

Verdict integral_oracle() {
    std::mt19937_64 rng(2024);
    std::uniform_real_distribution<double> slope(-0.9, 2.0), base(0.1, 10.0), len(0.1, 3.0);
    std::uniform_int_distribution<int> idx(1, 12);
    double worst = 0.0;
    for (int c = 0; c < 200; ++c) {
        const ShellGeometry g{1.0, len(rng), 1e-3};
        const ModeIndex mode{idx(rng), idx(rng)};
        RodStiffener rod;
        rod.count = 1;
        rod.modulus = {1e9 * base(rng), slope(rng), g.length};
        rod.shear = {1e9 * base(rng), slope(rng), g.length};
        rod.density = {1e3 * base(rng), slope(rng), g.length};
        RingStiffener ring;
        ring.count = 1;
        ring.modulus = {1e9 * base(rng), slope(rng), 2 * pi};
        ring.shear = {1e9 * base(rng), slope(rng), 2 * pi};
        ring.density = {1e3 * base(rng), slope(rng), 2 * pi};
        const RodIntegrals a = rod_profile_integrals(rod, g, mode);
        const RodIntegrals b = rod_profile_integrals(rod, g, mode, IntegralMethod::quadrature);
        const RingIntegrals p = ring_profile_integrals(ring, mode);
        const RingIntegrals q = ring_profile_integrals(ring, mode, IntegralMethod::quadrature);
        for (auto [x, y] : {std::pair{a.i1, b.i1}, {a.i2, b.i2}, {a.i3, b.i3}, {a.i4, b.i4}, {a.i5, b.i5},
                            {p.i6, q.i6}, {p.i7, q.i7}, {p.i8, q.i8}, {p.i9, q.i9}}) {
            worst = std::max(worst, rel(x, y));
        }
    }
    return {worst <= 1e-10, "max rel " + sci(worst) + " <= 1e-10"};
}

Verdict action_oracle() {
    ShellConfig c = static_foundation(homogeneous(reference_config()));
    c.damage.gamma = 0.0;
    c.loading.p0 = 2e4;
    c.loading.p1 = 1e4;
    const double t = action_time(c);
    std::mt19937_64 rng(77);
    std::uniform_real_distribution<double> u(-1e-3, 1e-3);
    std::uniform_int_distribution<int> nd(1, 12), md(1, 7);
    double worst_w = 0.0, worst_h = 0.0;
    for (int i = 0; i < 20; ++i) {
        const ModeIndex mode{nd(rng), md(rng)};
        const ModalAmplitudes q{u(rng), u(rng), u(rng)};
        const ActionQuadraticForm form = assemble_closed_form(c, mode, t);
        worst_w = std::max(worst_w, rel(form.action(q), assemble_by_quadrature(c, mode, t, q)));
        if (i < 6) worst_h = std::max(worst_h, matrix_rel(form.matrix(), differences(c, mode, t).hessian));
    }
    return {worst_w <= 1e-6 && worst_h <= 1e-6,
            "action rel " + sci(worst_w) + ", Hessian rel " + sci(worst_h) + " <= 1e-6"};
}

Verdict cramer_oracle() {
    std::mt19937_64 rng(4242);
    std::uniform_real_distribution<double> u(-1, 1);
    double worst = 0.0;
    for (int c = 0; c < 1000; ++c) {
        Matrix3 m;
        Eigen::Matrix3d e;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) e(i, j) = m[i][j] = u(rng) + (i == j ? 3.0 : 0.0);
        const Vector3 rhs{u(rng), u(rng), u(rng)};
        const Vector3 x = solve_cramer(m, rhs);
        const Eigen::Vector3d y = e.fullPivLu().solve(Eigen::Vector3d(rhs[0], rhs[1], rhs[2]));
        worst = std::max(worst, (Eigen::Vector3d(x[0], x[1], x[2]) - y).norm() / y.norm());
    }
    return {worst <= 1e-12, "max rel " + sci(worst) + " <= 1e-12"};
}

Verdict excitability() {
    std::mt19937_64 rng(555);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    int checked = 0;
    for (int c = 0; c < 100; ++c) {
        ShellConfig s = reference_config();
        s.geometry.radius = 0.05 + u(rng);
        s.geometry.length = 0.1 + 3 * u(rng);
        s.geometry.thickness = s.geometry.radius * 0.05 * (0.1 + u(rng));
        s.material.e1 = 1e9 + 1e11 * u(rng);
        s.material.e2 = 1e9 + 1e11 * u(rng);
        do {
            s.material.nu1 = 0.45 * u(rng);
            s.material.nu2 = s.material.nu1 * s.material.e2 / s.material.e1;
        } while (s.material.nu1 * s.material.nu2 >= 0.95);
        s.rods.count = static_cast<int>(8 * u(rng));
        s.rods.modulus = InhomogeneityLaw(s.rods.modulus.base(), 2 * u(rng), s.geometry.length);
        s.rods.shear = InhomogeneityLaw(s.rods.shear.base(), 0.0, s.geometry.length);
        s.rods.density = InhomogeneityLaw(s.rods.density.base(), 0.0, s.geometry.length);
        s.rings.count = static_cast<int>(10 * u(rng));
        s.loading.omega = 1 + 500 * u(rng);
        s.loading.omega1 = s.loading.omega * (0.3 + 3 * u(rng));
        s.loading.p0 = 1e5 * (u(rng) - 0.5);
        s.loading.p1 = 1e5 * (u(rng) - 0.5);
        s.damage.cycles = 1 + static_cast<int>(3 * u(rng));
        const double t = action_time(s);
        for (int n = 1; n <= 12; ++n)
            for (int m = 1; m <= 8; ++m) {
                if (m % 2 == 1 && n % 4 != 0) continue;
                const ActionQuadraticForm f = assemble_closed_form(s, {n, m}, t);
                const AlphaCoefficients a = load_coefficients(s, {n, m}, t);
                const double terms = std::abs(a.alpha11 * s.loading.p0) + std::abs(a.alpha22 * s.loading.p1);
                if (!(std::abs(f.phi_star) <= 1e-14 * terms)) {
                    return {false, "phi_star " + sci(f.phi_star) + " at n=" + std::to_string(n) +
                                       " m=" + std::to_string(m)};
                }
                ++checked;
            }
    }
    return {true, std::to_string(checked) + " non-excitable modes, phi_star = 0"};
}

Verdict ring_trend() {
    RunConfig c = load_config(STIFFSHELL_SOURCE_DIR "/configs/figure2_rings.ini");
    c.sweep.values = {2, 4, 6, 8, 10};
    const auto rows = run_sweep(c);
    std::string values;
    bool ok = true;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        ok = ok && rows[i].ok() && (i == 0 || rows[i].p1b >= rows[i - 1].p1b);
        char buf[64];
        std::snprintf(buf, sizeof buf, "%s%.0f", i ? " " : "", rows[i].p1b);
        values += buf;
    }
    return {ok, "p1b(k2=2..10) = " + values + " Pa"};
}

Verdict reductions() {
    const ShellConfig c = reference_config();
    const double t = action_time(c);
    std::string failed;
    for (int n = 1; n <= 8; ++n)
        for (int m : {1, 2, 3}) {
            const ModeIndex mode{n, m};
            const ActionBlocks full = action_blocks(c, mode, t);
            ShellConfig no_rings = c;
            no_rings.rings.count = 0;
            ActionBlocks rods_only = full;
            rods_only.rings = {};
            if (assemble_closed_form(no_rings, mode, t).matrix() != rods_only.total()) failed += " k2=0";

            ShellConfig no_rods = c;
            no_rods.rods.count = 0;
            ActionBlocks rings_only = full;
            rings_only.rods = {};
            if (assemble_closed_form(no_rods, mode, t).matrix() != rings_only.total()) failed += " k1=0";

            ShellConfig damaged = c;
            damaged.damage.gamma = 0.2;
            for (double& v : damaged.damage.table) v = 1.0;
            ShellConfig undamaged = damaged;
            undamaged.damage.gamma = 0.0;
            ActionBlocks stripped = action_blocks(damaged, mode, t);
            stripped.damage = {};
            if (assemble_closed_form(undamaged, mode, t).matrix() != stripped.total()) failed += " gamma=0";

            ShellConfig inert = c;
            inert.foundation.kernel_amplitude = 0.0;
            if (medium_time_block(inert.foundation, c.loading.omega, t, c.geometry) != 0.0) failed += " A=0";
            if (action_blocks(inert, mode, t).medium != 0.0) failed += " A=0";
            if (failed.size()) return {false, "mismatch at n=" + std::to_string(n) + " m=" + std::to_string(m) + ":" + failed};
        }
    return {true, "k2=0, k1=0, gamma=0, A=0 exact on 24 modes"};
}

Verdict time_identity() {
    std::mt19937_64 rng(8);
    std::uniform_real_distribution<double> lw(-2, 4), lt(-4, 2);
    double worst = 0.0;
    for (int i = 0; i < 10000; ++i) {
        const double w = std::pow(10.0, lw(rng)), t = std::pow(10.0, lt(rng));
        const TimeFactors f = time_factors(w, t);
        worst = std::max(worst, std::abs(f.s_minus + f.s_plus - t) / t);
    }
    return {worst <= 1e-14, "max rel " + sci(worst) + " <= 1e-14"};
}

Verdict determinism() {
    bool ok = true;
    std::string detail;
    for (const char* name : {"figure2_rings", "figure3_inhomogeneity", "figure4_modulus_ratio"}) {
        const RunConfig c = load_config(std::string(STIFFSHELL_SOURCE_DIR "/configs/") + name + ".ini");
        const std::string a = sweep_csv(c.sweep.parameter, run_sweep(c));
        const std::string b = sweep_csv(c.sweep.parameter, run_sweep(c, 1));
        const std::string d = sweep_csv(c.sweep.parameter, run_sweep(c, 2));
        const bool same = a == b && a == d;
        const bool round_trip = parse_config(echo_config(c)) == c;
        ok = ok && same && round_trip;
        if (!same) detail += std::string(" ") + name + " CSV differs;";
        if (!round_trip) detail += std::string(" ") + name + " echo differs;";
    }
    RunConfig ref = load_config(STIFFSHELL_SOURCE_DIR "/configs/reference.ini");
    ok = ok && parse_config(echo_config(ref)) == ref;
    return {ok, ok ? "3 sweeps byte-identical across runs, 4 configs round-trip" : detail};
}

}  // namespace

int main() {
    criterion(1, "profile integrals, closed form vs adaptive quadrature, 200 cases", 5, integral_oracle);
    criterion(2, "action form vs space-time quadrature and FD Hessian", 60, action_oracle);
    criterion(3, "Cramer vs independent elimination, 1000 systems", 1, cramer_oracle);
    criterion(4, "phi_star = 0 for even m or n = 0 mod 4, 100 configurations", 0, excitability);
    criterion(5, "p1b non-decreasing in ring count k2 = 2..10", 60, ring_trend);
    criterion(6, "degenerate reductions are exact", 0, reductions);
    criterion(7, "S_minus + S_plus = T, 1e4 random (omega, T)", 0, time_identity);
    criterion(8, "repeated sweeps byte-identical, config echo round-trips", 0, determinism);
    std::printf("%s: %d criteria failed\n", failures ? "FAIL" : "PASS", failures);
    return failures ? 1 : 0;
}
