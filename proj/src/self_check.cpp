#include "stiffshell/self_check.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>

#include "stiffshell/action.hpp"
#include "stiffshell/errors.hpp"
#include "stiffshell/quadrature.hpp"
#include "stiffshell/solver.hpp"

namespace stiffshell {

bool SelfCheckReport::passed() const {
    return std::all_of(outcomes.begin(), outcomes.end(), [](const CheckOutcome& o) { return o.passed; });
}

std::string SelfCheckReport::text() const {
    std::ostringstream out;
    for (const CheckOutcome& o : outcomes) {
        out << (o.passed ? "PASS  " : "FAIL  ") << o.name;
        if (!o.detail.empty()) out << "  (" << o.detail << ")";
        out << '\n';
    }
    out << (passed() ? "self-check passed" : "self-check FAILED") << '\n';
    return out.str();
}

namespace {

std::string sci(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3e", v);
    return buf;
}

double rel(double a, double b, double floor = 0.0) {
    const double scale = std::max({std::abs(a), std::abs(b), floor});
    return scale == 0.0 ? 0.0 : std::abs(a - b) / scale;
}

// Runs one check, turning an escaped exception into a failure.
CheckOutcome run(const std::string& name, const std::function<std::pair<bool, std::string>()>& body) {
    try {
        auto [ok, detail] = body();
        return {name, ok, detail};
    } catch (const std::exception& e) {
        return {name, false, std::string("exception: ") + e.what()};
    }
}

std::pair<bool, std::string> integral_oracle() {
    std::mt19937_64 rng(20241);
    std::uniform_real_distribution<double> slope(-0.9, 2.0), unit(0.5, 2.0);
    std::uniform_int_distribution<int> nd(1, 12), md(1, 9);
    double worst = 0.0;
    for (int c = 0; c < 50; ++c) {
        const ShellGeometry g{0.16, 0.2 + unit(rng), 0.45e-3};
        const ModeIndex mode{nd(rng), md(rng)};
        RodStiffener rod;
        rod.count = 1;
        rod.modulus = {6e9 * unit(rng), slope(rng), g.length};
        rod.shear = {3e9 * unit(rng), slope(rng), g.length};
        rod.density = {7800 * unit(rng), slope(rng), g.length};
        RingStiffener ring;
        ring.count = 1;
        ring.modulus = {6e9 * unit(rng), slope(rng), 2 * pi};
        ring.shear = {3e9 * unit(rng), slope(rng), 2 * pi};
        ring.density = {7800 * unit(rng), slope(rng), 2 * pi};
        const RodIntegrals a = rod_profile_integrals(rod, g, mode), b =
            rod_profile_integrals(rod, g, mode, IntegralMethod::quadrature);
        const RingIntegrals p = ring_profile_integrals(ring, mode), q =
            ring_profile_integrals(ring, mode, IntegralMethod::quadrature);
        for (auto [x, y] : {std::pair{a.i1, b.i1}, {a.i2, b.i2}, {a.i3, b.i3}, {a.i4, b.i4}, {a.i5, b.i5},
                            {a.shear_cos, b.shear_cos}, {p.i6, q.i6}, {p.i7, q.i7}, {p.i8, q.i8}, {p.i9, q.i9},
                            {p.modulus_sin, q.modulus_sin}}) {
            worst = std::max(worst, rel(x, y));
        }
    }
    return {worst <= 1e-10, "max rel " + sci(worst) + ", tol 1e-10"};
}

Vector3 eliminate(Matrix3 a, Vector3 b) {
    for (int c = 0; c < 3; ++c) {
        int p = c;
        for (int r = c + 1; r < 3; ++r)
            if (std::abs(a[r][c]) > std::abs(a[p][c])) p = r;
        std::swap(a[c], a[p]);
        std::swap(b[c], b[p]);
        for (int r = c + 1; r < 3; ++r) {
            const double f = a[r][c] / a[c][c];
            for (int k = c; k < 3; ++k) a[r][k] -= f * a[c][k];
            b[r] -= f * b[c];
        }
    }
    Vector3 x{};
    for (int r = 2; r >= 0; --r) {
        double s = b[r];
        for (int k = r + 1; k < 3; ++k) s -= a[r][k] * x[k];
        x[r] = s / a[r][r];
    }
    return x;
}

std::pair<bool, std::string> cramer_oracle() {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    double worst = 0.0;
    for (int c = 0; c < 1000; ++c) {
        Matrix3 m;
        Vector3 rhs;
        for (auto& row : m)
            for (double& v : row) v = u(rng);
        for (int i = 0; i < 3; ++i) m[i][i] += 3.0;
        for (double& v : rhs) v = u(rng);
        const Vector3 x = solve_cramer(m, rhs), y = eliminate(m, rhs);
        const double norm = std::max({std::abs(y[0]), std::abs(y[1]), std::abs(y[2])});
        for (int i = 0; i < 3; ++i) worst = std::max(worst, std::abs(x[i] - y[i]) / norm);
    }
    return {worst <= 1e-12, "max rel " + sci(worst) + ", tol 1e-12"};
}

ShellConfig bare_shell() {
    ShellConfig c = reference_config();
    c.rods.count = 0;
    c.rings.count = 0;
    c.foundation = {};
    c.loading.p0 = c.loading.p1 = 0.0;
    return c;
}

StiffnessCoefficients flipped(const OrthotropicMaterial& m) {
    StiffnessCoefficients b = stiffness_coefficients(m);
    b.b12 = -b.b12;
    return b;
}

std::pair<bool, std::string> shell_block_oracle(bool flip) {
    const ShellConfig c = bare_shell();
    const ModeIndex mode{3, 1};
    const double t = action_time(c);
    AssemblyOptions opts;
    if (flip) opts.stiffness = flipped(c.material);
    const ActionQuadraticForm form = assemble_closed_form(c, mode, t, opts);
    const ModalAmplitudes q{0.7e-4, -1.3e-4, 1.0e-4};
    const double e = rel(form.action(q), assemble_by_quadrature(c, mode, t, q));
    return {e <= 1e-6, "rel " + sci(e) + ", tol 1e-6"};
}

// Second-difference Hessian and first-difference load term of W at q = 0.
struct FiniteDifference {
    Matrix3 hessian{};
    double phi_star = 0.0;
};

FiniteDifference finite_difference(const ShellConfig& c, const ModeIndex& mode, double t, double h) {
    auto w = [&](double a, double b, double d) { return assemble_by_quadrature(c, mode, t, {a, b, d}); };
    auto at = [&](int i, double s, int j, double r) {
        double q[3] = {0, 0, 0};
        q[i] += s;
        q[j] += r;
        return w(q[0], q[1], q[2]);
    };
    FiniteDifference out;
    const double w0 = w(0, 0, 0);
    for (int i = 0; i < 3; ++i) {
        const double plus = at(i, h, i, 0), minus = at(i, -h, i, 0);
        out.hessian[i][i] = (plus - 2 * w0 + minus) / (h * h);
        if (i == 2) out.phi_star = -(plus - minus) / (2 * h);
        for (int j = i + 1; j < 3; ++j) {
            out.hessian[i][j] = out.hessian[j][i] =
                (at(i, h, j, h) - at(i, h, j, -h) - at(i, -h, j, h) + at(i, -h, j, -h)) / (4 * h * h);
        }
    }
    return out;
}

std::pair<bool, std::string> hessian_oracle(bool flip) {
    ShellConfig c = reference_config();
    c.loading.p0 = 3e4;
    c.loading.p1 = 2e4;
    const double t = action_time(c);
    AssemblyOptions opts;
    if (flip) opts.stiffness = flipped(c.material);
    double worst = 0.0;
    for (ModeIndex mode : {ModeIndex{5, 1}, ModeIndex{3, 3}}) {
        const ActionQuadraticForm form = assemble_closed_form(c, mode, t, opts);
        const FiniteDifference fd = finite_difference(c, mode, t, 1e-6);
        const Matrix3 l = form.matrix();
        double scale = 0.0;
        for (const auto& row : l)
            for (double v : row) scale = std::max(scale, std::abs(v));
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) worst = std::max(worst, rel(l[i][j], fd.hessian[i][j], 1e-12 * scale));
        worst = std::max(worst, rel(form.phi_star, fd.phi_star));
    }
    return {worst <= 1e-6, "max rel " + sci(worst) + ", tol 1e-6"};
}

bool same(const Matrix3& a, const Matrix3& b) { return a == b; }

std::pair<bool, std::string> reductions() {
    const ShellConfig c = reference_config();
    const double t = action_time(c);
    std::string failed;
    for (ModeIndex mode : {ModeIndex{5, 1}, ModeIndex{2, 3}}) {
        const ActionBlocks full = action_blocks(c, mode, t);

        ShellConfig no_rings = c;
        no_rings.rings.count = 0;
        ActionBlocks rods_only = full;
        rods_only.rings = {};
        if (!same(assemble_closed_form(no_rings, mode, t).matrix(), rods_only.total())) failed += " k2=0";

        ShellConfig no_rods = c;
        no_rods.rods.count = 0;
        ActionBlocks rings_only = full;
        rings_only.rods = {};
        if (!same(assemble_closed_form(no_rods, mode, t).matrix(), rings_only.total())) failed += " k1=0";

        ShellConfig damaged = c;
        damaged.damage.gamma = 0.3;
        damaged.damage.table[0] = damaged.damage.table[2] = 1.0;
        ShellConfig undamaged = damaged;
        undamaged.damage.gamma = 0.0;
        ActionBlocks stripped = action_blocks(damaged, mode, t);
        stripped.damage = {};
        if (!same(assemble_closed_form(undamaged, mode, t).matrix(), stripped.total())) failed += " gamma=0";

        ShellConfig no_memory = c;
        no_memory.foundation.kernel_amplitude = 0.0;
        if (medium_time_block(no_memory.foundation, c.loading.omega, t, c.geometry) != 0.0 ||
            action_blocks(no_memory, mode, t).medium != 0.0) {
            failed += " A=0";
        }
    }
    return {failed.empty(), failed.empty() ? "exact" : "mismatch:" + failed};
}

std::pair<bool, std::string> additivity() {
    const ShellConfig c = reference_config();
    const double t = action_time(c);
    double worst = 0.0;
    for (ModeIndex mode : {ModeIndex{5, 1}, ModeIndex{4, 3}}) {
        const ActionBlocks full = action_blocks(c, mode, t);
        const ProfileIntegrals in = profile_integrals(c, mode);
        Matrix3 rods{}, rings{};
        for (double phi : c.rods.angular_positions()) {
            const Matrix3 b = single_rod_block(c, mode, t, phi, in.rod);
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j) rods[i][j] += b[i][j];
        }
        for (double x : c.rings.axial_positions(c.geometry.length)) {
            const Matrix3 b = single_ring_block(c, mode, t, x, in.ring);
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j) rings[i][j] += b[i][j];
        }
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                worst = std::max(worst, rel(rods[i][j], full.rods[i][j]));
                worst = std::max(worst, rel(rings[i][j], full.rings[i][j]));
            }
    }
    return {worst <= 1e-14, "max rel " + sci(worst) + ", tol 1e-14"};
}

std::pair<bool, std::string> excitability() {
    ShellConfig c = reference_config();
    c.loading.p0 = 3e4;
    c.loading.p1 = 2e4;
    const double t = action_time(c);
    int checked = 0;
    for (int n = 1; n <= 12; ++n)
        for (int m = 1; m <= 8; ++m) {
            if (m % 2 != 0 && n % 4 != 0) continue;
            const ActionQuadraticForm form = assemble_closed_form(c, {n, m}, t);
            if (form.phi_star != 0.0 || load_coefficients(c, {n, m}, t).excitable) {
                return {false, "phi_star = " + sci(form.phi_star) + " at n=" + std::to_string(n) +
                                   " m=" + std::to_string(m)};
            }
            ++checked;
        }
    return {true, std::to_string(checked) + " modes with phi_star = 0"};
}

}  // namespace

SelfCheckReport self_check(const SelfCheckOptions& options) {
    SelfCheckReport report;
    auto& out = report.outcomes;
    out.push_back(run("profile integrals: closed form equals adaptive quadrature", integral_oracle));
    out.push_back(run("modal solve: Cramer equals pivoted elimination", cramer_oracle));
    out.push_back(run("shell strain/kinetic block equals energy quadrature (b12 coupling)",
                      [&] { return shell_block_oracle(options.flip_b12); }));
    if (options.level == CheckLevel::full) {
        out.push_back(run("action Hessian equals finite differences of the quadrature action",
                          [&] { return hessian_oracle(options.flip_b12); }));
        out.push_back(run("degenerate reductions (k2=0, k1=0, gamma=0, A=0) are exact", reductions));
        out.push_back(run("stiffener blocks are sums of single-stiffener blocks", additivity));
        out.push_back(run("phi_star vanishes for even m or n = 0 mod 4", excitability));
    }
    return report;
}

}  // namespace stiffshell
