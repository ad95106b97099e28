#include "stiffshell/solver.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "stiffshell/damage.hpp"
#include "stiffshell/errors.hpp"

namespace stiffshell {

double determinant(const Matrix3& m) {
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

namespace {

double max_abs(const Matrix3& m) {
    double s = 0.0;
    for (const auto& row : m)
        for (double v : row) s = std::max(s, std::abs(v));
    return s;
}

Matrix3 replace_column(Matrix3 m, int column, const Vector3& v) {
    for (int i = 0; i < 3; ++i) m[i][column] = v[i];
    return m;
}

void check_conditioning(double det, const Matrix3& m) {
    const double scale = max_abs(m);
    if (!(std::abs(det) >= 1e-12 * scale * scale * scale) || scale == 0.0) {
        throw SingularSystemError("principal determinant " + std::to_string(det) + " below conditioning floor");
    }
}

}  // namespace

Vector3 solve_cramer(const Matrix3& m, const Vector3& rhs) {
    const double det = determinant(m);
    check_conditioning(det, m);
    return {determinant(replace_column(m, 0, rhs)) / det, determinant(replace_column(m, 1, rhs)) / det,
            determinant(replace_column(m, 2, rhs)) / det};
}

ModalAmplitudes solve_modal(const ActionQuadraticForm& form) {
    return ModalAmplitudes::from(solve_cramer(form.matrix(), {0.0, 0.0, form.phi_star}));
}

Displacements reconstruct_displacements(const ModalAmplitudes& a, const ModeIndex& mode, const ShellGeometry& geometry,
                                        double omega, double x, double phi, double t) {
    if (!(x >= 0.0 && x <= geometry.length)) throw DomainError("x outside [0, l]");
    const double k = mode.wavenumber(geometry.length);
    const double cn = std::cos(mode.n * phi), sn = std::sin(mode.n * phi);
    const double st = std::sin(omega * t);
    return {a.u0 * cn * std::cos(k * x) * st, a.theta0 * sn * std::sin(k * x) * st, a.w0 * cn * std::sin(k * x) * st};
}

ModeResult critical_force_for_mode(const ShellConfig& config, const ModeIndex& mode, double time,
                                   const AssemblyOptions& options) {
    const ActionQuadraticForm form = assemble_closed_form(config, mode, time, options);
    ModeResult out;
    out.mode = mode;
    out.alpha = load_coefficients(config, mode, time);
    out.excitable = out.alpha.excitable;
    if (!out.excitable) return out;

    const Matrix3 l = form.matrix();
    const double det = determinant(l);
    check_conditioning(det, l);
    const double cofactor = l[0][0] * l[1][1] - l[1][0] * l[0][1];
    if (!(std::abs(cofactor) >= 1e-12 * std::max(std::abs(l[0][0] * l[1][1]), std::abs(l[0][1] * l[1][0])))) {
        throw SingularSystemError("w0 cofactor l11*l22 - l12*l21 vanishes");
    }
    out.p1 = det * config.loading.w0_target / (out.alpha.alpha22 * cofactor) -
             out.alpha.alpha11 * config.loading.p0 / out.alpha.alpha22;
    return out;
}

void validate(const SearchRange& range) {
    if (range.n_min < 1 || range.n_max < range.n_min) throw ValidationError("search: need 1 <= n_min <= n_max");
    if (range.m_values.empty()) throw ValidationError("search: m_values must not be empty");
    for (int m : range.m_values) {
        if (m < 1) throw ValidationError("search: m_values entries must be >= 1");
    }
}

CriticalForceResult find_critical_force(const ShellConfig& config, const SearchRange& range, double time,
                                        const AssemblyOptions& options) {
    validate(range);
    CriticalForceResult out;
    out.time = time;
    for (int n = range.n_min; n <= range.n_max; ++n) {
        for (int m : range.m_values) out.table.push_back(critical_force_for_mode(config, {n, m}, time, options));
    }

    const ModeResult* best = nullptr;
    bool any_excitable = false;
    for (const ModeResult& r : out.table) {
        if (!r.excitable) continue;
        any_excitable = true;
        if (!(r.p1 > 0.0)) continue;
        const bool better = !best || r.p1 < best->p1 ||
                            (r.p1 == best->p1 && (r.mode.n < best->mode.n ||
                                                  (r.mode.n == best->mode.n && r.mode.m < best->mode.m)));
        if (better) best = &r;
    }
    if (!any_excitable) throw AllModesNonExcitable("no mode in the search range couples to the load");
    if (!best) throw AllModesNonExcitable("no excitable mode yields a positive p1");
    out.argmin = best->mode;
    out.p1b = best->p1;
    return out;
}

double action_time(const ShellConfig& config) {
    return characteristic_time(config.loading.omega, config.damage.cycles);
}

}  // namespace stiffshell
