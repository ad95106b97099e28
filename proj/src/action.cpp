#include "stiffshell/action.hpp"

#include <cmath>

#include "stiffshell/damage.hpp"
#include "stiffshell/errors.hpp"

namespace stiffshell {

namespace {

// Both helpers fill the upper triangle and mirror it, so blocks stay exactly
// symmetric under rounding.
void add_outer(Matrix3& m, double scale, const Vector3& g) {
    for (int i = 0; i < 3; ++i)
        for (int j = i; j < 3; ++j) {
            const double v = scale * g[i] * g[j];
            m[i][j] += v;
            if (j != i) m[j][i] += v;
        }
}

// scale * (a b^T + b a^T)
void add_sym_outer(Matrix3& m, double scale, const Vector3& a, const Vector3& b) {
    for (int i = 0; i < 3; ++i)
        for (int j = i; j < 3; ++j) {
            const double v = scale * (a[i] * b[j] + b[i] * a[j]);
            m[i][j] += v;
            if (j != i) m[j][i] += v;
        }
}

void add(Matrix3& m, const Matrix3& other) {
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m[i][j] += other[i][j];
}

// sin(n*pi/4) from n mod 8, so that n = 0 (mod 4) gives an exact zero.
double quarter_sine(int n) {
    constexpr double r = 0.70710678118654752440;
    constexpr double table[8] = {0.0, r, 1.0, r, 0.0, -r, -1.0, -r};
    return table[((n % 8) + 8) % 8];
}

// cos(m*pi) - 1, exactly.
double half_wave_factor(int m) { return m % 2 == 0 ? 0.0 : -2.0; }

}  // namespace

TimeFactors time_factors(double omega, double time) {
    const double osc = std::sin(2.0 * omega * time) / (4.0 * omega);
    return {0.5 * time - osc, 0.5 * time + osc};
}

ActionQuadraticForm ActionQuadraticForm::from(const Matrix3& m, double phi_star) {
    return {m[0][0], m[0][1], m[0][2], m[1][1], m[1][2], m[2][2], phi_star};
}

double ActionQuadraticForm::action(const ModalAmplitudes& q) const {
    const Matrix3 l = matrix();
    const Vector3 v = q.vector();
    double quad = 0.0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) quad += v[i] * l[i][j] * v[j];
    return 0.5 * quad - phi_star * q.w0;
}

Matrix3 ActionBlocks::total() const {
    Matrix3 m = shell;
    add(m, inertia);
    add(m, damage);
    add(m, rods);
    add(m, rings);
    add(m, foundation);
    m[2][2] += medium;
    return m;
}

AlphaCoefficients load_coefficients(const ShellConfig& config, const ModeIndex& mode, double time) {
    const double r = config.geometry.radius;
    const double k = mode.wavenumber(config.geometry.length);
    const double w = config.loading.omega;
    const double w1 = config.loading.omega1;
    const double n = mode.n;

    // Spatial part of the load work over x in [0, l], phi in [0, pi/4] (x4).
    const double spatial = r / (n * k) * half_wave_factor(mode.m) * quarter_sine(mode.n);

    AlphaCoefficients out;
    out.alpha11 = 4.0 * spatial / w * (std::cos(w * time) - 1.0);
    // int_0^T sin(w1 t) sin(w t) dt, times two.
    const double window = 2.0 / (w - w1) * std::sin((w - w1) * time) - 2.0 / (w + w1) * std::sin((w + w1) * time);
    const bool window_zero = std::abs(window) <= 1e-12 * time;
    out.alpha22 = window_zero ? 0.0 : -spatial * window;
    out.excitable = spatial != 0.0 && !window_zero;
    return out;
}

double hereditary_time_integral(double omega, double decay, double time) {
    const double w = omega;
    const double psi = decay;
    const double d = psi * psi + w * w;
    const TimeFactors tf = time_factors(w, time);
    const double s = std::sin(w * time);
    const double decayed = (w - std::exp(-psi * time) * (psi * s + w * std::cos(w * time))) / d;
    return (psi * tf.s_minus - 0.5 * s * s + w * decayed) / d;
}

double medium_time_block(const FoundationModel& foundation, double omega, double time, const ShellGeometry& geometry) {
    if (foundation.kernel_amplitude == 0.0) return 0.0;
    const double area = pi * geometry.radius * geometry.length / 2.0;
    return -foundation.kernel_amplitude * area * hereditary_time_integral(omega, foundation.kernel_decay, time);
}

Matrix3 single_rod_block(const ShellConfig& config, const ModeIndex& mode, double time, double phi,
                         const RodIntegrals& in) {
    const RodStiffener& rod = config.rods;
    const double r = config.geometry.radius;
    const double k = mode.wavenumber(config.geometry.length);
    const double n = mode.n;
    const double w = config.loading.omega;
    const TimeFactors tf = time_factors(w, time);
    const double c2 = std::pow(std::cos(n * phi), 2);
    const double s2 = std::pow(std::sin(n * phi), 2);
    const double k2 = k * k, k4 = k2 * k2;

    // Strain: extension, in-plane bending (theta), radial bending (w), twist
    // rate of the rotation -dw/(R dphi).
    Matrix3 m{};
    m[0][0] += tf.s_minus * rod.area * k2 * c2 * in.i2;
    m[1][1] += tf.s_minus * rod.inertia_z * k4 * s2 * in.i2;
    m[2][2] += tf.s_minus * (rod.inertia_y * k4 * c2 * in.i2 + rod.torsion * n * n * k2 / (r * r) * s2 * in.shear_cos);

    // Kinetic: translations plus rotary inertia of the twist.
    const double kin = w * w * tf.s_plus;
    m[0][0] += kin * rod.area * c2 * in.i4;
    m[1][1] += kin * rod.area * s2 * in.i5;
    m[2][2] += kin * (rod.area * c2 + rod.torsion * n * n / (r * r) * s2) * in.i5;
    return m;
}

Matrix3 single_ring_block(const ShellConfig& config, const ModeIndex& mode, double time, double x,
                          const RingIntegrals& in) {
    const RingStiffener& ring = config.rings;
    const double r = config.geometry.radius;
    const double k = mode.wavenumber(config.geometry.length);
    const double n = mode.n;
    const double w = config.loading.omega;
    const TimeFactors tf = time_factors(w, time);
    const double cx2 = std::pow(std::cos(k * x), 2);
    const double sx2 = std::pow(std::sin(k * x), 2);

    Matrix3 m{};
    const double strain = r * tf.s_minus;
    // Hoop extension (d theta/dphi - w)/R.
    add_outer(m, strain * ring.area * in.i6 * sx2, {0.0, n / r, -1.0 / r});
    // In-plane bending (w'' + w)/R^2.
    m[2][2] += strain * ring.inertia_z * in.i6 * sx2 * std::pow((1.0 - n * n) / (r * r), 2);
    // Out-of-plane bending u''/R^2 - (dw/dx)/R.
    add_outer(m, strain * ring.inertia_x * in.i6 * cx2, {n * n / (r * r), 0.0, k / r});
    // Torsion (d(dw/dx)/dphi + du/(R dphi))/R.
    add_outer(m, strain * ring.torsion * in.i9 * cx2, {n / (r * r), 0.0, n * k / r});

    const double kin = r * w * w * tf.s_plus;
    m[0][0] += kin * ring.area * in.i7 * cx2;
    m[1][1] += kin * ring.area * in.i8 * sx2;
    m[2][2] += kin * (ring.area * sx2 + ring.torsion * k * k * cx2) * in.i7;
    return m;
}

ActionBlocks action_blocks(const ShellConfig& config, const ModeIndex& mode, double time,
                           const AssemblyOptions& options) {
    validate(config);
    validate(mode);
    if (!(time > 0.0)) throw DomainError("action time T must be > 0");

    const StiffnessCoefficients b = options.stiffness ? *options.stiffness : stiffness_coefficients(config.material);
    const double r = config.geometry.radius;
    const double l = config.geometry.length;
    const double h = config.geometry.thickness;
    const double k = mode.wavenumber(l);
    const double n = mode.n;
    const double w = config.loading.omega;
    const TimeFactors tf = time_factors(w, time);
    // Every shell field pairs cos^2/sin^2 in phi with sin^2/cos^2 in x.
    const double area = r * pi * l / 2.0;

    ActionBlocks out;

    // Strain gradients with respect to (u0, theta0, w0).
    const Vector3 eps11{-k, 0.0, 0.0};
    const Vector3 eps22{0.0, n / r, -1.0 / r};
    const Vector3 eps12{-n / r, k, 0.0};
    const Vector3 chi11{0.0, 0.0, -k * k};
    const Vector3 chi22{0.0, 0.0, -n * n / (r * r)};
    const Vector3 chi12{0.0, 0.0, -2.0 * n * k / r};
    const double membrane = area * tf.s_minus * h;
    const double bending = area * tf.s_minus * h * h * h / 12.0;
    add_outer(out.shell, membrane * b.b11, eps11);
    add_sym_outer(out.shell, membrane * b.b12, eps11, eps22);
    add_outer(out.shell, membrane * b.b22, eps22);
    add_outer(out.shell, membrane * b.b66, eps12);
    add_outer(out.shell, bending * b.b11, chi11);
    add_sym_outer(out.shell, bending * b.b12, chi11, chi22);
    add_outer(out.shell, bending * b.b22, chi22);
    add_outer(out.shell, bending * b.b66, chi12);

    const double inertia = config.material.density * h * area * w * w * tf.s_plus;
    for (int i = 0; i < 3; ++i) out.inertia[i][i] = inertia;

    // Damage corrections, monomial coefficients carried over term by term
    // with the T1..T6 table as input. All vanish with gamma.
    const double gamma = config.damage.effective_gamma();
    if (gamma != 0.0) {
        const double f = damage_modulation(w, time, config.damage.rheologic);
        const double* t = config.damage.table;
        const double pre = pi * l * h * r * r / 4.0;
        const double lo = gamma * h / w * f;                 // gamma h F / w
        const double hi = gamma * h * h * h / (16.0 * w) * f;  // gamma h^3 F / (16 w)
        const double nk2 = n * n * k * k;
        const double c11 = pre * (-lo * t[0] + hi * t[0]);
        const double c22 = pre * (-lo * t[1] + hi * t[1]);
        const double c33 = pre * (-lo * (t[2] - t[3] - h * h * h * nk2 * b.b66 / (4.0 * r * r)) +
                                  hi * (t[2] + t[3] + 4.0 * h * h * h * nk2 * b.b66 / (9.0 * r * r)));
        const double c12 = pre * (2.0 * n * k / r) *
                           (gamma * h * h / w * f * (b.b11 * b.b12 + b.b11 * b.b22) -
                            gamma * std::pow(h, 4) / (16.0 * w) * f * (b.b11 * b.b12 + b.b12 * b.b22 + b.b66 * b.b66));
        const double c13 = pre * (-2.0 * n * gamma * h * h / (r * w) * f *
                                      (b.b12 * t[2] + b.b22 * t[3] + h * k * k * b.b66 * b.b66 / (2.0 * r)) +
                                  n * gamma * std::pow(h, 4) / (8.0 * r * w) * f * (b.b12 * t[4] + b.b22 * t[5]));
        // Hessian of c11 u0^2 + ... + c12 u0 theta0 + c13 u0 w0.
        out.damage = {{{2.0 * c11, c12, c13}, {c12, 2.0 * c22, 0.0}, {c13, 0.0, 2.0 * c33}}};
    }

    if (config.rods.count > 0) {
        const RodIntegrals in = rod_profile_integrals(config.rods, config.geometry, mode, options.integrals,
                                                      options.quadrature);
        for (double phi : config.rods.angular_positions()) add(out.rods, single_rod_block(config, mode, time, phi, in));
    }
    if (config.rings.count > 0) {
        const RingIntegrals in = ring_profile_integrals(config.rings, mode, options.integrals, options.quadrature);
        for (double x : config.rings.axial_positions(l)) add(out.rings, single_ring_block(config, mode, time, x, in));
    }

    const FoundationModel& fnd = config.foundation;
    out.foundation[2][2] = (fnd.winkler + fnd.pasternak * (k * k + n * n / (r * r))) * area * tf.s_minus;
    out.medium = medium_time_block(fnd, w, time, config.geometry);
    return out;
}

ActionQuadraticForm assemble_closed_form(const ShellConfig& config, const ModeIndex& mode, double time,
                                         const AssemblyOptions& options) {
    const ActionBlocks blocks = action_blocks(config, mode, time, options);
    const AlphaCoefficients alpha = load_coefficients(config, mode, time);
    return ActionQuadraticForm::from(blocks.total(), alpha.phi_star(config.loading.p0, config.loading.p1));
}

}  // namespace stiffshell
