// Numerical evaluation of the action W = int_0^T (strain + kinetic + medium) dt
// + int_0^T A_p dt straight from the displacement fields. Nothing here reuses
// the closed-form assembly; fields and their derivatives are evaluated
// pointwise and every integral is done by adaptive quadrature.

#include <cmath>

#include "stiffshell/action.hpp"
#include "stiffshell/errors.hpp"

namespace stiffshell {

namespace {

// Trigonometric factors of the ansatz at one (x, phi, t) point.
struct Phase {
    double cn, sn;  // cos(n phi), sin(n phi)
    double ck, sk;  // cos(kx), sin(kx)
    double st, ct;  // sin(wt), cos(wt)
};

struct ShellPoint {
    double u, theta, w;
    double u_x, u_phi, u_phiphi, theta_x, theta_xx, theta_phi;
    double w_x, w_xx, w_phiphi, w_xphi;
    double u_t, theta_t, w_t, w_xt, w_phit;
};

struct Field {
    ModalAmplitudes q;
    double n, k, omega;

    ShellPoint at(const Phase& p) const {
        ShellPoint s;
        const double u_shape = q.u0 * p.cn * p.ck;
        const double th_shape = q.theta0 * p.sn * p.sk;
        const double w_shape = q.w0 * p.cn * p.sk;
        s.u = u_shape * p.st;
        s.theta = th_shape * p.st;
        s.w = w_shape * p.st;
        s.u_x = -k * q.u0 * p.cn * p.sk * p.st;
        s.u_phi = -n * q.u0 * p.sn * p.ck * p.st;
        s.u_phiphi = -n * n * s.u;
        s.theta_x = k * q.theta0 * p.sn * p.ck * p.st;
        s.theta_xx = -k * k * s.theta;
        s.theta_phi = n * q.theta0 * p.cn * p.sk * p.st;
        s.w_x = k * q.w0 * p.cn * p.ck * p.st;
        s.w_xx = -k * k * w_shape * p.st;
        s.w_phiphi = -n * n * w_shape * p.st;
        s.w_xphi = -n * k * q.w0 * p.sn * p.ck * p.st;
        s.u_t = omega * u_shape * p.ct;
        s.theta_t = omega * th_shape * p.ct;
        s.w_t = omega * w_shape * p.ct;
        s.w_xt = omega * k * q.w0 * p.cn * p.ck * p.ct;
        s.w_phit = -omega * n * q.w0 * p.sn * p.sk * p.ct;
        return s;
    }
};

}  // namespace

double assemble_by_quadrature(const ShellConfig& config, const ModeIndex& mode, double time,
                              const ModalAmplitudes& q, const QuadratureSpec& spec) {
    validate(config);
    validate(mode);
    if (!(time > 0.0)) throw DomainError("action time T must be > 0");

    const StiffnessCoefficients b = stiffness_coefficients(config.material);
    const double r = config.geometry.radius;
    const double l = config.geometry.length;
    const double h = config.geometry.thickness;
    const double rho = config.material.density;
    const double d = h * h * h / 12.0;
    const double n = mode.n;
    const double k = mode.wavenumber(l);
    const double omega = config.loading.omega;
    const FoundationModel& fnd = config.foundation;
    const Field field{q, n, k, omega};

    // Shell strain and kinetic energy plus the static medium, per unit
    // (x, phi), area element R dx dphi.
    auto shell_density = [&](const Phase& p) {
        const ShellPoint s = field.at(p);
        const double e11 = s.u_x;
        const double e22 = (s.theta_phi - s.w) / r;
        const double e12 = s.u_phi / r + s.theta_x;
        const double c11 = s.w_xx;
        const double c22 = s.w_phiphi / (r * r);
        const double c12 = 2.0 * s.w_xphi / r;
        const double membrane = h * (b.b11 * e11 * e11 + 2.0 * b.b12 * e11 * e22 + b.b22 * e22 * e22 + b.b66 * e12 * e12);
        const double bending = d * (b.b11 * c11 * c11 + 2.0 * b.b12 * c11 * c22 + b.b22 * c22 * c22 + b.b66 * c12 * c12);
        const double kinetic = rho * h * (s.u_t * s.u_t + s.theta_t * s.theta_t + s.w_t * s.w_t);
        const double qz_static = fnd.winkler * s.w - fnd.pasternak * (s.w_xx + s.w_phiphi / (r * r));
        return 0.5 * r * (membrane + bending + kinetic + qz_static * s.w);
    };

    auto over_shell = [&](double phi_max, auto&& density) {
        return integrate(
            [&](double t) {
                const double st = std::sin(omega * t), ct = std::cos(omega * t);
                return integrate(
                    [&](double x) {
                        const double sk = std::sin(k * x), ck = std::cos(k * x);
                        return integrate(
                            [&](double phi) {
                                return density(Phase{std::cos(n * phi), std::sin(n * phi), ck, sk, st, ct}, t);
                            },
                            0.0, phi_max, spec);
                    },
                    0.0, l, spec);
            },
            0.0, time, spec);
    };

    double total = over_shell(2.0 * pi, [&](const Phase& p, double) { return shell_density(p); });

    // Load work A_p = -4R int_0^l int_0^{pi/4} p(t) w dx dphi.
    const Loading& load = config.loading;
    if (q.w0 != 0.0 && (load.p0 != 0.0 || load.p1 != 0.0)) {
        total += over_shell(pi / 4.0, [&](const Phase& p, double t) {
            const double pressure = load.p0 + load.p1 * std::sin(load.omega1 * t);
            return -4.0 * r * pressure * field.at(p).w;
        });
    }

    // Hereditary medium: -1/2 R int int int w(t) int_0^t Gamma(t - tau) w(tau) dtau.
    // The ansatz factors w into a spatial shape times sin(w t), so the memory
    // integral runs over time once and multiplies the spatial shape integral.
    if (fnd.hereditary() && q.w0 != 0.0) {
        const double shape = integrate(
            [&](double x) {
                const double sk = std::sin(k * x);
                return integrate(
                    [&](double phi) {
                        const double w = q.w0 * std::cos(n * phi) * sk;
                        return w * w;
                    },
                    0.0, 2.0 * pi, spec);
            },
            0.0, l, spec);
        const double memory = integrate(
            [&](double t) {
                if (t == 0.0) return 0.0;
                const double conv = integrate(
                    [&](double tau) {
                        return fnd.kernel_amplitude * std::exp(-fnd.kernel_decay * (t - tau)) * std::sin(omega * tau);
                    },
                    0.0, t, spec);
                return conv * std::sin(omega * t);
            },
            0.0, time, spec);
        total -= 0.5 * r * shape * memory;
    }

    // Rods: line integrals along x at fixed phi_i.
    if (config.rods.count > 0) {
        const RodStiffener& rod = config.rods;
        for (double phi : rod.angular_positions()) {
            const double cn = std::cos(n * phi), sn = std::sin(n * phi);
            total += integrate(
                [&](double t) {
                    const double st = std::sin(omega * t), ct = std::cos(omega * t);
                    return integrate(
                        [&](double x) {
                            const Phase p{cn, sn, std::cos(k * x), std::sin(k * x), st, ct};
                            const ShellPoint s = field.at(p);
                            // Rod twist is the rotation -dw/(R dphi).
                            const double twist_x = -s.w_xphi / r;
                            const double twist_t = -s.w_phit / r;
                            const double e = rod.modulus(x), g = rod.shear(x), dens = rod.density(x);
                            const double strain = e * rod.area * s.u_x * s.u_x + e * rod.inertia_y * s.w_xx * s.w_xx +
                                                  e * rod.inertia_z * s.theta_xx * s.theta_xx +
                                                  g * rod.torsion * twist_x * twist_x;
                            const double kinetic =
                                dens * rod.area *
                                (s.u_t * s.u_t + s.theta_t * s.theta_t + s.w_t * s.w_t +
                                 rod.torsion / rod.area * twist_t * twist_t);
                            return 0.5 * (strain + kinetic);
                        },
                        0.0, l, spec);
                },
                0.0, time, spec);
        }
    }

    // Rings: integrals around phi at fixed x_j, arc element R dphi.
    if (config.rings.count > 0) {
        const RingStiffener& ring = config.rings;
        for (double xj : ring.axial_positions(l)) {
            const double ck = std::cos(k * xj), sk = std::sin(k * xj);
            total += integrate(
                [&](double t) {
                    const double st = std::sin(omega * t), ct = std::cos(omega * t);
                    return integrate(
                        [&](double phi) {
                            const Phase p{std::cos(n * phi), std::sin(n * phi), ck, sk, st, ct};
                            const ShellPoint s = field.at(p);
                            // The section rotates with the slope dw/dx.
                            const double hoop = (s.theta_phi - s.w) / r;
                            const double radial_bend = (s.w_phiphi + s.w) / (r * r);
                            const double lateral_bend = s.u_phiphi / (r * r) - s.w_x / r;
                            const double twist = (s.w_xphi + s.u_phi / r) / r;
                            const double e = ring.modulus(phi), g = ring.shear(phi), dens = ring.density(phi);
                            const double strain = e * ring.area * hoop * hoop +
                                                  e * ring.inertia_z * radial_bend * radial_bend +
                                                  e * ring.inertia_x * lateral_bend * lateral_bend +
                                                  g * ring.torsion * twist * twist;
                            const double kinetic =
                                dens * ring.area *
                                (s.u_t * s.u_t + s.theta_t * s.theta_t + s.w_t * s.w_t +
                                 ring.torsion / ring.area * s.w_xt * s.w_xt);
                            return 0.5 * r * (strain + kinetic);
                        },
                        0.0, 2.0 * pi, spec);
                },
                0.0, time, spec);
        }
    }
    return total;
}

}  // namespace stiffshell
