#include <Eigen/Dense>
#include <cmath>
#include <random>

#include "doctest.h"
#include "oracle_util.hpp"
#include "stiffshell/errors.hpp"
#include "stiffshell/solver.hpp"

using namespace stiffshell;
using namespace testing_util;

namespace {

Eigen::Matrix3d to_eigen(const Matrix3& m) {
    Eigen::Matrix3d e;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) e(i, j) = m[i][j];
    return e;
}

ShellConfig scaled(ShellConfig c, double s) {
    c.material.e1 *= s;
    c.material.e2 *= s;
    c.material.shear *= s;
    c.material.density *= s;
    for (auto* law : {&c.rods.modulus, &c.rods.shear, &c.rods.density, &c.rings.modulus, &c.rings.shear,
                      &c.rings.density}) {
        *law = law->with_base(law->base() * s);
    }
    c.foundation.winkler *= s;
    c.foundation.pasternak *= s;
    c.foundation.kernel_amplitude *= s;
    return c;
}

}  // namespace

TEST_CASE("identity system") {
    ActionQuadraticForm f;
    f.l11 = f.l22 = f.l33 = 1.0;
    f.phi_star = 2.5;
    const ModalAmplitudes q = solve_modal(f);
    CHECK(q.u0 == 0.0);
    CHECK(q.theta0 == 0.0);
    CHECK(q.w0 == 2.5);
}

TEST_CASE("Cramer matches pivoted LU on random symmetric systems") {
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> u(-1, 1);
    for (int c = 0; c < 1000; ++c) {
        Matrix3 m;
        for (int i = 0; i < 3; ++i)
            for (int j = i; j < 3; ++j) m[i][j] = m[j][i] = u(rng);
        for (int i = 0; i < 3; ++i) m[i][i] += 4.0;
        const Vector3 rhs{u(rng), u(rng), u(rng)};
        const Vector3 x = solve_cramer(m, rhs);
        const Eigen::Vector3d y = to_eigen(m).partialPivLu().solve(Eigen::Vector3d(rhs[0], rhs[1], rhs[2]));
        REQUIRE((Eigen::Vector3d(x[0], x[1], x[2]) - y).norm() <= 1e-12 * y.norm());
    }
}

TEST_CASE("residual of the modal solve") {
    const ShellConfig c = reference_config();
    ShellConfig loaded = c;
    loaded.loading.p1 = 1e4;
    const ActionQuadraticForm form = assemble_closed_form(loaded, {5, 1}, action_time(c));
    const ModalAmplitudes q = solve_modal(form);
    const Eigen::Vector3d r = to_eigen(form.matrix()) * Eigen::Vector3d(q.u0, q.theta0, q.w0) -
                              Eigen::Vector3d(0, 0, form.phi_star);
    CHECK(r.norm() <= 1e-10 * std::abs(form.phi_star));
}

TEST_CASE("singular systems") {
    Matrix3 m{{{1, 2, 3}, {1, 2, 3}, {0, 1, 5}}};
    CHECK_THROWS_AS(solve_cramer(m, {0, 0, 1}), SingularSystemError);
    Matrix3 z{};
    CHECK_THROWS_AS(solve_cramer(z, {0, 0, 1}), SingularSystemError);
    CHECK(determinant(m) == 0.0);
}

TEST_CASE("displacement reconstruction") {
    const ShellGeometry g{0.16, 0.8, 0.45e-3};
    const ModalAmplitudes a{1e-3, 1e-3, 1e-3};
    const Displacements at_rest = reconstruct_displacements(a, {2, 1}, g, 100, 0.3, 0.7, 0.0);
    CHECK(at_rest.u == 0.0);
    CHECK(at_rest.theta == 0.0);
    CHECK(at_rest.w == 0.0);
    for (double phi : {0.0, 0.4, 2.0}) {
        const Displacements edge = reconstruct_displacements(a, {3, 2}, g, 100, 0.0, phi, 0.013);
        CHECK(edge.theta == 0.0);
        CHECK(edge.w == 0.0);
    }
    const Displacements mid = reconstruct_displacements(a, {1, 1}, g, 100, 0.4, 0.0, pi / 200);
    CHECK(std::abs(mid.u) < 1e-18);
    CHECK(mid.theta == 0.0);
    CHECK(mid.w == doctest::Approx(1e-3).epsilon(1e-15));
    CHECK_THROWS_AS(reconstruct_displacements(a, {1, 1}, g, 100, 0.81, 0, 0), DomainError);
    CHECK_THROWS_AS(reconstruct_displacements(a, {1, 1}, g, 100, -0.01, 0, 0), DomainError);
}

TEST_CASE("critical force of one mode at zero mean load") {
    const ShellConfig c = reference_config();
    const double t = action_time(c);
    const ModeResult r = critical_force_for_mode(c, {5, 1}, t);
    REQUIRE(r.excitable);
    const Eigen::Matrix3d l = to_eigen(assemble_closed_form(c, {5, 1}, t).matrix());
    const double expected = l.determinant() * c.loading.w0_target / (r.alpha.alpha22 * l.topLeftCorner<2, 2>().determinant());
    CHECK(rel(r.p1, expected) < 1e-10);

    // The w0 it produces under p1 is the target.
    ShellConfig loaded = c;
    loaded.loading.p1 = r.p1;
    CHECK(rel(solve_modal(assemble_closed_form(loaded, {5, 1}, t)).w0, c.loading.w0_target) < 1e-10);
}

TEST_CASE("critical force with a mean load") {
    ShellConfig c = reference_config();
    c.loading.p0 = 1e4;
    const double t = action_time(c);
    const ModeResult r = critical_force_for_mode(c, {3, 1}, t);
    ShellConfig loaded = c;
    loaded.loading.p1 = r.p1;
    CHECK(rel(solve_modal(assemble_closed_form(loaded, {3, 1}, t)).w0, c.loading.w0_target) < 1e-10);
}

TEST_CASE("even half-wave counts are not excitable") {
    const ShellConfig c = reference_config();
    const double t = action_time(c);
    for (int n = 1; n <= 6; ++n) CHECK_FALSE(critical_force_for_mode(c, {n, 2}, t).excitable);
    CHECK_FALSE(critical_force_for_mode(c, {4, 1}, t).excitable);
}

// p1 = (det/cofactor) w0 / alpha22 with det/cofactor > 0 here, so its sign is
// the sign of alpha22, i.e. of sin(n pi/4): positive for n = 5, 6, 7 and
// negative for n = 1, 2, 3.
TEST_CASE("reference configuration: finite loads signed by alpha22, linear in the target") {
    ShellConfig c = reference_config();
    const double t = action_time(c);
    ShellConfig doubled = c;
    doubled.loading.w0_target *= 2;
    for (int n = 1; n <= 8; ++n)
        for (int m : {1, 3}) {
            const ModeResult a = critical_force_for_mode(c, {n, m}, t);
            if (n % 4 == 0) {
                CHECK_FALSE(a.excitable);
                continue;
            }
            REQUIRE(a.excitable);
            CHECK(std::isfinite(a.p1));
            CHECK(a.p1 != 0.0);
            CHECK((a.p1 > 0) == (a.alpha.alpha22 > 0));
            CHECK((a.p1 > 0) == (std::sin(n * pi / 4) < 0));
            const Matrix3 l = assemble_closed_form(c, {n, m}, t).matrix();
            CHECK(determinant(l) / (l[0][0] * l[1][1] - l[0][1] * l[1][0]) > 0);
            CHECK(rel(critical_force_for_mode(doubled, {n, m}, t).p1, 2 * a.p1) <= 1e-12);
        }
}

TEST_CASE("minimum over the search rectangle") {
    const ShellConfig c = reference_config();
    const double t = action_time(c);
    const CriticalForceResult r = find_critical_force(c, {}, t);
    CHECK(r.table.size() == 12 * 4);
    double best = INFINITY;
    for (const ModeResult& m : r.table)
        if (m.excitable && m.p1 > 0) best = std::min(best, m.p1);
    CHECK(r.p1b == best);
    CHECK(r.argmin.m % 2 == 1);
    CHECK(r.argmin.n % 4 != 0);

    const CriticalForceResult single = find_critical_force(c, {4, 5, {2, 3}}, t);
    CHECK(single.argmin == ModeIndex{5, 3});
    CHECK(single.p1b == critical_force_for_mode(c, {5, 3}, t).p1);

    CHECK_THROWS_AS(find_critical_force(c, {1, 12, {2, 4, 6}}, t), AllModesNonExcitable);
    CHECK_THROWS_AS(find_critical_force(c, {4, 4, {1, 3}}, t), AllModesNonExcitable);
    CHECK_THROWS_AS(find_critical_force(c, {3, 2, {1}}, t), ValidationError);
    CHECK_THROWS_AS(find_critical_force(c, {1, 2, {}}, t), ValidationError);
}

TEST_CASE("critical force grows with the number of rings") {
    ShellConfig c = reference_config();
    const double t = action_time(c);
    double previous = 0.0;
    for (int k2 : {2, 4, 6, 8}) {
        c.rings.count = k2;
        const double p = find_critical_force(c, {}, t).p1b;
        CHECK(p >= previous);
        previous = p;
    }
}

TEST_CASE("uniform scaling of stiffness, inertia and medium scales p1") {
    const ShellConfig c = reference_config();
    const double t = action_time(c);
    const CriticalForceResult a = find_critical_force(c, {}, t);
    for (double s : {0.5, 3.0, 10.0}) {
        const CriticalForceResult b = find_critical_force(scaled(c, s), {}, t);
        CHECK(b.argmin == a.argmin);
        for (std::size_t i = 0; i < a.table.size(); ++i)
            if (a.table[i].excitable) CHECK(rel(b.table[i].p1, s * a.table[i].p1) < 1e-10);
    }
}

TEST_CASE("homogeneous laws equal constant profiles") {
    const ShellConfig c = homogeneous(reference_config());
    const double t = action_time(c);
    const ModeIndex mode{5, 1};
    RodIntegrals rod;
    rod.i1 = rod.i2 = c.rods.modulus.base() * c.geometry.length / 2;
    rod.i3 = rod.shear_cos = c.rods.shear.base() * c.geometry.length / 2;
    rod.i4 = rod.i5 = c.rods.density.base() * c.geometry.length / 2;
    RingIntegrals ring;
    ring.i6 = ring.modulus_sin = pi * c.rings.modulus.base();
    ring.i7 = ring.i8 = pi * c.rings.density.base();
    ring.i9 = pi * c.rings.shear.base();
    ActionBlocks blocks = action_blocks(c, mode, t);
    Matrix3 rods{}, rings{};
    for (double phi : c.rods.angular_positions()) {
        const Matrix3 b = single_rod_block(c, mode, t, phi, rod);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) rods[i][j] += b[i][j];
    }
    for (double x : c.rings.axial_positions(c.geometry.length)) {
        const Matrix3 b = single_ring_block(c, mode, t, x, ring);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) rings[i][j] += b[i][j];
    }
    CHECK(blocks.rods == rods);
    CHECK(blocks.rings == rings);

    AssemblyOptions numeric;
    numeric.integrals = IntegralMethod::quadrature;
    const CriticalForceResult exact = find_critical_force(c, {}, t);
    const CriticalForceResult quad = find_critical_force(c, {}, t, numeric);
    CHECK(exact.argmin == quad.argmin);
    CHECK(rel(exact.p1b, quad.p1b) < 1e-9);
}

TEST_CASE("negative loads are kept in the table but never chosen") {
    ShellConfig c = reference_config();
    const double t = action_time(c);
    // The mean-load shift -alpha11 p0 / alpha22 is the same for every mode;
    // pick p0 so that it pushes the softer modes below zero.
    const AlphaCoefficients a = load_coefficients(c, {1, 1}, t);
    c.loading.p0 = 30000.0 * a.alpha22 / a.alpha11;
    const CriticalForceResult r = find_critical_force(c, {}, t);
    int negative = 0;
    double best = INFINITY;
    for (const ModeResult& m : r.table) {
        if (!m.excitable) continue;
        if (m.p1 < 0) ++negative;
        else best = std::min(best, m.p1);
    }
    CHECK(negative > 0);
    CHECK(r.p1b == best);
    CHECK(r.p1b > 0);
}
