#include "stiffshell/quadrature.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <queue>
#include <string>
#include <vector>

#include "stiffshell/errors.hpp"

namespace stiffshell {

namespace {

// Kronrod 15-point abscissae (positive half) and weights; the embedded
// 7-point Gauss rule uses the odd-indexed abscissae.
constexpr std::array<double, 8> xgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> wgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> wg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
    double a, b;
    double value;
    double error;
    double abs_value;
    int depth;
    bool operator<(const Panel& o) const { return error < o.error; }
};

Panel gauss_kronrod(const ScalarFunction& f, double a, double b, int depth) {
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const double fc = f(center);
    double kronrod = fc * wgk[7];
    double gauss = fc * wg[3];
    double abs_sum = std::abs(kronrod);
    std::array<double, 7> f1{}, f2{};
    for (int j = 0; j < 7; ++j) {
        const double dx = half * xgk[j];
        f1[j] = f(center - dx);
        f2[j] = f(center + dx);
        kronrod += wgk[j] * (f1[j] + f2[j]);
        abs_sum += wgk[j] * (std::abs(f1[j]) + std::abs(f2[j]));
        if (j % 2 == 1) gauss += wg[j / 2] * (f1[j] + f2[j]);
    }
    // QUADPACK-style error scaling against the mean deviation.
    const double mean = 0.5 * kronrod;
    double asc = wgk[7] * std::abs(fc - mean);
    for (int j = 0; j < 7; ++j) asc += wgk[j] * (std::abs(f1[j] - mean) + std::abs(f2[j] - mean));
    asc *= half;
    double error = std::abs((kronrod - gauss) * half);
    if (asc != 0.0 && error != 0.0) error = asc * std::min(1.0, std::pow(200.0 * error / asc, 1.5));
    const double resabs = abs_sum * half;
    constexpr double eps = std::numeric_limits<double>::epsilon();
    if (resabs > std::numeric_limits<double>::min() / (50.0 * eps)) error = std::max(50.0 * eps * resabs, error);
    if (!std::isfinite(kronrod)) throw QuadratureConvergenceError("integrand is not finite on the panel");
    return {a, b, kronrod * half, error, resabs, depth};
}

}  // namespace

double integrate(const ScalarFunction& f, double a, double b, const QuadratureSpec& spec) {
    if (!(a < b)) throw DomainError("integrate requires a < b");
    if (!(spec.rel_tol > 0.0) || !(spec.abs_tol > 0.0) || spec.max_depth < 1) {
        throw ValidationError("quadrature tolerances must be > 0 and depth >= 1");
    }

    std::priority_queue<Panel> panels;
    double total = 0.0, error = 0.0, abs_total = 0.0;
    // Four starting panels keep a single-panel coincidence (e.g. a full period
    // of an oscillation) from being accepted as converged.
    constexpr int initial = 4;
    for (int i = 0; i < initial; ++i) {
        const double lo = a + (b - a) * i / initial;
        const double hi = i + 1 == initial ? b : a + (b - a) * (i + 1) / initial;
        Panel p = gauss_kronrod(f, lo, hi, 0);
        total += p.value;
        error += p.error;
        abs_total += p.abs_value;
        panels.push(p);
    }

    constexpr double eps = std::numeric_limits<double>::epsilon();
    auto target = [&] { return std::max({spec.abs_tol, spec.rel_tol * std::abs(total), 100.0 * eps * abs_total}); };

    while (error > target()) {
        Panel worst = panels.top();
        if (worst.depth >= spec.max_depth) {
            throw QuadratureConvergenceError("no convergence after " + std::to_string(spec.max_depth) +
                                             " bisections on [" + std::to_string(a) + ", " + std::to_string(b) +
                                             "]");
        }
        panels.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        Panel left = gauss_kronrod(f, worst.a, mid, worst.depth + 1);
        Panel right = gauss_kronrod(f, mid, worst.b, worst.depth + 1);
        total += left.value + right.value - worst.value;
        error += left.error + right.error - worst.error;
        abs_total += left.abs_value + right.abs_value - worst.abs_value;
        panels.push(left);
        panels.push(right);
    }

    // Re-sum from scratch to shed the drift of the running updates.
    double sum = 0.0;
    while (!panels.empty()) {
        sum += panels.top().value;
        panels.pop();
    }
    return sum;
}

namespace {

// int_0^S base*(1 + slope*s/S) * trig^2(q*s) ds when q*S is a whole number of
// half periods: the oscillating part integrates to zero against both the
// constant and the linear factor, leaving S/2 * base * (1 + slope/2).
double linear_law_weighted(const InhomogeneityLaw& law) {
    return 0.5 * law.span() * law.base() * (1.0 + 0.5 * law.slope());
}

double cos2_weighted(const ScalarFunction& law, double q, double span, const QuadratureSpec& spec) {
    return integrate([&](double s) { const double c = std::cos(q * s); return law(s) * c * c; }, 0.0, span, spec);
}

double sin2_weighted(const ScalarFunction& law, double q, double span, const QuadratureSpec& spec) {
    return integrate([&](double s) { const double c = std::sin(q * s); return law(s) * c * c; }, 0.0, span, spec);
}

ScalarFunction as_function(const InhomogeneityLaw& law) {
    return [law](double s) { return law(s); };
}

}  // namespace

RodIntegrals rod_profile_integrals(const ProfileLaws& laws, double length, const ModeIndex& mode,
                                   const QuadratureSpec& spec) {
    validate(mode);
    const double k = mode.wavenumber(length);
    RodIntegrals out;
    out.i1 = cos2_weighted(laws.modulus, k, length, spec);
    out.i2 = sin2_weighted(laws.modulus, k, length, spec);
    out.i3 = sin2_weighted(laws.shear, k, length, spec);
    out.i4 = cos2_weighted(laws.density, k, length, spec);
    out.i5 = sin2_weighted(laws.density, k, length, spec);
    out.shear_cos = cos2_weighted(laws.shear, k, length, spec);
    return out;
}

RingIntegrals ring_profile_integrals(const ProfileLaws& laws, const ModeIndex& mode, const QuadratureSpec& spec) {
    validate(mode);
    const double n = mode.n;
    const double span = 2.0 * pi;
    RingIntegrals out;
    out.i6 = cos2_weighted(laws.modulus, n, span, spec);
    out.i7 = cos2_weighted(laws.density, n, span, spec);
    out.i8 = sin2_weighted(laws.density, n, span, spec);
    out.i9 = sin2_weighted(laws.shear, n, span, spec);
    out.modulus_sin = sin2_weighted(laws.modulus, n, span, spec);
    return out;
}

RodIntegrals rod_profile_integrals(const RodStiffener& rod, const ShellGeometry& geometry, const ModeIndex& mode,
                                   IntegralMethod method, const QuadratureSpec& spec) {
    validate(mode);
    if (method == IntegralMethod::quadrature) {
        return rod_profile_integrals({as_function(rod.modulus), as_function(rod.shear), as_function(rod.density)},
                                     geometry.length, mode, spec);
    }
    const double e = linear_law_weighted(rod.modulus);
    const double g = linear_law_weighted(rod.shear);
    const double r = linear_law_weighted(rod.density);
    return {e, e, g, r, r, g};
}

RingIntegrals ring_profile_integrals(const RingStiffener& ring, const ModeIndex& mode, IntegralMethod method,
                                     const QuadratureSpec& spec) {
    validate(mode);
    if (method == IntegralMethod::quadrature) {
        return ring_profile_integrals({as_function(ring.modulus), as_function(ring.shear), as_function(ring.density)},
                                      mode, spec);
    }
    const double e = linear_law_weighted(ring.modulus);
    const double g = linear_law_weighted(ring.shear);
    const double r = linear_law_weighted(ring.density);
    return {e, r, r, g, e};
}

ProfileIntegrals profile_integrals(const ShellConfig& config, const ModeIndex& mode, IntegralMethod method,
                                   const QuadratureSpec& spec) {
    ProfileIntegrals out;
    if (config.rods.count > 0) out.rod = rod_profile_integrals(config.rods, config.geometry, mode, method, spec);
    if (config.rings.count > 0) out.ring = ring_profile_integrals(config.rings, mode, method, spec);
    return out;
}

}  // namespace stiffshell
