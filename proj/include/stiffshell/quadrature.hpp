#pragma once

#include <functional>

#include "stiffshell/core_model.hpp"

namespace stiffshell {

struct QuadratureSpec {
    double rel_tol = 1e-10;
    double abs_tol = 1e-14;
    int max_depth = 40;
};

using ScalarFunction = std::function<double(double)>;

/// Globally adaptive Gauss-Kronrod (7/15) integration with bisection.
///
/// Panels are split, largest error estimate first, until the summed error is
/// below max(abs_tol, rel_tol*|I|); a rounding floor proportional to the
/// integral of |f| is added so that cancelling integrands still terminate.
/// Throws QuadratureConvergenceError when a panel that needs splitting is
/// already max_depth bisections deep. Requires a < b.
double integrate(const ScalarFunction& f, double a, double b, const QuadratureSpec& spec = {});

/// Rod integrals over x in [0, l] against the axial wave kx, k = m*pi/l.
struct RodIntegrals {
    double i1 = 0;  ///< int E cos^2 kx
    double i2 = 0;  ///< int E sin^2 kx
    double i3 = 0;  ///< int G sin^2 kx
    double i4 = 0;  ///< int rho cos^2 kx
    double i5 = 0;  ///< int rho sin^2 kx
    double shear_cos = 0;  ///< int G cos^2 kx (twist-rate term)
};

/// Ring integrals over phi in [0, 2*pi] against n*phi.
struct RingIntegrals {
    double i6 = 0;  ///< int E cos^2 n phi
    double i7 = 0;  ///< int rho cos^2 n phi
    double i8 = 0;  ///< int rho sin^2 n phi
    double i9 = 0;  ///< int G sin^2 n phi
    double modulus_sin = 0;  ///< int E sin^2 n phi (sum-rule partner of i6)
};

struct ProfileIntegrals {
    RodIntegrals rod;
    RingIntegrals ring;
};

enum class IntegralMethod { closed_form, quadrature };

/// Closed form is exact for the linear laws; quadrature is the general path.
RodIntegrals rod_profile_integrals(const RodStiffener& rod, const ShellGeometry& geometry, const ModeIndex& mode,
                                   IntegralMethod method = IntegralMethod::closed_form,
                                   const QuadratureSpec& spec = {});

RingIntegrals ring_profile_integrals(const RingStiffener& ring, const ModeIndex& mode,
                                     IntegralMethod method = IntegralMethod::closed_form,
                                     const QuadratureSpec& spec = {});

ProfileIntegrals profile_integrals(const ShellConfig& config, const ModeIndex& mode,
                                   IntegralMethod method = IntegralMethod::closed_form,
                                   const QuadratureSpec& spec = {});

/// Arbitrary (not necessarily linear) stiffener profiles, by quadrature.
struct ProfileLaws {
    ScalarFunction modulus, shear, density;
};
RodIntegrals rod_profile_integrals(const ProfileLaws& laws, double length, const ModeIndex& mode,
                                   const QuadratureSpec& spec = {});
RingIntegrals ring_profile_integrals(const ProfileLaws& laws, const ModeIndex& mode, const QuadratureSpec& spec = {});

}  // namespace stiffshell
