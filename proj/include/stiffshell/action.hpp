#pragma once

#include <array>
#include <optional>

#include "stiffshell/core_model.hpp"
#include "stiffshell/quadrature.hpp"

namespace stiffshell {

using Vector3 = std::array<double, 3>;
using Matrix3 = std::array<Vector3, 3>;

/// Amplitudes (u0, theta0, w0) of the modal ansatz
///   u = u0 cos(n phi) cos(kx) sin(wt)
///   theta = theta0 sin(n phi) sin(kx) sin(wt)
///   w = w0 cos(n phi) sin(kx) sin(wt)
struct ModalAmplitudes {
    double u0 = 0.0;
    double theta0 = 0.0;
    double w0 = 0.0;

    Vector3 vector() const { return {u0, theta0, w0}; }
    static ModalAmplitudes from(const Vector3& q) { return {q[0], q[1], q[2]}; }
};

/// Time integrals of sin^2(wt) and cos^2(wt) over [0, T].
struct TimeFactors {
    double s_minus = 0.0;  ///< T/2 - sin(2wT)/(4w)
    double s_plus = 0.0;   ///< T/2 + sin(2wT)/(4w)
};

TimeFactors time_factors(double omega, double time);

/// Load weights: phi_star = alpha11 * p0 + alpha22 * p1.
struct AlphaCoefficients {
    double alpha11 = 0.0;
    double alpha22 = 0.0;
    /// False when the mode cannot couple to the load (even m, n = 0 mod 4) or
    /// the p1 time window integrates to zero; alpha22 is then exactly 0.
    bool excitable = false;

    double phi_star(double p0, double p1) const { return alpha11 * p0 + alpha22 * p1; }
};

AlphaCoefficients load_coefficients(const ShellConfig& config, const ModeIndex& mode, double time);

/// Stationarity system L q = (0, 0, phi_star).
///
/// L is the Hessian of the action with respect to (u0, theta0, w0): the
/// action equals q^T L q / 2 - phi_star * w0. Only the upper triangle is
/// stored.
struct ActionQuadraticForm {
    double l11 = 0, l12 = 0, l13 = 0, l22 = 0, l23 = 0, l33 = 0;
    double phi_star = 0;

    Matrix3 matrix() const { return {{{l11, l12, l13}, {l12, l22, l23}, {l13, l23, l33}}}; }
    static ActionQuadraticForm from(const Matrix3& m, double phi_star);

    /// q^T L q / 2 - phi_star * w0
    double action(const ModalAmplitudes& q) const;
};

/// w0^2 Hessian entry contributed by the hereditary part of the medium:
/// -A * (pi R l / 2) * int_0^T sin(wt) int_0^t exp(-psi (t - tau)) sin(w tau) dtau dt.
/// Zero when A = 0; finite for psi = 0.
double medium_time_block(const FoundationModel& foundation, double omega, double time, const ShellGeometry& geometry);

/// The time double integral alone (no A, no spatial factor).
double hereditary_time_integral(double omega, double decay, double time);

struct AssemblyOptions {
    IntegralMethod integrals = IntegralMethod::closed_form;
    QuadratureSpec quadrature{};
    /// Replaces the stiffness derived from the material (used for fault
    /// injection by the self-check).
    std::optional<StiffnessCoefficients> stiffness;
};

/// Every additive piece of L, kept apart so reductions can be checked.
struct ActionBlocks {
    Matrix3 shell{};       ///< membrane + bending strain energy
    Matrix3 inertia{};     ///< shell kinetic energy
    Matrix3 damage{};      ///< hereditary damage corrections (zero for gamma = 0)
    Matrix3 rods{};        ///< sum over all rods
    Matrix3 rings{};       ///< sum over all rings
    Matrix3 foundation{};  ///< Winkler + Pasternak
    double medium = 0.0;   ///< hereditary medium, w0^2 slot only

    Matrix3 total() const;
};

ActionBlocks action_blocks(const ShellConfig& config, const ModeIndex& mode, double time,
                           const AssemblyOptions& options = {});

/// Contribution of one rod at angle phi (rad), or of one ring at axial
/// station x (m). Used for the additivity checks.
Matrix3 single_rod_block(const ShellConfig& config, const ModeIndex& mode, double time, double phi,
                         const RodIntegrals& integrals);
Matrix3 single_ring_block(const ShellConfig& config, const ModeIndex& mode, double time, double x,
                          const RingIntegrals& integrals);

/// Closed-form action as a quadratic form in the modal amplitudes.
/// Validates config and mode; time must be > 0.
ActionQuadraticForm assemble_closed_form(const ShellConfig& config, const ModeIndex& mode, double time,
                                         const AssemblyOptions& options = {});

/// Independent route: integrates the energy functionals of shell, rods,
/// rings, medium and load numerically over x, phi and t for the given
/// amplitudes.
double assemble_by_quadrature(const ShellConfig& config, const ModeIndex& mode, double time,
                              const ModalAmplitudes& amplitudes, const QuadratureSpec& spec = {});

}  // namespace stiffshell
