#pragma once

#include <numbers>
#include <vector>

namespace stiffshell {

inline constexpr double pi = std::numbers::pi;

struct ShellGeometry {
    double radius = 0.0;     ///< R, m
    double length = 0.0;     ///< l, m
    double thickness = 0.0;  ///< h, m

    bool operator==(const ShellGeometry&) const = default;
};

/// Orthotropic shell material. Axis 1 runs along the generatrix, axis 2 around.
struct OrthotropicMaterial {
    double e1 = 0.0;    ///< axial modulus, Pa
    double e2 = 0.0;    ///< circumferential modulus, Pa
    double nu1 = 0.0;
    double nu2 = 0.0;
    double shear = 0.0; ///< G, Pa
    double density = 0.0;  ///< rho0, kg/m^3

    bool operator==(const OrthotropicMaterial&) const = default;
};

struct StiffnessCoefficients {
    double b11 = 0.0;
    double b22 = 0.0;
    double b12 = 0.0;
    double b66 = 0.0;
};

/// b11, b22, b66 and b12; b12 is evaluated both as nu2*E1/(1-nu1*nu2) and
/// nu1*E2/(1-nu1*nu2) and the two must agree to 1e-9 relative.
StiffnessCoefficients stiffness_coefficients(const OrthotropicMaterial& material);

/// value(s) = base * (1 + slope * s / span) on [0, span].
class InhomogeneityLaw {
public:
    InhomogeneityLaw() = default;
    /// Throws NonPositiveProfileError when slope <= -1, ValidationError for a
    /// non-positive base or span.
    InhomogeneityLaw(double base, double slope, double span);

    double base() const noexcept { return base_; }
    double slope() const noexcept { return slope_; }
    double span() const noexcept { return span_; }

    /// Throws DomainError for s outside [0, span].
    double operator()(double s) const;

    /// Same law with another base value (slope and span kept).
    InhomogeneityLaw with_base(double base) const { return {base, slope_, span_}; }
    InhomogeneityLaw with_slope(double slope) const { return {base_, slope, span_}; }

    bool operator==(const InhomogeneityLaw&) const = default;

private:
    double base_ = 1.0;
    double slope_ = 0.0;
    double span_ = 1.0;
};

/// A family of identical longitudinal rods. Laws are in x with span l.
struct RodStiffener {
    int count = 0;            ///< k1
    double area = 0.0;        ///< F_i, m^2
    double inertia_y = 0.0;   ///< J_yi, radial bending, m^4
    double inertia_z = 0.0;   ///< J_zi, in-plane bending, m^4
    double torsion = 0.0;     ///< J_kp,i, m^4
    InhomogeneityLaw modulus;
    InhomogeneityLaw shear;
    InhomogeneityLaw density;
    std::vector<double> positions;  ///< phi_i, rad; empty means 2*pi*i/k1

    /// Positions actually used, default placement applied.
    std::vector<double> angular_positions() const;

    bool operator==(const RodStiffener&) const = default;
};

/// A family of identical rings. Laws are in phi with span 2*pi.
struct RingStiffener {
    int count = 0;            ///< k2
    double area = 0.0;        ///< F_j, m^2
    double inertia_z = 0.0;   ///< J_zj, radial (in-plane) bending, m^4
    double inertia_x = 0.0;   ///< J_xj, out-of-plane bending, m^4
    double torsion = 0.0;     ///< J_kp,j, m^4
    InhomogeneityLaw modulus;
    InhomogeneityLaw shear;
    InhomogeneityLaw density;
    std::vector<double> positions;  ///< x_j, m; empty means l*j/(k2+1)

    std::vector<double> axial_positions(double length) const;

    bool operator==(const RingStiffener&) const = default;
};

/// Winkler/Pasternak medium with an exponential hereditary kernel
/// Gamma(t) = amplitude * exp(-decay * t).
struct FoundationModel {
    double winkler = 0.0;    ///< k_g, N/m^3
    double pasternak = 0.0;  ///< k_p, N/m
    double kernel_amplitude = 0.0;  ///< A
    double kernel_decay = 0.0;      ///< psi, 1/s

    bool hereditary() const noexcept { return kernel_amplitude > 0.0; }

    bool operator==(const FoundationModel&) const = default;
};

inline constexpr int damage_table_size = 6;

struct DamageModel {
    double gamma = 0.0;       ///< constant damage kernel
    double recovery = 1.0;    ///< f in [0, 1]
    double rheologic = 0.0;   ///< R_l
    int cycles = 1;           ///< N_c
    double table[damage_table_size] = {0, 0, 0, 0, 0, 0};  ///< T1..T6

    /// gamma * (f*(N_c - 1) + 1) / N_c
    double effective_gamma() const noexcept;

    bool operator==(const DamageModel&) const = default;
};

struct Loading {
    double p0 = 0.0;          ///< mean load, Pa
    double p1 = 0.0;          ///< pulsation amplitude, Pa (only used for direct solves)
    double omega = 100.0;     ///< response frequency, rad/s
    double omega1 = 200.0;    ///< load frequency, rad/s
    double w0_target = 1e-4;  ///< prescribed deflection amplitude, m

    bool operator==(const Loading&) const = default;
};

struct ModeIndex {
    int n = 1;   ///< circumferential wave number
    int m = 1;   ///< axial half-wave count

    /// k = m*pi/l
    double wavenumber(double length) const noexcept { return m * pi / length; }

    bool operator==(const ModeIndex&) const = default;
};

struct ShellConfig {
    ShellGeometry geometry;
    OrthotropicMaterial material;
    RodStiffener rods;
    RingStiffener rings;
    FoundationModel foundation;
    DamageModel damage;
    Loading loading;

    bool operator==(const ShellConfig&) const = default;
};

// Each validate() throws a ValidationError subtype whose field() names the
// offending member (relative to the checked object).
void validate(const ShellGeometry& geometry);
void validate(const OrthotropicMaterial& material);
void validate(const RodStiffener& rods, const ShellGeometry& geometry);
void validate(const RingStiffener& rings, const ShellGeometry& geometry);
void validate(const FoundationModel& foundation);
void validate(const DamageModel& damage);
void validate(const Loading& loading);
void validate(const ModeIndex& mode);
void validate(const ShellConfig& config);

/// The numerical-results parameter set: R = 160 mm, l = 800 mm, h = 0.45 mm,
/// nu1 = 0.11, nu2 = 0.19, rho = 7.8 g/cm^3, ring modulus 6.67 GPa,
/// sigma = mu = tau = 0.4, k_g = 1e6 N/m^3, k_p = 1e4 N/m, A = 0.1615,
/// psi = 0.05, omega = 100, omega1 = 2*omega, w0 = 0.1 mm. Values the source
/// leaves open are filled in as documented in docs/config_format.md.
ShellConfig reference_config();

}  // namespace stiffshell
