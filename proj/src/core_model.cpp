#include "stiffshell/core_model.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "stiffshell/errors.hpp"

namespace stiffshell {

namespace {

template <class E = ValidationError>
[[noreturn]] void fail(const std::string& field, const std::string& message) {
    E error(message);
    error.set_field(field);
    throw error;
}

void require_positive(double value, const char* field) {
    if (!(value > 0.0) || !std::isfinite(value)) fail(field, "must be finite and > 0");
}

void require_non_negative(double value, const char* field) {
    if (!(value >= 0.0) || !std::isfinite(value)) fail(field, "must be finite and >= 0");
}

// Re-raise a nested error with its field path prefixed.
template <class F>
void within(const std::string& prefix, F&& check) {
    try {
        check();
    } catch (Error& e) {
        e.set_field(e.field().empty() ? prefix : prefix + "." + e.field());
        throw;
    }
}

void validate_law(const InhomogeneityLaw& law, double span, const char* field) {
    require_positive(law.base(), field);
    if (!(law.slope() > -1.0)) fail<NonPositiveProfileError>(field, "slope must be > -1");
    if (std::abs(law.span() - span) > 1e-12 * span) fail(field, "law span does not match the stiffener domain");
}

}  // namespace

StiffnessCoefficients stiffness_coefficients(const OrthotropicMaterial& material) {
    validate(material);
    const double denom = 1.0 - material.nu1 * material.nu2;
    const double b12_axial = material.nu2 * material.e1 / denom;
    const double b12_hoop = material.nu1 * material.e2 / denom;
    if (std::abs(b12_axial - b12_hoop) > 1e-9 * std::max(std::abs(b12_axial), std::abs(b12_hoop))) {
        throw MaterialReciprocityError("nu2*E1 and nu1*E2 give different b12");
    }
    return {material.e1 / denom, material.e2 / denom, b12_axial, material.shear};
}

InhomogeneityLaw::InhomogeneityLaw(double base, double slope, double span)
    : base_(base), slope_(slope), span_(span) {
    if (!(slope > -1.0) || !std::isfinite(slope)) {
        throw NonPositiveProfileError("inhomogeneity slope " + std::to_string(slope) + " must be > -1");
    }
    if (!(base > 0.0) || !std::isfinite(base)) throw ValidationError("inhomogeneity base must be > 0");
    if (!(span > 0.0) || !std::isfinite(span)) throw ValidationError("inhomogeneity span must be > 0");
}

double InhomogeneityLaw::operator()(double s) const {
    if (!(s >= 0.0 && s <= span_)) {
        throw DomainError("coordinate " + std::to_string(s) + " outside [0, " + std::to_string(span_) + "]");
    }
    return base_ * (1.0 + slope_ * s / span_);
}

std::vector<double> RodStiffener::angular_positions() const {
    if (!positions.empty()) return positions;
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(std::max(count, 0)));
    for (int i = 0; i < count; ++i) out.push_back(2.0 * pi * i / count);
    return out;
}

std::vector<double> RingStiffener::axial_positions(double length) const {
    if (!positions.empty()) return positions;
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(std::max(count, 0)));
    for (int j = 1; j <= count; ++j) out.push_back(length * j / (count + 1));
    return out;
}

double DamageModel::effective_gamma() const noexcept {
    return gamma * (recovery * (cycles - 1) + 1.0) / cycles;
}

void validate(const ShellGeometry& geometry) {
    require_positive(geometry.radius, "radius");
    require_positive(geometry.length, "length");
    require_positive(geometry.thickness, "thickness");
    if (!(geometry.thickness / geometry.radius < 0.2)) fail("thickness", "h/R must be < 0.2 (thin shell)");
}

void validate(const OrthotropicMaterial& material) {
    require_positive(material.e1, "e1");
    require_positive(material.e2, "e2");
    require_positive(material.shear, "shear");
    require_positive(material.density, "density");
    if (!std::isfinite(material.nu1)) fail("nu1", "must be finite");
    if (!std::isfinite(material.nu2)) fail("nu2", "must be finite");
    const double product = material.nu1 * material.nu2;
    if (product < 0.0 || product >= 1.0) fail<InvalidPoissonError>("nu1", "nu1*nu2 must lie in [0, 1)");
    const double a = material.nu2 * material.e1;
    const double b = material.nu1 * material.e2;
    if (std::abs(a - b) > 1e-9 * std::max(std::abs(a), std::abs(b))) {
        fail<MaterialReciprocityError>("nu2", "reciprocity nu2*E1 = nu1*E2 violated");
    }
}

void validate(const RodStiffener& rods, const ShellGeometry& geometry) {
    if (rods.count < 0) fail("count", "must be >= 0");
    if (rods.count == 0) return;
    require_positive(rods.area, "area");
    require_positive(rods.inertia_y, "inertia_y");
    require_positive(rods.inertia_z, "inertia_z");
    require_positive(rods.torsion, "torsion");
    validate_law(rods.modulus, geometry.length, "modulus");
    validate_law(rods.shear, geometry.length, "shear");
    validate_law(rods.density, geometry.length, "density");
    if (!rods.positions.empty()) {
        if (static_cast<int>(rods.positions.size()) != rods.count) fail("positions", "need exactly count entries");
        for (std::size_t i = 0; i < rods.positions.size(); ++i) {
            const double p = rods.positions[i];
            if (!(p >= 0.0 && p < 2.0 * pi)) fail<DomainError>("positions", "must lie in [0, 2*pi)");
            if (i > 0 && !(p > rods.positions[i - 1])) fail("positions", "must be strictly increasing");
        }
    }
}

void validate(const RingStiffener& rings, const ShellGeometry& geometry) {
    if (rings.count < 0) fail("count", "must be >= 0");
    if (rings.count == 0) return;
    require_positive(rings.area, "area");
    require_positive(rings.inertia_z, "inertia_z");
    require_positive(rings.inertia_x, "inertia_x");
    require_positive(rings.torsion, "torsion");
    validate_law(rings.modulus, 2.0 * pi, "modulus");
    validate_law(rings.shear, 2.0 * pi, "shear");
    validate_law(rings.density, 2.0 * pi, "density");
    if (!rings.positions.empty()) {
        if (static_cast<int>(rings.positions.size()) != rings.count) fail("positions", "need exactly count entries");
        for (std::size_t j = 0; j < rings.positions.size(); ++j) {
            const double x = rings.positions[j];
            if (!(x > 0.0 && x < geometry.length)) fail<DomainError>("positions", "must lie in (0, l)");
            if (j > 0 && !(x > rings.positions[j - 1])) fail("positions", "must be strictly increasing");
        }
    }
}

void validate(const FoundationModel& foundation) {
    require_non_negative(foundation.winkler, "winkler");
    require_non_negative(foundation.pasternak, "pasternak");
    require_non_negative(foundation.kernel_amplitude, "kernel_amplitude");
    require_non_negative(foundation.kernel_decay, "kernel_decay");
}

void validate(const DamageModel& damage) {
    require_non_negative(damage.gamma, "gamma");
    if (!(damage.recovery >= 0.0 && damage.recovery <= 1.0)) fail("recovery", "must lie in [0, 1]");
    if (!std::isfinite(damage.rheologic)) fail("rheologic", "must be finite");
    if (damage.cycles < 1) fail("cycles", "must be >= 1");
    for (double t : damage.table) {
        if (!std::isfinite(t)) fail("table", "entries must be finite");
    }
}

void validate(const Loading& loading) {
    require_positive(loading.omega, "omega");
    if (!std::isfinite(loading.p0)) fail("p0", "must be finite");
    if (!std::isfinite(loading.p1)) fail("p1", "must be finite");
    if (!std::isfinite(loading.omega1)) fail("omega1", "must be finite");
    const double tol = 1e-12 * loading.omega;
    if (std::abs(loading.omega1 - loading.omega) <= tol || std::abs(loading.omega1 + loading.omega) <= tol) {
        fail("omega1", "omega1 = +-omega is a removable singularity of the load functional");
    }
    require_positive(loading.w0_target, "w0_target");
}

void validate(const ModeIndex& mode) {
    if (mode.n < 1) fail("n", "must be >= 1");
    if (mode.m < 1) fail("m", "must be >= 1");
}

void validate(const ShellConfig& config) {
    within("geometry", [&] { validate(config.geometry); });
    within("material", [&] { validate(config.material); });
    within("rods", [&] { validate(config.rods, config.geometry); });
    within("rings", [&] { validate(config.rings, config.geometry); });
    within("foundation", [&] { validate(config.foundation); });
    within("damage", [&] { validate(config.damage); });
    within("loading", [&] { validate(config.loading); });
}

ShellConfig reference_config() {
    ShellConfig c;
    c.geometry = {0.160, 0.800, 0.45e-3};

    // Only nu1, nu2 are given for the shell; E1 is taken equal to the ring
    // modulus and E2 follows from reciprocity.
    c.material.e1 = 6.67e9;
    c.material.nu1 = 0.11;
    c.material.nu2 = 0.19;
    c.material.e2 = c.material.e1 * c.material.nu2 / c.material.nu1;
    c.material.shear = 3.5e9;
    c.material.density = 7800.0;

    const double l = c.geometry.length;
    c.rods.count = 4;
    c.rods.area = 5.2e-6;
    c.rods.inertia_y = 1.3e-12;
    c.rods.inertia_z = 1.3e-12;
    c.rods.torsion = 0.23e-12;
    c.rods.modulus = InhomogeneityLaw(6.67e9, 0.4, l);
    c.rods.shear = InhomogeneityLaw(3.5e9, 0.4, l);
    c.rods.density = InhomogeneityLaw(7800.0, 0.4, l);

    c.rings.count = 4;
    c.rings.area = 5.2e-6;
    c.rings.inertia_z = 19.9e-12;
    c.rings.inertia_x = 19.9e-12;
    c.rings.torsion = 0.48e-12;
    c.rings.modulus = InhomogeneityLaw(6.67e9, 0.4, 2.0 * pi);
    c.rings.shear = InhomogeneityLaw(3.5e9, 0.4, 2.0 * pi);
    c.rings.density = InhomogeneityLaw(7800.0, 0.4, 2.0 * pi);

    c.foundation = {1e6, 1e4, 0.1615, 0.05};
    c.loading = {0.0, 0.0, 100.0, 200.0, 1e-4};
    return c;
}

}  // namespace stiffshell
