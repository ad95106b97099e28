#pragma once

#include <optional>
#include <vector>

#include "stiffshell/action.hpp"

namespace stiffshell {

double determinant(const Matrix3& m);

/// Cramer's rule with a conditioning floor: |det| < 1e-12 * max|l_ij|^3
/// raises SingularSystemError (resonance of the homogeneous problem).
Vector3 solve_cramer(const Matrix3& m, const Vector3& rhs);

/// Solves L q = (0, 0, phi_star).
ModalAmplitudes solve_modal(const ActionQuadraticForm& form);

struct Displacements {
    double u = 0.0, theta = 0.0, w = 0.0;
};

/// Shell displacement at (x, phi, t) for solved amplitudes. DomainError when
/// x lies outside [0, l].
Displacements reconstruct_displacements(const ModalAmplitudes& amplitudes, const ModeIndex& mode,
                                        const ShellGeometry& geometry, double omega, double x, double phi, double t);

struct ModeResult {
    ModeIndex mode;
    bool excitable = false;
    double p1 = 0.0;  ///< meaningful only when excitable
    AlphaCoefficients alpha;
};

/// p1 = det(L) w0 / (alpha22 (l11 l22 - l12^2)) - alpha11 p0 / alpha22.
///
/// Returns a result with excitable == false (p1 unset) when alpha22 = 0.
/// Throws SingularSystemError when the w0 cofactor l11 l22 - l12^2 vanishes.
ModeResult critical_force_for_mode(const ShellConfig& config, const ModeIndex& mode, double time,
                                   const AssemblyOptions& options = {});

struct SearchRange {
    int n_min = 1;
    int n_max = 12;
    std::vector<int> m_values{1, 3, 5, 7};

    bool operator==(const SearchRange&) const = default;
};

void validate(const SearchRange& range);

struct CriticalForceResult {
    std::vector<ModeResult> table;  ///< n-major over the search rectangle
    ModeIndex argmin;
    double p1b = 0.0;
    double time = 0.0;
};

/// Minimum positive p1 over the excitable modes of the rectangle; ties go to
/// the smaller n, then the smaller m. Throws AllModesNonExcitable when no mode
/// couples to the load (or none yields a positive p1).
CriticalForceResult find_critical_force(const ShellConfig& config, const SearchRange& range, double time,
                                        const AssemblyOptions& options = {});

/// T from the damage model's cycle count.
double action_time(const ShellConfig& config);

}  // namespace stiffshell
