#pragma once

#include <algorithm>
#include <cmath>

#include "stiffshell/action.hpp"

namespace testing_util {

using namespace stiffshell;

struct Differences {
    Matrix3 hessian{};
    double load = 0.0;  ///< -dW/dw0 at q = 0
};

// Central differences of the quadrature action around q = 0.
inline Differences differences(const ShellConfig& c, const ModeIndex& mode, double t, double h = 1e-6) {
    auto w = [&](double a, double b, double d) { return assemble_by_quadrature(c, mode, t, {a, b, d}); };
    auto shifted = [&](int i, double di, int j, double dj) {
        double q[3] = {0.0, 0.0, 0.0};
        q[i] += di;
        q[j] += dj;
        return w(q[0], q[1], q[2]);
    };
    Differences out;
    const double centre = w(0, 0, 0);
    for (int i = 0; i < 3; ++i) {
        const double up = shifted(i, h, i, 0), down = shifted(i, -h, i, 0);
        out.hessian[i][i] = (up - 2 * centre + down) / (h * h);
        if (i == 2) out.load = -(up - down) / (2 * h);
        for (int j = 0; j < i; ++j) {
            out.hessian[i][j] = out.hessian[j][i] =
                (shifted(i, h, j, h) - shifted(i, h, j, -h) - shifted(i, -h, j, h) + shifted(i, -h, j, -h)) /
                (4 * h * h);
        }
    }
    return out;
}

inline double max_abs(const Matrix3& m) {
    double s = 0.0;
    for (const auto& row : m)
        for (double v : row) s = std::max(s, std::abs(v));
    return s;
}

// Entry-wise relative error; entries far below the matrix scale are compared
// against 1e-12 of that scale instead of their own size.
inline double matrix_rel(const Matrix3& a, const Matrix3& b) {
    const double floor = 1e-12 * std::max(max_abs(a), max_abs(b));
    double worst = 0.0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            const double s = std::max({std::abs(a[i][j]), std::abs(b[i][j]), floor});
            if (s > 0) worst = std::max(worst, std::abs(a[i][j] - b[i][j]) / s);
        }
    return worst;
}

inline double rel(double a, double b) {
    const double s = std::max(std::abs(a), std::abs(b));
    return s == 0.0 ? 0.0 : std::abs(a - b) / s;
}

inline ShellConfig homogeneous(ShellConfig c) {
    c.rods.modulus = c.rods.modulus.with_slope(0.0);
    c.rods.shear = c.rods.shear.with_slope(0.0);
    c.rods.density = c.rods.density.with_slope(0.0);
    c.rings.modulus = c.rings.modulus.with_slope(0.0);
    c.rings.shear = c.rings.shear.with_slope(0.0);
    c.rings.density = c.rings.density.with_slope(0.0);
    return c;
}

inline ShellConfig static_foundation(ShellConfig c) {
    c.foundation.kernel_amplitude = 0.0;
    return c;
}

inline ShellConfig bare(ShellConfig c) {
    c.rods.count = 0;
    c.rings.count = 0;
    c.foundation = {};
    c.damage.gamma = 0.0;
    c.loading.p0 = c.loading.p1 = 0.0;
    return c;
}

}  // namespace testing_util
