#pragma once

#include <utility>
#include <vector>

namespace stiffshell {

/// Loading windows (t-, t+) during which the active stress grows damage:
/// [(pi/2 + 2*pi*k)/omega, (3*pi/2 + 2*pi*k)/omega], k = 0..cycles-1.
struct ActiveIntervals {
    std::vector<std::pair<double, double>> windows;

    double supremum() const { return windows.empty() ? 0.0 : windows.back().second; }
};

/// Throws DomainError for omega <= 0 or cycles < 1.
ActiveIntervals active_intervals(double omega, int cycles);

/// Upper limit of the action integral: the last t+ of active_intervals.
double characteristic_time(double omega, int cycles = 1);

/// F(T) = (sin^2(omega*T) + 4*R_l*sin^2(omega*T/2)) / (2*omega).
double damage_modulation(double omega, double time, double rheologic);

}  // namespace stiffshell
