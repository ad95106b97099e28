#include "stiffshell/damage.hpp"

#include <cmath>

#include "stiffshell/core_model.hpp"
#include "stiffshell/errors.hpp"

namespace stiffshell {

namespace {

void check_domain(double omega, int cycles) {
    if (!(omega > 0.0) || !std::isfinite(omega)) throw DomainError("omega must be > 0");
    if (cycles < 1) throw DomainError("cycle count must be >= 1");
}

}  // namespace

ActiveIntervals active_intervals(double omega, int cycles) {
    check_domain(omega, cycles);
    ActiveIntervals out;
    out.windows.reserve(static_cast<std::size_t>(cycles));
    for (int k = 0; k < cycles; ++k) {
        out.windows.emplace_back((0.5 * pi + 2.0 * pi * k) / omega, (1.5 * pi + 2.0 * pi * k) / omega);
    }
    return out;
}

double characteristic_time(double omega, int cycles) {
    return active_intervals(omega, cycles).supremum();
}

double damage_modulation(double omega, double time, double rheologic) {
    if (!(omega > 0.0)) throw DomainError("omega must be > 0");
    if (!(time >= 0.0)) throw DomainError("time must be >= 0");
    const double full = std::sin(omega * time);
    const double half = std::sin(0.5 * omega * time);
    return (full * full + 4.0 * rheologic * half * half) / (2.0 * omega);
}

}  // namespace stiffshell
