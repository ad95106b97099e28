#pragma once

#include <string>
#include <vector>

namespace stiffshell {

enum class CheckLevel { fast, full };

struct SelfCheckOptions {
    CheckLevel level = CheckLevel::fast;
    /// Test hook: assemble with the sign of b12 flipped so that the
    /// closed-form/quadrature comparison must fail.
    bool flip_b12 = false;
};

struct CheckOutcome {
    std::string name;  ///< the invariant being checked
    bool passed = false;
    std::string detail;
};

struct SelfCheckReport {
    std::vector<CheckOutcome> outcomes;

    bool passed() const;
    /// One "PASS|FAIL  name  (detail)" line per check.
    std::string text() const;
};

/// fast: profile integrals closed form vs quadrature, Cramer vs elimination,
/// shell strain block vs energy quadrature.
/// full: adds the action Hessian oracle on the reference configuration,
/// the degenerate reductions, stiffener additivity and excitability.
SelfCheckReport self_check(const SelfCheckOptions& options = {});

}  // namespace stiffshell
