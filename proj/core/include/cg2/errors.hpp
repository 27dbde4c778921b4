#pragma once

#include <stdexcept>
#include <string>

namespace cg2 {

// Internal consistency violated: an invariant the math guarantees failed to hold.
// Catching one of these means a bug, corrupted input, or a falsified claim.
struct ValidationError : std::runtime_error {
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// Operation refused because it would exceed the enumeration budget.
// Message carries a cost estimate and, when applicable, the opt-in flag name.
struct BudgetError : std::runtime_error {
    explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

// Bad configuration: invalid m, non-primitive modulus, malformed inputs.
struct ConfigError : std::invalid_argument {
    explicit ConfigError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace cg2
