// errors.hpp — exception types shared across the library

#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace gravcat {

// Eigensolver failed to reach its off-diagonal tolerance.
struct NonConvergence : std::runtime_error {
    explicit NonConvergence(const std::string& what) : std::runtime_error(what) {}
};

// A raw exponential or partition-function evaluation left the double range.
struct Overflow : std::runtime_error {
    explicit Overflow(const std::string& what) : std::runtime_error(what) {}
};

// A density matrix has an eigenvalue below the clamping threshold.
struct NotAState : std::runtime_error {
    explicit NotAState(const std::string& what) : std::runtime_error(what) {}
};

// Geometry with d > d' would give a negative coupling.
struct NegativeCoupling : std::runtime_error {
    explicit NegativeCoupling(const std::string& what) : std::runtime_error(what) {}
};

// Invalid sweep/CLI/config input; `field` names the offending entry.
struct ConfigError : std::runtime_error {
    std::string field;
    ConfigError(std::string field_name, const std::string& what)
        : std::runtime_error(what), field(std::move(field_name)) {}
};

}  // namespace gravcat
