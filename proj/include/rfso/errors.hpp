#ifndef RFSO_ERRORS_HPP
#define RFSO_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace rfso {

// Argument outside the mathematical domain of an operation.
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

// Evaluation requested at (or too close to) a pole.
struct PoleError : std::domain_error {
    using std::domain_error::domain_error;
};

// An iterative scheme stopped before reaching its target tolerance.
struct ConvergenceError : std::runtime_error {
    ConvergenceError(const std::string& what, double achieved_tol)
        : std::runtime_error(what), achieved(achieved_tol) {}
    double achieved;
};

// Inconsistent or degenerate model parameters.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace rfso

#endif
