// errors.hpp -- exception types shared across the library.

#ifndef TWRC_ERRORS_HPP
#define TWRC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace twrc {

// Argument outside the mathematical domain of a kernel (x <= 0 for K_nu, ...).
class DomainError : public std::domain_error {
public:
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// Adaptive quadrature exhausted its subdivision budget before meeting tolerance.
class NonConvergence : public std::runtime_error {
public:
    explicit NonConvergence(const std::string& what) : std::runtime_error(what) {}
};

// Root bracketing precondition violated (no sign change over [lo, hi]).
class BracketError : public std::runtime_error {
public:
    explicit BracketError(const std::string& what) : std::runtime_error(what) {}
};

// A link statistic was requested for a terminal transmitting zero power.
class DegeneratePower : public std::invalid_argument {
public:
    explicit DegeneratePower(const std::string& what) : std::invalid_argument(what) {}
};

// Sum rate beyond the capacity region under the exact allocation method.
class InfeasibleSumRate : public std::invalid_argument {
public:
    explicit InfeasibleSumRate(const std::string& what) : std::invalid_argument(what) {}
};

// Bad scenario file or command-line input.
class ValidationError : public std::invalid_argument {
public:
    explicit ValidationError(const std::string& what) : std::invalid_argument(what) {}
};

} // namespace twrc

#endif // TWRC_ERRORS_HPP
