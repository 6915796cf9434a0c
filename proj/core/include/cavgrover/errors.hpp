#pragma once

#include <stdexcept>
#include <string>

namespace cavgrover {

/// Invalid size or out-of-range argument (N = 0, marked qubit outside [1,N], ...).
class InvalidSizeError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Parameter combination that makes a derived formula singular (delta = 0, delta = 2J, chi = 0).
class SingularParameterError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Adaptive integration could not reach the requested tolerance (step-size underflow).
class IntegrationError : public std::runtime_error {
public:
    IntegrationError(const std::string& what, double t, double dt)
        : std::runtime_error(what + " (t=" + std::to_string(t) + ", dt=" + std::to_string(dt) + ")"),
          time(t), step(dt) {}
    double time;
    double step;
};

/// Malformed or constraint-violating run configuration; message names the key.
class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

} // namespace cavgrover
