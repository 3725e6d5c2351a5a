#pragma once

#include <stdexcept>
#include <string>

namespace wavesim {

/// Invalid or inconsistent configuration (bad key, constraint violation,
/// unalignable step size). Maps to CLI exit code 2.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Numerical failure during integration (non-finite state). Carries the
/// simulation time at which the failure was detected. Maps to exit code 3.
class SimulationError : public std::runtime_error {
public:
    SimulationError(const std::string& msg, double t_fail)
        : std::runtime_error(msg), t(t_fail) {}
    double t = 0.0;
};

} // namespace wavesim
