// SPDX-License-Identifier: Apache-2.0

#ifndef MMWSIM_ERRORS_HPP
#define MMWSIM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace mmwsim {

// Invalid scenario parameters (CLI exit code 2).
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string &msg) : std::runtime_error(msg) {}
};

// Problem size exceeds an enumeration cap (CLI exit code 3).
struct CapacityError : std::runtime_error {
    explicit CapacityError(const std::string &msg) : std::runtime_error(msg) {}
};

// Iterative routine failed to converge; carries the best estimate so far
// (CLI exit code 4).
struct ConvergenceError : std::runtime_error {
    ConvergenceError(const std::string &msg, double estimate)
        : std::runtime_error(msg), best_estimate(estimate) {}
    double best_estimate;
};

} // namespace mmwsim

#endif
