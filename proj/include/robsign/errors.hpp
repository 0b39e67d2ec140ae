#pragma once

#include <stdexcept>
#include <string>

#include <Eigen/Core>

namespace robsign {

// Bad inputs: shapes, ranges, malformed files, schema violations.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

// The computation itself failed: non-convergence, singular matrices,
// degenerate data.
class NumericalError : public std::runtime_error {
public:
    explicit NumericalError(const std::string& msg) : std::runtime_error(msg) {}
};

// Non-convergence of an iterative solver; carries the best iterate found.
class ConvergenceError : public NumericalError {
public:
    ConvergenceError(const std::string& msg, Eigen::VectorXd best, double residual)
        : NumericalError(msg), best_iterate(std::move(best)), residual(residual) {}

    Eigen::VectorXd best_iterate;
    double residual;
};

}  // namespace robsign
