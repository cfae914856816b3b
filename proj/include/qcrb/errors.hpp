#pragma once

#include <stdexcept>
#include <string>

namespace qcrb {

// Bad input: out-of-range parameters, wrong shapes, non-symmetric weights.
class ValidationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class NotPsdError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class SingularityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Parameter on or outside the open Bloch ball.
class BoundaryError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class InfeasibleError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DegenerateInformationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ConvergenceError : public std::runtime_error {
public:
    ConvergenceError(const std::string& what, double best_value)
        : std::runtime_error(what), best_value_(best_value) {}
    double best_value() const noexcept { return best_value_; }

private:
    double best_value_;
};

}  // namespace qcrb
