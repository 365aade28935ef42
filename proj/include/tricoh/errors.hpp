#pragma once

#include <stdexcept>
#include <string>

namespace tricoh {

/// Argument outside the documented domain of an operation.
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Adaptive quadrature ran out of subdivisions before meeting its tolerance.
class ConvergenceError : public std::runtime_error {
public:
    ConvergenceError(const std::string& what, double estimate, double error_bound)
        : std::runtime_error(what), estimate_(estimate), error_bound_(error_bound) {}

    double estimate() const noexcept { return estimate_; }
    double error_bound() const noexcept { return error_bound_; }

private:
    double estimate_;
    double error_bound_;
};

/// The ODE right-hand side produced a non-finite value.
class PropagationError : public std::runtime_error {
public:
    PropagationError(const std::string& what, double last_good_time)
        : std::runtime_error(what), last_good_time_(last_good_time) {}

    double last_good_time() const noexcept { return last_good_time_; }

private:
    double last_good_time_;
};

/// A propagated state drifted outside the density-matrix invariants.
class InternalConsistencyError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Spectrum of a supposed density matrix has a clearly negative eigenvalue.
class InvalidStateError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Malformed scenario configuration; carries the offending line and field.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, int line, std::string field)
        : std::runtime_error(what), line_(line), field_(std::move(field)) {}

    int line() const noexcept { return line_; }
    const std::string& field() const noexcept { return field_; }

private:
    int line_;
    std::string field_;
};

}  // namespace tricoh
