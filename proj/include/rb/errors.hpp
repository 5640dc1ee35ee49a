#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace rb {

// Mixing scalars bound to different fields (F_3 vs F_5, ...).
class FieldMismatchError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Inverting zero, or a rational with zero denominator.
class DivisionByZeroError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Operands built over different algebras (dimension differs).
class SpecMismatchError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Constructor data violating its invariants (L^2 != 0, Q^2 != Q, bad rank, ...).
class InvalidDataError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Malformed textual/JSON input; message names the offending field.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Enumeration would exceed the configured budget.
class BudgetExceededError : public std::runtime_error {
public:
    BudgetExceededError(const std::string& msg, std::uint64_t required)
        : std::runtime_error(msg), required_checks(required) {}

    std::uint64_t required_checks;
};

} // namespace rb
