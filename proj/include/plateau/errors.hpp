#pragma once

#include <stdexcept>
#include <string>

namespace plateau {

/// Input outside the mathematical domain of an operation (bad rate, length mismatch, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Request exceeds an enumeration or state-space cap.
class CapacityError : public std::length_error {
public:
    using std::length_error::length_error;
};

/// Numerical failure inside a solver that should not happen for valid inputs.
class InternalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace plateau
