#pragma once

#include <stdexcept>
#include <string>

namespace redhom {

/// Malformed user input: bad ring/module specs, unknown catalog ids, invalid tables.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An internal consistency check failed (d∘d ≠ 0, a certificate that does not re-verify, ...).
class InvariantError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Caller broke an operation's precondition (dimension mismatch, mixed fields, ...).
class ContractViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace redhom
