#pragma once

#include <stdexcept>
#include <string>

namespace bckcode {

// Malformed or out-of-range input (bad table entry, length mismatch, bound exceeded).
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A documented precondition does not hold (e.g. a non-BCK table passed where BCK is required).
class PreconditionError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// A guaranteed postcondition failed. Always a bug; never caught internally.
class InternalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace bckcode
