// errors.hpp — Error categories shared by all modules.
//
// ValidationError: a caller violated a documented precondition (bad input,
// bound violation, malformed config). Maps to CLI exit code 2.
// NumericalError: the computation itself failed (defective superoperator,
// lost stationary state). Maps to CLI exit code 3.

#pragma once

#include <stdexcept>
#include <string>

namespace eqq {

struct ValidationError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct NumericalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace eqq
