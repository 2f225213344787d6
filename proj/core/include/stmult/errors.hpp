#pragma once

#include <stdexcept>
#include <string>

namespace stmult {

// Thrown when a closed-form result is requested outside the hypothesis it
// was proved under. The message names the violated hypothesis; callers must
// not catch-and-continue with an unproven number.
class PreconditionError : public std::runtime_error {
public:
    explicit PreconditionError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace stmult
