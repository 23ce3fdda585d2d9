#pragma once

#include <stdexcept>
#include <string>

namespace holevo {

// Raised when an input violates a structural contract (shape mismatch,
// invalid probability distribution, malformed scenario). Maps to CLI exit 2.
class ValidationError : public std::invalid_argument {
public:
    explicit ValidationError(const std::string& what) : std::invalid_argument(what) {}
};

// Raised when a matrix fails a numerical property it was required to have
// (not Hermitian, not unitary, negative spectrum) or an iterative routine
// fails to converge. Maps to CLI exit 3.
class NumericalError : public std::runtime_error {
public:
    explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace holevo
