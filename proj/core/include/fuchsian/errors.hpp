#pragma once

#include <stdexcept>
#include <string>

namespace fuchsian {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Arithmetic between scalars of different backends (or different number fields).
struct BackendMismatch : Error {
    using Error::Error;
};

// Division by a scalar that is exactly zero.
struct DivisionByZero : Error {
    using Error::Error;
};

// A comparison on the interval (oracle) backend that could not be certified
// within the precision budget. Carries the precision reached when giving up.
struct UnresolvedComparison : Error {
    explicit UnresolvedComparison(unsigned precision_reached,
                                  const std::string& what_arg = "comparison unresolved at maximum precision")
        : Error(what_arg + " (precision " + std::to_string(precision_reached) + ")"),
          precision(precision_reached) {}
    unsigned precision;
};

// Textual input that does not conform to the documented grammar.
struct ParseError : Error {
    ParseError(std::size_t at, const std::string& message)
        : Error(message + " (at position " + std::to_string(at) + ")"), position(at) {}
    std::size_t position;
};

}  // namespace fuchsian
