#pragma once

#include <string>

#include "fuchsian/matrix.hpp"

namespace fuchsian {

// Textual input grammar shared by the CLI and the test fixtures.
//
//   rational   := integer | integer "/" positive-integer
//   coeffs     := "[" rational ("," rational)* "]"        (ascending degree)
//   field spec := coeffs ";" "[" rational "," rational "]"
//   scalar     := rational
//              | coeffs                  (representation in gamma; needs a field)
//              | "alg(" coeffs ";" "[" rational "," rational "]" ";" coeffs ")"
//              | "sqrt(" rational ")"    (interval backend demo constant)
//   matrix     := "[[" scalar "," scalar "],[" scalar "," scalar "]]"
//
// Whitespace is allowed between tokens. On the interval backend rational
// scalars become exact-value oracles.
struct InputContext {
    Backend backend = Backend::Rational;
    FieldPtr field;  // required for algebraic scalars without an inline field
};

FieldPtr parse_field_spec(const std::string& text);
Scalar parse_scalar(const std::string& text, const InputContext& ctx);
Mat2 parse_matrix(const std::string& text, const InputContext& ctx);

// Oracle for sqrt(q), q >= 0 rational, by dyadic bisection.
DyadicOracle sqrt_oracle(const Rational& q);

}  // namespace fuchsian
