#pragma once

#include <functional>
#include <string>

#include "fuchsian/rational.hpp"

namespace fuchsian {

// Sign of a scalar. Exact backends always decide {Negative, Zero, Positive};
// the oracle backend decides {Negative, Positive} or gives up with
// Indeterminate after exhausting its precision budget. Indeterminate is a
// value, not an error: it is the observable content of the sign function not
// being bit-computable.
struct Sign {
    enum class Kind { Negative, Zero, Positive, Indeterminate };
    Kind kind = Kind::Indeterminate;
    unsigned precision_reached = 0;  // meaningful for Indeterminate

    static Sign negative() { return {Kind::Negative, 0}; }
    static Sign zero() { return {Kind::Zero, 0}; }
    static Sign positive() { return {Kind::Positive, 0}; }
    static Sign indeterminate(unsigned m) { return {Kind::Indeterminate, m}; }
    static Sign of_int(int s) { return s < 0 ? negative() : (s > 0 ? positive() : zero()); }

    bool determinate() const { return kind != Kind::Indeterminate; }
    bool is_zero() const { return kind == Kind::Zero; }
    bool is_negative() const { return kind == Kind::Negative; }
    bool is_positive() const { return kind == Kind::Positive; }
    // -1 / 0 / +1; only valid when determinate.
    int value() const;

    friend bool operator==(const Sign& a, const Sign& b) { return a.kind == b.kind; }
};

std::string to_string(Sign::Kind k);

// An oracle for a real number x: a query function m -> dyadic rational with
// |query(m) - x| < 2^-m for every m. Derived oracles (sums, products, ...)
// preserve the contract by querying their inputs at inflated precision.
// Values are immutable and share their query closures.
class DyadicOracle {
public:
    DyadicOracle() : DyadicOracle(Rational(0)) {}
    explicit DyadicOracle(const Rational& exact_value);
    explicit DyadicOracle(std::function<Rational(unsigned)> query) : query_(std::move(query)) {}

    // The dyadic approximation phi(m); |phi(m) - x| < 2^-m.
    Rational query(unsigned m) const { return query_(m); }

    friend DyadicOracle operator+(const DyadicOracle& a, const DyadicOracle& b);
    friend DyadicOracle operator-(const DyadicOracle& a, const DyadicOracle& b);
    friend DyadicOracle operator-(const DyadicOracle& a);
    friend DyadicOracle operator*(const DyadicOracle& a, const DyadicOracle& b);
    // Caller asserts b != 0; gives up (throws) if b cannot be separated from
    // zero by precision 2^-4096.
    friend DyadicOracle operator/(const DyadicOracle& a, const DyadicOracle& b);

    // abs and max are continuous, hence bit-computable pointwise.
    DyadicOracle abs() const;
    static DyadicOracle max(const DyadicOracle& a, const DyadicOracle& b);

private:
    std::function<Rational(unsigned)> query_;
};

// Escalating sign determination: queries phi(m) for m = 1..max_precision and
// certifies the sign as soon as |phi(m)| > 2^-m. Returns Indeterminate when
// the budget runs out, which on an oracle for 0 is always.
Sign sign_at_precision(const DyadicOracle& a, unsigned max_precision);

}  // namespace fuchsian
