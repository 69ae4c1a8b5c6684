#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fuchsian/matrix.hpp"

namespace fuchsian {

// A freely reduced word in two generators and their inverses, the ledger
// that ties every matrix the reduction loop produces back to the input pair.
// Letters: 'a' = A, 'A' = A^-1, 'b' = B, 'B' = B^-1.
class FreeWord {
public:
    FreeWord() = default;
    static FreeWord generator_a() { return FreeWord({+1}); }
    static FreeWord generator_b() { return FreeWord({+2}); }
    static FreeWord parse(const std::string& letters);

    FreeWord inverse() const;
    friend FreeWord operator*(const FreeWord& x, const FreeWord& y);  // concatenate + reduce

    std::size_t length() const { return t_.size(); }
    bool empty() const { return t_.empty(); }

    // Evaluate in the given images of the generators.
    Mat2 evaluate(const Mat2& a, const Mat2& b) const;

    std::string str() const;  // "e" for the empty word

    friend bool operator==(const FreeWord& x, const FreeWord& y) { return x.t_ == y.t_; }

private:
    explicit FreeWord(std::vector<std::int8_t> t) : t_(std::move(t)) {}
    std::vector<std::int8_t> t_;  // +-1 for a/A, +-2 for b/B
};

}  // namespace fuchsian
