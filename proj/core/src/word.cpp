#include "fuchsian/word.hpp"

namespace fuchsian {

FreeWord FreeWord::parse(const std::string& letters) {
    std::vector<std::int8_t> t;
    for (char ch : letters) {
        switch (ch) {
            case 'a': t.push_back(+1); break;
            case 'A': t.push_back(-1); break;
            case 'b': t.push_back(+2); break;
            case 'B': t.push_back(-2); break;
            case 'e': break;
            default: throw ParseError(0, std::string("invalid word letter '") + ch + "'");
        }
    }
    FreeWord w;
    for (std::int8_t g : t) w = w * FreeWord({g});
    return w;
}

FreeWord FreeWord::inverse() const {
    std::vector<std::int8_t> t(t_.rbegin(), t_.rend());
    for (auto& g : t) g = static_cast<std::int8_t>(-g);
    return FreeWord(std::move(t));
}

FreeWord operator*(const FreeWord& x, const FreeWord& y) {
    std::vector<std::int8_t> t = x.t_;
    for (std::int8_t g : y.t_) {
        if (!t.empty() && t.back() == -g)
            t.pop_back();
        else
            t.push_back(g);
    }
    return FreeWord(std::move(t));
}

Mat2 FreeWord::evaluate(const Mat2& a, const Mat2& b) const {
    Mat2 m = Mat2::identity();
    // Keep the identity in the right backend.
    if (!t_.empty()) {
        Scalar one = Scalar(1).embedded_like(a.a());
        Scalar zero = Scalar(0).embedded_like(a.a());
        m = Mat2(one, zero, zero, one);
    }
    for (std::int8_t g : t_) {
        switch (g) {
            case +1: m = m * a; break;
            case -1: m = m * a.inverse(); break;
            case +2: m = m * b; break;
            case -2: m = m * b.inverse(); break;
        }
    }
    return m;
}

std::string FreeWord::str() const {
    if (t_.empty()) return "e";
    std::string s;
    for (std::int8_t g : t_) {
        switch (g) {
            case +1: s += 'a'; break;
            case -1: s += 'A'; break;
            case +2: s += 'b'; break;
            case -2: s += 'B'; break;
        }
    }
    return s;
}

}  // namespace fuchsian
