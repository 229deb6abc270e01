#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace hypercore {

// Exact rational arithmetic for every quantity that feeds a verdict.
// Floating point is acceptable only for instance generation and timing.
using Rat = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// Exact binomial coefficient. Guards against overflow by construction:
// desk-scale instances keep n well below 64.
inline unsigned long long binomial(int n, int r) {
    if (r < 0 || r > n) return 0;
    if (n > 62) throw std::invalid_argument("binomial: n too large for exact 64-bit evaluation");
    if (r > n - r) r = n - r;
    unsigned long long res = 1;
    for (int i = 1; i <= r; ++i) {
        res = res * static_cast<unsigned long long>(n - r + i) / static_cast<unsigned long long>(i);
    }
    return res;
}

inline Rat rat(long long num, long long den = 1) {
    if (den == 0) throw std::invalid_argument("rat: zero denominator");
    return Rat(BigInt(num), BigInt(den));
}

// Canonical "p/q" rendering; integral values drop the denominator.
inline std::string rat_string(const Rat& r) {
    const BigInt num = boost::multiprecision::numerator(r);
    const BigInt den = boost::multiprecision::denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

inline Rat rat_parse(const std::string& s) {
    const auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(BigInt(s));
        return Rat(BigInt(s.substr(0, slash)), BigInt(s.substr(slash + 1)));
    } catch (const std::exception&) {
        throw std::invalid_argument("rat_parse: malformed rational '" + s + "'");
    }
}

} // namespace hypercore
