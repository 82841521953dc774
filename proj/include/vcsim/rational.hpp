#pragma once

#include <boost/rational.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace vcsim {

// Exact arithmetic for all capacity and price bookkeeping. Demand values
// like 1/6 and 1/8 must survive long reserve/release chains bit-exactly.
using Rational = boost::rational<std::int64_t>;

inline double to_double(const Rational& r) {
    return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

// Parses "3", "1/8", "-2/6". Whitespace is not accepted.
inline Rational parse_rational(const std::string& s) {
    const auto slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            return Rational(std::stoll(s));
        }
        const std::int64_t num = std::stoll(s.substr(0, slash));
        const std::int64_t den = std::stoll(s.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator");
        return Rational(num, den);
    } catch (const std::exception&) {
        throw std::invalid_argument("malformed rational: '" + s + "'");
    }
}

inline std::string to_string(const Rational& r) {
    if (r.denominator() == 1) return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

}  // namespace vcsim
