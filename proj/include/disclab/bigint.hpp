#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace disclab {

// Exact integers and rationals. Products of primes, determinants and
// Beck-Fiala iterates all outgrow 64 bits at the sizes this library
// supports, so everything that can grow is kept exact.
using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

inline std::string to_decimal(const BigInt& x) { return x.str(); }

inline BigInt parse_decimal(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty integer string");
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) throw std::invalid_argument("sign without digits: " + s);
    for (; i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9')
            throw std::invalid_argument("not a decimal integer: " + s);
    return BigInt(s);
}

// Natural log of |x|; usable far beyond double range.
inline double log_abs(const BigInt& x) {
    if (x == 0) return -std::numeric_limits<double>::infinity();
    BigInt a = abs(x);
    unsigned bits = static_cast<unsigned>(msb(a)) + 1;
    if (bits <= 62) return std::log(a.convert_to<double>());
    unsigned shift = bits - 62;
    double top = (a >> shift).convert_to<double>();
    return std::log(top) + static_cast<double>(shift) * std::log(2.0);
}

// |x|^{1/k} in double precision.
inline double root_double(const BigInt& x, int k) {
    if (k <= 0) throw std::invalid_argument("root_double: k must be positive");
    if (x == 0) return 0.0;
    return std::exp(log_abs(x) / static_cast<double>(k));
}

} // namespace disclab
