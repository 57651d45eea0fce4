#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace qforma {

using BigInt = boost::multiprecision::cpp_int;

/// Arbitrary-precision rational, kept in canonical form by the backing
/// implementation: numerator and denominator coprime, denominator > 0,
/// zero represented as 0/1.
using BigRational = boost::multiprecision::cpp_rational;

inline BigInt num(const BigRational& q) { return boost::multiprecision::numerator(q); }
inline BigInt den(const BigRational& q) { return boost::multiprecision::denominator(q); }

inline bool is_integer(const BigRational& q) { return den(q) == 1; }

/// "p/q" with the denominator omitted when it is 1.
inline std::string to_string(const BigRational& q) {
    if (is_integer(q)) return num(q).str();
    return num(q).str() + "/" + den(q).str();
}

/// Accepts "p", "p/q", optional leading minus on either part.
inline BigRational parse_rational(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return BigRational(BigInt(s));
        BigInt n(s.substr(0, slash));
        BigInt d(s.substr(slash + 1));
        if (d == 0) throw std::invalid_argument("zero denominator: " + s);
        return BigRational(n, d);
    } catch (const std::runtime_error&) {
        throw std::invalid_argument("malformed rational literal: " + s);
    }
}

} // namespace qforma
