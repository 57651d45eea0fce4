#pragma once

#include "qforma/rational.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace qforma {

/// A place of Q: a finite prime or the archimedean place.
struct Place {
    bool infinite = false;
    BigInt prime = 0; // meaningful only when finite

    static Place at_infinity() { return Place{true, 0}; }
    static Place at_prime(BigInt p) { return Place{false, std::move(p)}; }

    bool operator==(const Place& o) const {
        return infinite == o.infinite && (infinite || prime == o.prime);
    }
    bool operator<(const Place& o) const {
        if (infinite != o.infinite) return !infinite; // finite places first
        return !infinite && prime < o.prime;
    }
    std::string to_string() const { return infinite ? "inf" : prime.str(); }
};

/// Deterministic Miller-Rabin with the 13-base certificate (valid below
/// 3.3e24); throws factor_bound_exceeded for larger inputs.
bool is_prime(const BigInt& n);

/// Prime factorization of |n| (n != 0) as prime -> exponent.  Trial division
/// up to trial_bound, then a primality check on the cofactor; throws
/// factor_bound_exceeded when the cofactor is composite.
std::map<BigInt, unsigned> factorize(const BigInt& n, const BigInt& trial_bound = BigInt(100000));

/// Legendre symbol (a|p) in {-1,0,1} for odd prime p.
int legendre_symbol(const BigInt& a, const BigInt& p);

/// p-adic valuation of a nonzero rational.
long long valuation(const BigRational& a, const BigInt& p);

/// Hilbert symbol (a,b)_v in {+1,-1} for nonzero rationals.
int hilbert_symbol(const BigRational& a, const BigRational& b, const Place& v);

/// Sorted list of the places where the quaternion algebra (a,b / Q)
/// ramifies.  Always has even cardinality.
std::vector<Place> quaternion_ramification(const BigRational& a, const BigRational& b);

/// Is x a sum of two squares of rationals?
bool is_sum_of_two_rational_squares(const BigRational& x);

/// Write x = r^2 + s^2 with r,s rational; requires the predicate above.
std::pair<BigRational, BigRational> two_squares_decomposition(const BigRational& x);

} // namespace qforma
