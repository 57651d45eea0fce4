#pragma once

#include "qforma/rational.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace qforma {

/// Element of the cyclotomic field Q(zeta_n), stored as a polynomial in
/// zeta_n of degree < phi(n), reduced modulo the n-th cyclotomic polynomial.
/// The default order is 24, which contains i and sqrt(3) and every root of
/// unity this library ever needs.  Binary operations on elements of
/// different orders lift both to the lcm order.
class CyclotomicElem {
public:
    static constexpr unsigned default_order = 24;

    CyclotomicElem();                                 // zero
    CyclotomicElem(int v);                            // rational constant
    CyclotomicElem(const BigRational& v);             // rational constant
    CyclotomicElem(unsigned order, std::vector<BigRational> coeffs);

    /// zeta_order^k (k may be negative).
    static CyclotomicElem root_of_unity(unsigned order, long long k);
    static CyclotomicElem zeta24(long long k) { return root_of_unity(24, k); }
    static CyclotomicElem imag_unit() { return zeta24(6); }
    static CyclotomicElem sqrt3() { return zeta24(2) + zeta24(-2); }

    unsigned order() const { return d_order; }
    /// Coefficients on 1, zeta, ..., zeta^{phi(order)-1}.
    const std::vector<BigRational>& coeffs() const { return d_c; }

    CyclotomicElem operator+(const CyclotomicElem& o) const;
    CyclotomicElem operator-(const CyclotomicElem& o) const;
    CyclotomicElem operator-() const;
    CyclotomicElem operator*(const CyclotomicElem& o) const;
    CyclotomicElem operator/(const CyclotomicElem& o) const;
    bool operator==(const CyclotomicElem& o) const;
    bool operator!=(const CyclotomicElem& o) const { return !(*this == o); }

    CyclotomicElem& operator+=(const CyclotomicElem& o) { return *this = *this + o; }
    CyclotomicElem& operator-=(const CyclotomicElem& o) { return *this = *this - o; }
    CyclotomicElem& operator*=(const CyclotomicElem& o) { return *this = *this * o; }
    CyclotomicElem& operator/=(const CyclotomicElem& o) { return *this = *this / o; }

    /// Complex conjugation, zeta^j -> zeta^{-j}.
    CyclotomicElem conj() const;
    /// Multiplicative inverse; throws std::domain_error on zero.
    CyclotomicElem inverse() const;
    /// Integer power (exponent may be negative).
    CyclotomicElem pow(long long e) const;

    bool is_zero() const;
    bool is_rational() const;
    /// Value as a rational; throws std::domain_error if not rational.
    BigRational rational_value() const;
    bool is_real() const { return conj() == *this; }

    /// Lies in the subfield Q(i)?
    bool in_gaussian_field() const;
    /// Decompose as a + b*i; throws std::domain_error if not in Q(i).
    std::pair<BigRational, BigRational> gaussian_parts() const;
    /// Lies in the subfield Q(sqrt 3)?
    bool in_sqrt3_field() const;
    /// Decompose as a + b*sqrt(3); throws std::domain_error if outside.
    std::pair<BigRational, BigRational> sqrt3_parts() const;

    /// Re-express in Q(zeta_m); requires order | m.
    CyclotomicElem embedded(unsigned m) const;

    std::string to_string() const;

private:
    void reduce(std::vector<BigRational> poly); // poly in zeta, any degree

    unsigned d_order;
    std::vector<BigRational> d_c; // length phi(d_order)
};

inline CyclotomicElem operator*(const BigRational& c, const CyclotomicElem& x) {
    return CyclotomicElem(c) * x;
}

/// phi(n) for n >= 1.
unsigned euler_phi(unsigned n);

/// n-th cyclotomic polynomial as integer coefficients, constant term first.
const std::vector<BigInt>& cyclotomic_polynomial(unsigned n);

/// If x is a root of unity of the element's order n, return k with
/// x = zeta_n^k; otherwise nullopt.
std::optional<unsigned> root_of_unity_exponent(const CyclotomicElem& x);

} // namespace qforma
