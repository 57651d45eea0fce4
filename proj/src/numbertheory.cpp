#include "qforma/numbertheory.hpp"

#include "qforma/errors.hpp"

#include <boost/multiprecision/integer.hpp>

#include <algorithm>
#include <set>
#include <stdexcept>

namespace qforma {
namespace {

// Largest n for which the 13-base Miller-Rabin test below is a proof.
const BigInt mr_certified_limit("3317044064679887385961981");

bool miller_rabin_witness(const BigInt& n, const BigInt& a, const BigInt& d, unsigned s) {
    BigInt x = boost::multiprecision::powm(a % n, d, n);
    if (x == 1 || x == n - 1) return false;
    for (unsigned r = 1; r < s; ++r) {
        x = (x * x) % n;
        if (x == n - 1) return false;
    }
    return true; // a witnesses compositeness
}

} // namespace

bool is_prime(const BigInt& n) {
    if (n < 2) return false;
    static const int small_primes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};
    for (int p : small_primes) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    if (n >= mr_certified_limit)
        throw factor_bound_exceeded("primality test certified only below 3.3e24; got " + n.str());
    BigInt d = n - 1;
    unsigned s = 0;
    while (d % 2 == 0) {
        d /= 2;
        ++s;
    }
    for (int a : small_primes)
        if (miller_rabin_witness(n, BigInt(a), d, s)) return false;
    return true;
}

std::map<BigInt, unsigned> factorize(const BigInt& n, const BigInt& trial_bound) {
    if (n == 0) throw std::invalid_argument("cannot factor zero");
    BigInt m = boost::multiprecision::abs(n);
    std::map<BigInt, unsigned> f;
    auto strip = [&](const BigInt& p) {
        while (m % p == 0) {
            m /= p;
            ++f[p];
        }
    };
    strip(BigInt(2));
    strip(BigInt(3));
    for (BigInt p = 5; p <= trial_bound && p * p <= m; p += 6) {
        strip(p);
        strip(p + 2);
    }
    if (m > 1) {
        if (!is_prime(m))
            throw factor_bound_exceeded("composite cofactor " + m.str() +
                                        " exceeds the trial division bound");
        ++f[m];
    }
    return f;
}

int legendre_symbol(const BigInt& a, const BigInt& p) {
    BigInt r = a % p;
    if (r < 0) r += p;
    if (r == 0) return 0;
    BigInt e = boost::multiprecision::powm(r, (p - 1) / 2, p);
    return e == 1 ? 1 : -1;
}

long long valuation(const BigRational& a, const BigInt& p) {
    if (a == 0) throw std::invalid_argument("valuation of zero");
    long long v = 0;
    BigInt x = num(a);
    while (x % p == 0) {
        x /= p;
        ++v;
    }
    x = den(a);
    while (x % p == 0) {
        x /= p;
        --v;
    }
    return v;
}

namespace {

// Unit part of a at p: a / p^{v_p(a)} as a rational with p-free num and den.
BigRational unit_part(const BigRational& a, const BigInt& p) {
    BigInt n = num(a), d = den(a);
    while (n % p == 0) n /= p;
    while (d % p == 0) d /= p;
    return BigRational(n, d);
}

// x mod m for a rational with denominator coprime to m, using den^{-1} = den
// mod 8 for odd denominators (only called with m = 4 or 8 here).
BigInt odd_unit_residue(const BigRational& u, const BigInt& m) {
    BigInt r = (num(u) % m) * (den(u) % m) % m;
    if (r < 0) r += m;
    return r;
}

int epsilon2(const BigRational& u) { // (u-1)/2 mod 2 via u mod 4
    return odd_unit_residue(u, BigInt(4)) == 1 ? 0 : 1;
}

int omega2(const BigRational& u) { // (u^2-1)/8 mod 2 via u mod 8
    BigInt r = odd_unit_residue(u, BigInt(8));
    return (r == 1 || r == 7) ? 0 : 1;
}

int rational_legendre(const BigRational& u, const BigInt& p) {
    return legendre_symbol(num(u), p) * legendre_symbol(den(u), p);
}

int sign_pow(long long e) { return (e % 2 == 0) ? 1 : -1; }

} // namespace

int hilbert_symbol(const BigRational& a, const BigRational& b, const Place& v) {
    if (a == 0 || b == 0) throw std::invalid_argument("hilbert symbol needs nonzero arguments");
    if (v.infinite) return (a < 0 && b < 0) ? -1 : 1;
    const BigInt& p = v.prime;
    long long alpha = valuation(a, p), beta = valuation(b, p);
    BigRational u = unit_part(a, p), w = unit_part(b, p);
    if (p == 2) {
        long long e = static_cast<long long>(epsilon2(u)) * epsilon2(w) + alpha * omega2(w) +
                      beta * omega2(u);
        return sign_pow(e);
    }
    int eps = ((p - 1) / 2) % 2 == 0 ? 0 : 1;
    int r = sign_pow(alpha * beta * eps);
    if (beta % 2 != 0) r *= rational_legendre(u, p);
    if (alpha % 2 != 0) r *= rational_legendre(w, p);
    return r;
}

std::vector<Place> quaternion_ramification(const BigRational& a, const BigRational& b) {
    if (a == 0 || b == 0) throw std::invalid_argument("quaternion algebra needs nonzero parameters");
    std::set<Place> candidates;
    candidates.insert(Place::at_infinity());
    candidates.insert(Place::at_prime(BigInt(2)));
    for (const BigRational* x : {&a, &b}) {
        for (const BigInt& part : {num(*x), den(*x)}) {
            for (const auto& [p, e] : factorize(part)) {
                (void)e;
                candidates.insert(Place::at_prime(p));
            }
        }
    }
    std::vector<Place> ramified;
    for (const auto& v : candidates)
        if (hilbert_symbol(a, b, v) == -1) ramified.push_back(v);
    if (ramified.size() % 2 != 0)
        throw std::logic_error("ramification set has odd cardinality; symbol computation broken");
    return ramified;
}

bool is_sum_of_two_rational_squares(const BigRational& x) {
    if (x == 0) return true;
    if (x < 0) return false;
    BigInt nd = num(x) * den(x); // x ~ nd modulo squares
    for (const auto& [p, e] : factorize(nd))
        if (p % 4 == 3 && e % 2 != 0) return false;
    return true;
}

namespace {

// p = s^2 + t^2 for prime p = 2 or p % 4 == 1, by Cornacchia descent.
std::pair<BigInt, BigInt> prime_two_squares(const BigInt& p) {
    if (p == 2) return {1, 1};
    // find z with z^2 = -1 mod p
    BigInt z = 0;
    for (BigInt r = 2;; ++r) {
        if (legendre_symbol(r, p) == -1) {
            z = boost::multiprecision::powm(r, (p - 1) / 4, p);
            break;
        }
    }
    BigInt a = p, b = z;
    while (b * b >= p) {
        BigInt t = a % b;
        a = b;
        b = t;
    }
    BigInt s2 = p - b * b;
    BigInt t = boost::multiprecision::sqrt(s2);
    if (t * t != s2) throw std::logic_error("two-squares descent failed");
    return {b, t};
}

} // namespace

std::pair<BigRational, BigRational> two_squares_decomposition(const BigRational& x) {
    if (x == 0) return {BigRational(0), BigRational(0)};
    if (!is_sum_of_two_rational_squares(x))
        throw std::domain_error("not a sum of two rational squares: " + to_string(x));
    BigInt target = num(x) * den(x);
    BigInt ga = 1, gb = 0; // gaussian accumulator ga + gb*i
    for (const auto& [p, e] : factorize(target)) {
        unsigned pairs = e / 2;
        BigInt ppow = 1;
        for (unsigned k = 0; k < pairs; ++k) ppow *= p;
        ga *= ppow;
        gb *= ppow;
        if (e % 2 != 0) {
            auto [s, t] = prime_two_squares(p); // p % 4 == 3 impossible here
            BigInt na = ga * s - gb * t;
            BigInt nb = ga * t + gb * s;
            ga = na;
            gb = nb;
        }
    }
    if (ga * ga + gb * gb != target) throw std::logic_error("two-squares combination failed");
    BigRational d(den(x));
    return {BigRational(ga) / d, BigRational(gb) / d};
}

} // namespace qforma
