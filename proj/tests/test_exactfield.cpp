#include <cstdlib>
#include <map>
#include <random>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "qforma/cyclotomic.hpp"
#include "qforma/errors.hpp"
#include "qforma/numbertheory.hpp"

using namespace qforma;

namespace {

CyclotomicElem random_element(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> coeff(-4, 4);
    std::vector<BigRational> c(euler_phi(CyclotomicElem::default_order));
    for (auto& x : c) x = BigRational(coeff(rng), 1 + (coeff(rng) & 3));
    return CyclotomicElem(CyclotomicElem::default_order, std::move(c));
}

}  // namespace

TEST_CASE("cyclotomic constants and defining relations") {
    const auto i = CyclotomicElem::imag_unit();
    const auto s3 = CyclotomicElem::sqrt3();
    const auto z = CyclotomicElem::zeta24(1);

    CHECK(z.pow(24) == CyclotomicElem(1));
    CHECK(z.pow(12) == CyclotomicElem(-1));
    CHECK(i * i == CyclotomicElem(-1));
    CHECK(s3 * s3 == CyclotomicElem(3));
    CHECK(i.conj() == -i);
    CHECK(s3.conj() == s3);
    CHECK(s3.is_real());
    CHECK_FALSE((i * s3).is_real());
    CHECK(CyclotomicElem(BigRational(7, 3)).rational_value() == BigRational(7, 3));

    // The generator satisfies its minimal polynomial x^8 - x^4 + 1.
    const auto& phi24 = cyclotomic_polynomial(24);
    REQUIRE(phi24.size() == 9);
    CHECK(phi24 == std::vector<BigInt>{1, 0, 0, 0, -1, 0, 0, 0, 1});
    CyclotomicElem acc;
    for (size_t k = 0; k < phi24.size(); ++k)
        acc += BigRational(phi24[k]) * z.pow(static_cast<long long>(k));
    CHECK(acc.is_zero());

    CHECK(euler_phi(1) == 1);
    CHECK(euler_phi(12) == 4);
    CHECK(euler_phi(24) == 8);
}

TEST_CASE("cyclotomic field axioms on a deterministic sample") {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 20; ++trial) {
        const auto a = random_element(rng);
        const auto b = random_element(rng);
        const auto c = random_element(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * b == b * a);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a + (-a)).is_zero());
        CHECK((a * b).conj() == a.conj() * b.conj());
        if (!a.is_zero()) {
            CHECK(a * a.inverse() == CyclotomicElem(1));
            CHECK(a / a == CyclotomicElem(1));
        }
        CHECK(a.pow(0) == CyclotomicElem(1));
        CHECK(a.pow(3) == a * a * a);
    }
    CHECK_THROWS_AS(CyclotomicElem().inverse(), std::domain_error);
}

TEST_CASE("cyclotomic mixed orders embed into the lcm order") {
    const auto z8 = CyclotomicElem::root_of_unity(8, 1);
    const auto z3 = CyclotomicElem::root_of_unity(3, 1);
    CHECK(z8.order() == 8);
    CHECK(z3.order() == 3);
    CHECK((z8 * z3).order() == 24);
    CHECK(z8.embedded(24) == CyclotomicElem::zeta24(3));
    CHECK(z3.embedded(24) == CyclotomicElem::zeta24(8));
    CHECK(z8 * z3 == CyclotomicElem::zeta24(11));
    CHECK(CyclotomicElem::root_of_unity(24, -5) == CyclotomicElem::zeta24(19));
    CHECK_THROWS_AS(CyclotomicElem::zeta24(1).embedded(16), std::invalid_argument);
}

TEST_CASE("cyclotomic subfield membership and decomposition") {
    const auto i = CyclotomicElem::imag_unit();
    const auto s3 = CyclotomicElem::sqrt3();

    const auto g = CyclotomicElem(2) + BigRational(3) * i;
    REQUIRE(g.in_gaussian_field());
    auto [gr, gi] = g.gaussian_parts();
    CHECK(gr == 2);
    CHECK(gi == 3);
    CHECK_FALSE(s3.in_gaussian_field());
    CHECK_THROWS_AS(s3.gaussian_parts(), std::domain_error);

    const auto r = CyclotomicElem(BigRational(-1, 2)) + BigRational(5, 3) * s3;
    REQUIRE(r.in_sqrt3_field());
    auto [ra, rb] = r.sqrt3_parts();
    CHECK(ra == BigRational(-1, 2));
    CHECK(rb == BigRational(5, 3));
    CHECK_FALSE(i.in_sqrt3_field());
    CHECK_THROWS_AS(i.sqrt3_parts(), std::domain_error);

    CHECK(CyclotomicElem::zeta24(0).is_rational());
    CHECK_FALSE(CyclotomicElem::zeta24(1).is_rational());
    CHECK_THROWS_AS(CyclotomicElem::zeta24(1).rational_value(), std::domain_error);
}

TEST_CASE("root-of-unity exponent recovery") {
    for (long long k = 0; k < 24; ++k) {
        const auto got = root_of_unity_exponent(CyclotomicElem::zeta24(k));
        REQUIRE(got.has_value());
        CHECK(*got == static_cast<unsigned>(k));
    }
    CHECK_FALSE(root_of_unity_exponent(CyclotomicElem(2)).has_value());
    CHECK_FALSE(root_of_unity_exponent(CyclotomicElem(1) +
                                       CyclotomicElem::imag_unit())
                    .has_value());
}

TEST_CASE("primality and factorization") {
    CHECK(is_prime(BigInt(2)));
    CHECK(is_prime(BigInt(97)));
    CHECK(is_prime(BigInt(7919)));
    CHECK_FALSE(is_prime(BigInt(1)));
    CHECK_FALSE(is_prime(BigInt(91)));
    CHECK_FALSE(is_prime(BigInt("3825123056546413051")));  // strong pseudoprime trap

    const auto f360 = factorize(BigInt(360));
    CHECK(f360 == std::map<BigInt, unsigned>{{BigInt(2), 3}, {BigInt(3), 2}, {BigInt(5), 1}});
    CHECK(factorize(BigInt(-97)) == std::map<BigInt, unsigned>{{BigInt(97), 1}});

    // Two eight-digit primes: trial division up to 1e5 fails and the
    // cofactor is composite, so the factorization must refuse.
    CHECK_THROWS_AS(factorize(BigInt(99999989) * BigInt(99999971)),
                    factor_bound_exceeded);
    // Beyond the deterministic certificate range the primality test refuses
    // (small-prime trial division still answers first, so the probe must be
    // coprime to the trial primes; 10^30 itself just returns false).
    BigInt huge = 1;
    for (int k = 0; k < 30; ++k) huge *= 10;
    CHECK_FALSE(is_prime(huge));
    CHECK_THROWS_AS(is_prime(huge + 1), factor_bound_exceeded);
    CHECK_THROWS_AS(factorize(BigInt(0)), std::invalid_argument);
}

TEST_CASE("legendre symbol and valuation") {
    CHECK(legendre_symbol(BigInt(1), BigInt(7)) == 1);
    CHECK(legendre_symbol(BigInt(2), BigInt(7)) == 1);
    CHECK(legendre_symbol(BigInt(3), BigInt(7)) == -1);
    CHECK(legendre_symbol(BigInt(0), BigInt(5)) == 0);
    CHECK(legendre_symbol(BigInt(-1), BigInt(13)) == 1);
    CHECK(legendre_symbol(BigInt(-1), BigInt(7)) == -1);

    CHECK(valuation(BigRational(18), BigInt(3)) == 2);
    CHECK(valuation(BigRational(3, 8), BigInt(2)) == -3);
    CHECK(valuation(BigRational(7), BigInt(5)) == 0);
    CHECK_THROWS_AS(valuation(BigRational(0), BigInt(2)), std::invalid_argument);
}

TEST_CASE("hilbert symbol identities") {
    const auto inf = Place::at_infinity();
    const auto p2 = Place::at_prime(BigInt(2));
    const auto p3 = Place::at_prime(BigInt(3));

    CHECK(hilbert_symbol(BigRational(-1), BigRational(-1), inf) == -1);
    CHECK(hilbert_symbol(BigRational(-1), BigRational(-1), p2) == -1);
    CHECK(hilbert_symbol(BigRational(-1), BigRational(-1), p3) == 1);
    CHECK(hilbert_symbol(BigRational(3), BigRational(3), p3) == -1);

    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> pick(-9, 9);
    const std::vector<Place> places{inf, p2, p3, Place::at_prime(BigInt(5)),
                                    Place::at_prime(BigInt(7))};
    for (int trial = 0; trial < 40; ++trial) {
        BigRational a(pick(rng)), b(pick(rng)), c(pick(rng));
        if (a == 0 || b == 0 || c == 0) continue;
        for (const auto& v : places) {
            // Symmetry, multiplicativity, and (a, -a) = 1.
            CHECK(hilbert_symbol(a, b, v) == hilbert_symbol(b, a, v));
            CHECK(hilbert_symbol(a, b * c, v) ==
                  hilbert_symbol(a, b, v) * hilbert_symbol(a, c, v));
            CHECK(hilbert_symbol(a, -a, v) == 1);
            CHECK(hilbert_symbol(BigRational(1), b, v) == 1);
            // Square-class invariance.
            CHECK(hilbert_symbol(a * BigRational(49), b, v) == hilbert_symbol(a, b, v));
        }
    }
    CHECK_THROWS_AS(hilbert_symbol(BigRational(0), BigRational(1), p2),
                    std::invalid_argument);
}

TEST_CASE("quaternion ramification sets") {
    const auto hamilton = quaternion_ramification(BigRational(-1), BigRational(-1));
    REQUIRE(hamilton.size() == 2);
    CHECK(hamilton[0] == Place::at_prime(BigInt(2)));
    CHECK(hamilton[1] == Place::at_infinity());

    const auto t33 = quaternion_ramification(BigRational(3), BigRational(3));
    REQUIRE(t33.size() == 2);
    CHECK(t33[0] == Place::at_prime(BigInt(2)));
    CHECK(t33[1] == Place::at_prime(BigInt(3)));

    CHECK(quaternion_ramification(BigRational(1), BigRational(5)).empty());
    CHECK(quaternion_ramification(BigRational(2), BigRational(5)) ==
          std::vector<Place>{Place::at_prime(BigInt(2)), Place::at_prime(BigInt(5))});

    // Parity: the number of ramified places is always even.
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> pick(-50, 50);
    for (int trial = 0; trial < 60; ++trial) {
        BigRational a(pick(rng), 1 + std::abs(pick(rng)));
        BigRational b(pick(rng), 1 + std::abs(pick(rng)));
        if (a == 0 || b == 0) continue;
        CHECK(quaternion_ramification(a, b).size() % 2 == 0);
    }
}

TEST_CASE("sums of two rational squares") {
    CHECK(is_sum_of_two_rational_squares(BigRational(5)));
    CHECK(is_sum_of_two_rational_squares(BigRational(13, 17)));
    CHECK(is_sum_of_two_rational_squares(BigRational(9)));
    CHECK_FALSE(is_sum_of_two_rational_squares(BigRational(3)));
    CHECK_FALSE(is_sum_of_two_rational_squares(BigRational(-1)));
    CHECK_FALSE(is_sum_of_two_rational_squares(BigRational(7, 3)));

    for (const BigRational x : {BigRational(5), BigRational(13, 17), BigRational(50)}) {
        auto [r, s] = two_squares_decomposition(x);
        CHECK(r * r + s * s == x);
    }
    CHECK_THROWS_AS(two_squares_decomposition(BigRational(3)), std::domain_error);
}

TEST_CASE("places order and format") {
    CHECK(Place::at_prime(BigInt(2)) < Place::at_prime(BigInt(3)));
    CHECK(Place::at_prime(BigInt(999983)) < Place::at_infinity());
    CHECK(Place::at_infinity().to_string() == "inf");
    CHECK(Place::at_prime(BigInt(2)).to_string() == "2");
}
