#include <algorithm>
#include <set>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "qforma/rootsystem.hpp"

using namespace qforma;

namespace {

RootSystem make(const char* t) { return RootSystem{CartanType::parse(t)}; }

}  // namespace

TEST_CASE("cartan type parsing") {
    CHECK(CartanType::parse("A3").to_string() == "A3");
    CHECK(CartanType::parse("B2xG2").to_string() == "B2xG2");
    CHECK(CartanType::parse("B2xG2").rank() == 4);
    CHECK(CartanType::parse("E8").rank() == 8);
    CHECK_THROWS_AS(CartanType::parse("A0"), std::invalid_argument);
    CHECK_THROWS_AS(CartanType::parse("D2"), std::invalid_argument);
    CHECK_THROWS_AS(CartanType::parse("E9"), std::invalid_argument);
    CHECK_THROWS_AS(CartanType::parse("H3"), std::invalid_argument);
    CHECK_THROWS_AS(CartanType::parse(""), std::invalid_argument);
}

TEST_CASE("positive root counts") {
    CHECK(make("A1").num_positive() == 1);
    CHECK(make("A2").num_positive() == 3);
    CHECK(make("A3").num_positive() == 6);
    CHECK(make("B2").num_positive() == 4);
    CHECK(make("C3").num_positive() == 9);
    CHECK(make("D4").num_positive() == 12);
    CHECK(make("G2").num_positive() == 6);
    CHECK(make("F4").num_positive() == 24);
    CHECK(make("E6").num_positive() == 36);
    CHECK(make("E7").num_positive() == 63);
    CHECK(make("E8").num_positive() == 120);
    CHECK(make("B2xG2").num_positive() == 10);
}

TEST_CASE("cartan matrices match the standard tables") {
    const auto a3 = make("A3");
    const int a3_expect[3][3] = {{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) CHECK(a3.cartan(i, j) == a3_expect[i][j]);

    // Convention: cartan(i, j) = <alpha_i, alpha_j^vee>.
    const auto b2 = make("B2");
    CHECK(b2.cartan(0, 1) == -2);  // alpha_1 long against the short coroot
    CHECK(b2.cartan(1, 0) == -1);
    CHECK(b2.d(0) == 2);
    CHECK(b2.d(1) == 1);

    const auto c3 = make("C3");
    CHECK(c3.cartan(2, 1) == -2);  // alpha_3 long in the C series
    CHECK(c3.cartan(1, 2) == -1);
    CHECK(c3.d(2) == 2);

    const auto g2 = make("G2");
    CHECK(g2.cartan(0, 1) == -1);
    CHECK(g2.cartan(1, 0) == -3);
    CHECK(g2.d(0) == 1);  // alpha_1 short
    CHECK(g2.d(1) == 3);

    const auto f4 = make("F4");
    CHECK(f4.cartan(1, 2) == -2);  // the double bond 2 => 3
    CHECK(f4.cartan(2, 1) == -1);

    // cartan(i, j) = <alpha_i, alpha_j-coroot> = 2 (a_i, a_j) / (a_j, a_j),
    // so multiplying by the half-norm of the COROOT side symmetrizes:
    // d_j * cartan(i, j) = (a_i, a_j) = d_i * cartan(j, i).
    for (const char* t : {"A3", "B3", "C3", "D4", "G2", "F4", "E6"}) {
        const auto rs = make(t);
        for (int i = 0; i < rs.rank(); ++i)
            for (int j = 0; j < rs.rank(); ++j)
                CHECK(rs.d(j) * rs.cartan(i, j) == rs.d(i) * rs.cartan(j, i));
    }
}

TEST_CASE("roots are ordered by height then ascending coefficients") {
    const auto b2 = make("B2");
    CHECK(b2.root_coeffs(1) == std::vector<int>{0, 1});
    CHECK(b2.root_coeffs(2) == std::vector<int>{1, 0});
    CHECK(b2.root_coeffs(3) == std::vector<int>{1, 1});
    CHECK(b2.root_coeffs(4) == std::vector<int>{1, 2});
    CHECK(b2.root_coeffs(-4) == std::vector<int>{-1, -2});
    CHECK(b2.height(4) == 3);
    CHECK(b2.height(-4) == -3);

    for (const char* t : {"A3", "B3", "G2", "F4"}) {
        const auto rs = make(t);
        for (int a = 1; a < rs.num_positive(); ++a) {
            const int ha = rs.height(a), hb = rs.height(a + 1);
            CHECK(ha <= hb);
            if (ha == hb) CHECK(rs.root_coeffs(a) < rs.root_coeffs(a + 1));
        }
        // The first `rank` roots are exactly the simple roots.
        for (int a = 1; a <= rs.rank(); ++a) CHECK(rs.height(a) == 1);
    }
}

TEST_CASE("root index lookups and sums") {
    const auto g2 = make("G2");
    for (int a = -6; a <= 6; ++a) {
        if (a == 0) continue;
        const auto idx = g2.index_of(g2.root_coeffs(a));
        REQUIRE(idx.has_value());
        CHECK(*idx == a);
    }
    CHECK_FALSE(g2.index_of({2, 2}).has_value());

    for (int a = -6; a <= 6; ++a)
        for (int b = -6; b <= 6; ++b) {
            if (!a || !b) continue;
            auto ca = g2.root_coeffs(a);
            const auto cb = g2.root_coeffs(b);
            for (size_t k = 0; k < ca.size(); ++k) ca[k] += cb[k];
            const auto direct = g2.index_of(ca);
            const auto via_sum = g2.sum_root(a, b);
            CHECK(direct == via_sum);
        }
}

TEST_CASE("lengths, pairings, and chains") {
    const auto b2 = make("B2");
    CHECK(b2.norm2(1) == 2);   // alpha_2 short
    CHECK(b2.norm2(2) == 4);   // alpha_1 long
    CHECK(b2.norm2(4) == 4);   // alpha_1 + 2 alpha_2 long

    const auto g2 = make("G2");
    CHECK(g2.norm2(2) == 2);
    CHECK(g2.norm2(1) == 6);
    CHECK(g2.norm2(6) == 6);  // highest root 3 alpha_1 + 2 alpha_2

    // pairing(a, b) = 2 (a, b) / (b, b), integral for all root pairs.
    for (const char* t : {"B3", "G2", "F4"}) {
        const auto rs = make(t);
        const int n = rs.num_positive();
        for (int a = -n; a <= n; ++a)
            for (int b = -n; b <= n; ++b) {
                if (!a || !b) continue;
                const BigRational expect =
                    2 * rs.root_bilinear(a, b) / rs.norm2(b);
                CHECK(BigRational(rs.pairing(a, b)) == expect);
            }
        // Simple pairings agree with the Cartan matrix.
        for (int j = 0; j < rs.rank(); ++j) {
            std::vector<int> e(static_cast<size_t>(rs.rank()), 0);
            e[static_cast<size_t>(j)] = 1;
            const int aj = *rs.index_of(e);
            for (int i = 0; i < rs.rank(); ++i) {
                std::vector<int> f(static_cast<size_t>(rs.rank()), 0);
                f[static_cast<size_t>(i)] = 1;
                CHECK(rs.pairing_with_simple(*rs.index_of(f), j) == rs.cartan(i, j));
                CHECK(rs.pairing_with_simple(aj, j) == 2);
            }
        }
    }

    // G2 alpha_1-string through alpha_1 + alpha_2 has length 3 downward.
    const int a1 = *g2.index_of({1, 0});
    const int a12 = *g2.index_of({1, 1});
    const int a31 = *g2.index_of({3, 1});
    CHECK(g2.chain_down(a12, a1) == 1);
    CHECK(g2.chain_down(a31, a1) == 3);
    CHECK(g2.chain_down(a1, a12) == 1);
}

TEST_CASE("root and weight basis conversions") {
    for (const char* t : {"A3", "B3", "C3", "D4", "G2"}) {
        const auto rs = make(t);
        for (int a = 1; a <= rs.num_positive(); ++a) {
            // root_as_weight composed with to_root_basis is the identity.
            const Weight w = rs.root_as_weight(a);
            const auto back = rs.to_root_basis(w);
            const auto coeffs = rs.root_coeffs(a);
            for (int k = 0; k < rs.rank(); ++k)
                CHECK(back[static_cast<size_t>(k)] == coeffs[static_cast<size_t>(k)]);
            CHECK(rs.from_root_basis(coeffs) == w);
        }
    }
}

TEST_CASE("reflections and the antidominant representative") {
    const auto a2 = make("A2");
    CHECK(a2.antidominant({1, 0}) == Weight{0, -1});
    CHECK(a2.antidominant({1, 1}) == Weight{-1, -1});

    for (const char* t : {"A3", "B2", "G2"}) {
        const auto rs = make(t);
        const std::vector<Weight> samples = [&] {
            std::vector<Weight> out;
            for (int x = -2; x <= 2; ++x)
                for (int y = -2; y <= 2; ++y) {
                    Weight w(static_cast<size_t>(rs.rank()), 0);
                    w[0] = x;
                    w[static_cast<size_t>(rs.rank() - 1)] = y;
                    out.push_back(w);
                }
            return out;
        }();
        for (const auto& w : samples) {
            for (int i = 0; i < rs.rank(); ++i) {
                CHECK(rs.reflect(i, rs.reflect(i, w)) == w);
                // Orbit invariance of the antidominant representative.
                CHECK(rs.antidominant(rs.reflect(i, w)) == rs.antidominant(w));
                // Reflections preserve the bilinear form.
                CHECK(rs.weight_bilinear(rs.reflect(i, w), rs.reflect(i, w)) ==
                      rs.weight_bilinear(w, w));
            }
            const Weight anti = rs.antidominant(w);
            for (int i = 0; i < rs.rank(); ++i) CHECK(anti[static_cast<size_t>(i)] <= 0);
            CHECK(rs.antidominant(anti) == anti);
        }
    }
}

TEST_CASE("self-duality of highest weights") {
    CHECK_FALSE(make("A2").is_self_dual({1, 0}));
    CHECK(make("A2").is_self_dual({1, 1}));
    CHECK(make("A3").is_self_dual({0, 1, 0}));
    CHECK_FALSE(make("A3").is_self_dual({1, 0, 0}));
    CHECK(make("A3").is_self_dual({1, 0, 1}));
    CHECK_FALSE(make("D5").is_self_dual({0, 0, 0, 1, 0}));
    CHECK(make("D5").is_self_dual({0, 0, 0, 1, 1}));
    CHECK_FALSE(make("E6").is_self_dual({1, 0, 0, 0, 0, 0}));
    for (const char* t : {"B3", "C3", "D4", "G2", "F4", "E7", "E8"}) {
        const auto rs = make(t);
        for (int i = 0; i < rs.rank(); ++i) {
            Weight w(static_cast<size_t>(rs.rank()), 0);
            w[static_cast<size_t>(i)] = 1;
            CHECK(rs.is_self_dual(w));
        }
    }
}

TEST_CASE("coefficient sums, root lattice membership, cosets") {
    const auto a2 = make("A2");
    CHECK(a2.coefficient_sum({1, 0}) == 1);
    CHECK_FALSE(a2.in_root_lattice({1, 0}));
    CHECK(a2.in_root_lattice({1, 1}));
    CHECK(a2.root_lattice_coset({1, 0}) ==
          std::vector<BigRational>{BigRational(2, 3), BigRational(1, 3)});
    CHECK(a2.root_lattice_coset({1, 1}) == std::vector<BigRational>{0, 0});

    const auto a3 = make("A3");
    CHECK(a3.coefficient_sum({0, 1, 0}) == 2);
    CHECK(a3.to_root_basis({0, 1, 0}) ==
          std::vector<BigRational>{BigRational(1, 2), 1, BigRational(1, 2)});
    CHECK_FALSE(a3.in_root_lattice({0, 1, 0}));

    const auto b2 = make("B2");
    CHECK(b2.coefficient_sum({0, 1}) == BigRational(3, 2));
    CHECK(b2.coefficient_sum({1, 0}) == 2);
    CHECK(b2.in_root_lattice({1, 0}));
    CHECK_FALSE(b2.in_root_lattice({0, 1}));

    // Adding a root never changes the coset and shifts the sum by an integer.
    for (const char* t : {"A3", "B3", "D4"}) {
        const auto rs = make(t);
        const Weight lam = [&] {
            Weight w(static_cast<size_t>(rs.rank()), 0);
            w[1] = 1;
            return w;
        }();
        for (int a = 1; a <= rs.num_positive(); ++a) {
            Weight shifted = lam;
            const Weight alpha = rs.root_as_weight(a);
            for (size_t k = 0; k < shifted.size(); ++k) shifted[k] += alpha[k];
            CHECK(rs.root_lattice_coset(shifted) == rs.root_lattice_coset(lam));
            const BigRational delta =
                rs.coefficient_sum(shifted) - rs.coefficient_sum(lam);
            CHECK(is_integer(delta));
            CHECK(rs.in_root_lattice(shifted) == rs.in_root_lattice(lam));
        }
    }
}

TEST_CASE("fundamental group orders") {
    CHECK(make("A1").fundamental_group_order() == 2);
    CHECK(make("A5").fundamental_group_order() == 6);
    CHECK(make("B4").fundamental_group_order() == 2);
    CHECK(make("C3").fundamental_group_order() == 2);
    CHECK(make("D4").fundamental_group_order() == 4);
    CHECK(make("D5").fundamental_group_order() == 4);
    CHECK(make("E6").fundamental_group_order() == 3);
    CHECK(make("E7").fundamental_group_order() == 2);
    CHECK(make("E8").fundamental_group_order() == 1);
    CHECK(make("F4").fundamental_group_order() == 1);
    CHECK(make("G2").fundamental_group_order() == 1);
    CHECK(make("B2xG2").fundamental_group_order() == 2);
}

TEST_CASE("weyl dimension formula") {
    CHECK(make("A1").weyl_dimension({3}) == 4);
    CHECK(make("A2").weyl_dimension({1, 1}) == 8);
    CHECK(make("A2").weyl_dimension({2, 0}) == 6);
    CHECK(make("A3").weyl_dimension({0, 1, 0}) == 6);
    CHECK(make("A3").weyl_dimension({1, 0, 1}) == 15);
    CHECK(make("B2").weyl_dimension({1, 0}) == 5);
    CHECK(make("B2").weyl_dimension({0, 1}) == 4);
    CHECK(make("B3").weyl_dimension({0, 0, 1}) == 8);
    CHECK(make("C3").weyl_dimension({0, 1, 0}) == 14);
    CHECK(make("D4").weyl_dimension({1, 0, 0, 0}) == 8);
    CHECK(make("G2").weyl_dimension({1, 0}) == 7);
    CHECK(make("G2").weyl_dimension({0, 1}) == 14);
    CHECK(make("F4").weyl_dimension({0, 0, 0, 1}) == 26);
    CHECK(make("E8").weyl_dimension({1, 0, 0, 0, 0, 0, 0, 0}) == 3875);
    CHECK(make("E8").weyl_dimension({0, 0, 0, 0, 0, 0, 0, 1}) == 248);
    CHECK(make("E7").weyl_dimension({0, 0, 0, 0, 0, 0, 1}) == 56);
    CHECK(make("E6").weyl_dimension({1, 0, 0, 0, 0, 0}) == 27);
    CHECK(make("B2").weyl_dimension({0, 0}) == 1);
    // Dual weights have equal dimensions.
    const auto a5 = make("A5");
    CHECK(a5.weyl_dimension({1, 0, 2, 0, 0}) == a5.weyl_dimension({0, 0, 2, 0, 1}));
}

TEST_CASE("invariant bilinear form on weights") {
    for (const char* t : {"A2", "B2", "G2", "B2xG2"}) {
        const auto rs = make(t);
        // Symmetry and positivity on a small integer box.
        for (int x = -2; x <= 2; ++x)
            for (int y = -2; y <= 2; ++y) {
                Weight u(static_cast<size_t>(rs.rank()), 0), v(u);
                u[0] = x;
                u[static_cast<size_t>(rs.rank() - 1)] = 1;
                v[0] = 1;
                v[static_cast<size_t>(rs.rank() - 1)] = y;
                CHECK(rs.weight_bilinear(u, v) == rs.weight_bilinear(v, u));
                if (!(x == 0 && rs.rank() == 1)) CHECK(rs.weight_bilinear(u, u) > 0);
            }
        // On roots it restricts to the root form.
        for (int a = 1; a <= rs.num_positive(); ++a) {
            CHECK(rs.weight_bilinear(rs.root_as_weight(a), rs.root_as_weight(a)) ==
                  rs.norm2(a));
        }
    }
}

TEST_CASE("composite types are block products") {
    const auto prod = make("B2xG2");
    const auto b2 = make("B2");
    const auto g2 = make("G2");
    REQUIRE(prod.rank() == 4);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            CHECK(prod.cartan(i, j) == b2.cartan(i, j));
            CHECK(prod.cartan(i + 2, j + 2) == g2.cartan(i, j));
            CHECK(prod.cartan(i, j + 2) == 0);
            CHECK(prod.cartan(i + 2, j) == 0);
        }
    CHECK(prod.weyl_dimension({0, 1, 1, 0}) == 4 * 7);
    CHECK(prod.is_self_dual({0, 1, 1, 0}));
    CHECK(prod.coefficient_sum({0, 1, 0, 0}) == BigRational(3, 2));
}

TEST_CASE("dominance test") {
    const auto b2 = make("B2");
    CHECK(b2.is_dominant({0, 0}));
    CHECK(b2.is_dominant({2, 1}));
    CHECK_FALSE(b2.is_dominant({-1, 3}));
    CHECK(b2.rho() == Weight{1, 1});
}
