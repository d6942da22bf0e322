#include <catch2/catch_amalgamated.hpp>

#include "hadwalk/pascal.hpp"
#include "oracles.hpp"

using namespace hadwalk;

using DG = DyadicGaussian;
using TX = ScalarTraits<DG>;
using MatX = Mat2<DG>;

namespace {
// c * X / sqrt2^s
MatX piece(Coin x, long c, unsigned s) {
    return coin_constant<DG>(x) * DG(c, 0, s);
}
} // namespace

TEST_CASE("binomials", "[pascal]") {
    REQUIRE(binomial(0, 0) == 1);
    REQUIRE(binomial(5, 2) == 10);
    REQUIRE(binomial(5, 6) == 0);
    REQUIRE(binomial(5, -1) == 0);
    REQUIRE(binomial(64, 32) == BigInt("1832624140942590534"));
}

TEST_CASE("closed form at hand-expanded words", "[pascal]") {
    // the 2P + R + S combination under scale 3
    REQUIRE(xi_closed<DG>(3, 1) ==
            piece(Coin::P, 2, 3) + piece(Coin::R, 1, 3) + piece(Coin::S, 1, 3));
    REQUIRE(xi_closed<DG>(4, 0) == piece(Coin::P, 1, 3));
    REQUIRE(xi_closed<DG>(2, 2) == piece(Coin::P, -1, 3) + piece(Coin::Q, 1, 3));
    // the pure-Q column alternates sign with m
    REQUIRE(xi_closed<DG>(0, 4) == piece(Coin::Q, -1, 3));
    REQUIRE(xi_closed<DG>(0, 3) == piece(Coin::Q, 1, 2));
    REQUIRE(xi_closed<DG>(1, 0) == coin_constant<DG>(Coin::P));

    REQUIRE_THROWS_AS(xi_closed<DG>(0, 0), std::domain_error);
    REQUIRE_THROWS_AS(xi_closed<DG>(-1, 2), std::domain_error);
}

TEST_CASE("oracle on explicit words", "[pascal]") {
    auto P = coin_constant<DG>(Coin::P);
    auto Q = coin_constant<DG>(Coin::Q);
    REQUIRE(xi_oracle<DG>(1, 0) == P);
    REQUIRE(xi_oracle<DG>(0, 1) == Q);
    REQUIRE(xi_oracle<DG>(3, 1) ==
            P * P * P * Q + P * P * Q * P + P * Q * P * P + Q * P * P * P);
    REQUIRE_THROWS_AS(xi_oracle<DG>(9, 8), std::domain_error);
}

TEST_CASE("closed form equals the oracle", "[pascal]") {
    for (long n = 1; n <= 9; ++n)
        for (long l = 0; l <= n; ++l)
            REQUIRE(xi_closed<DG>(l, n - l) == xi_oracle<DG>(l, n - l));
}

TEST_CASE("coefficient route", "[pascal]") {
    auto d40 = coefficients<DG>(4, 0);
    REQUIRE(d40.p == DG(1, 0, 3));
    REQUIRE(d40.q.is_zero());
    REQUIRE(d40.r.is_zero());
    REQUIRE(d40.s.is_zero());

    auto d04 = coefficients<DG>(0, 4);
    REQUIRE(d04.q == DG(-1, 0, 3));
    REQUIRE(d04.p.is_zero());

    auto d22 = coefficients<DG>(2, 2);
    REQUIRE(d22.p == DG(-1, 0, 3));
    REQUIRE(d22.q == DG(1, 0, 3));
    REQUIRE(d22.r.is_zero());
    REQUIRE(d22.s.is_zero());

    // an independent route to the same matrices
    for (long n = 1; n <= 10; ++n)
        for (long l = 0; l <= n; ++l)
            REQUIRE(coefficients<DG>(l, n - l).reconstruct() ==
                    xi_closed<DG>(l, n - l));

    // r = s always
    for (long l = 0; l <= 30; ++l)
        REQUIRE(coefficients<DG>(l, 30 - l).r == coefficients<DG>(l, 30 - l).s);
}

TEST_CASE("cluster counts against enumeration", "[pascal]") {
    REQUIRE(cluster_count(Coin::P, 3, 1, 1) == 2);
    REQUIRE(cluster_count(Coin::R, 1, 1, 1) == 1);
    REQUIRE_THROWS_AS(cluster_count(Coin::P, 3, 1, 2), std::domain_error);
    REQUIRE_THROWS_AS(cluster_count(Coin::H, 3, 1, 1), std::domain_error);

    for (long n = 2; n <= 10; ++n) {
        for (long l = 1; l < n; ++l) {
            long m = n - l;
            for (long g = 1; g <= std::min(l - 1, m); ++g)
                REQUIRE(cluster_count(Coin::P, l, m, g) ==
                        oracles::count_words(Coin::P, l, m, 2 * g + 1));
            for (long g = 1; g <= std::min(l, m - 1); ++g)
                REQUIRE(cluster_count(Coin::Q, l, m, g) ==
                        oracles::count_words(Coin::Q, l, m, 2 * g + 1));
            for (long g = 1; g <= std::min(l, m); ++g) {
                REQUIRE(cluster_count(Coin::R, l, m, g) ==
                        oracles::count_words(Coin::R, l, m, 2 * g));
                REQUIRE(cluster_count(Coin::S, l, m, g) ==
                        oracles::count_words(Coin::S, l, m, 2 * g));
            }
        }
    }
}

TEST_CASE("difference matrices", "[pascal]") {
    using TXc = ScalarTraits<DG>;
    for (long l = 1; l <= 6; ++l) {
        auto d = difference_matrix<DG>(l, 0);
        auto off = TXc::from_rational_scaled(1, static_cast<unsigned>(2 * (l - 1)));
        REQUIRE(d == MatX(TXc::make(0), off, off, TXc::make(0)));
    }
    for (long l = 1; l <= 5; ++l)
        REQUIRE(difference_matrix<DG>(l, l).is_zero());

    for (long n = 1; n <= 12; ++n) {
        for (long l = 0; l <= n; ++l) {
            auto d = difference_matrix<DG>(l, n - l);
            REQUIRE(d.a == -d.d);
            REQUIRE(d.b == d.c);
        }
    }
}

TEST_CASE("difference form vanishes on the mirror class", "[pascal]") {
    QubitState<DG> perp{TX::make(1, 0, 1), TX::make(0, 1, 1)};
    QubitState<DG> perp_m{TX::make(1, 0, 1), TX::make(0, -1, 1)};
    for (long n = 1; n <= 20; ++n) {
        for (long l = 0; l <= n; ++l) {
            auto d = difference_matrix<DG>(l, n - l);
            REQUIRE(apply_form(d, perp) == BigRational(0));
            REQUIRE(apply_form(d, perp_m) == BigRational(0));
        }
    }
}

TEST_CASE("site matrices of the quadratic form", "[pascal]") {
    auto f1 = quadratic_form<DG>(1);
    MatX m_minus(DG(1, 0, 2), DG(1, 0, 2), DG(1, 0, 2), DG(1, 0, 2));
    MatX m_plus(DG(1, 0, 2), DG(-1, 0, 2), DG(-1, 0, 2), DG(1, 0, 2));
    REQUIRE(f1.site.at(-1) == m_minus);
    REQUIRE(f1.site.at(+1) == m_plus);

    // construction itself asserts sum-to-identity; run it across a range
    for (int n = 2; n <= 30; ++n) {
        auto f = quadratic_form<DG>(n);
        REQUIRE(f.site.size() == static_cast<std::size_t>(n + 1));
        for (const auto& [k, mk] : f.site) {
            // positive semidefinite symmetric 2x2: diagonal and determinant
            REQUIRE(mk.a.to_rational() >= 0);
            REQUIRE(mk.d.to_rational() >= 0);
            REQUIRE((mk.a * mk.d - mk.b * mk.c).to_rational() >= 0);
        }
    }
}

TEST_CASE("form probabilities match the engine", "[pascal]") {
    QubitState<DG> phi{TX::make(1), TX::make(0)};
    for (int n = 1; n <= 14; ++n) {
        auto f = quadratic_form<DG>(n);
        auto d = distribution(evolve(phi, n));
        std::map<int, BigRational> from_engine;
        for (const auto& row : d.sites)
            from_engine[row.k] = row.p;
        for (const auto& [k, mk] : f.site) {
            BigRational expect = apply_form(mk, phi);
            auto it = from_engine.find(k);
            BigRational actual = it == from_engine.end() ? BigRational(0) : it->second;
            REQUIRE(expect == actual);
        }
    }
}
