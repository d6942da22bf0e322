#include <catch2/catch_amalgamated.hpp>

#include "hadwalk/moments.hpp"
#include "hadwalk/symmetry.hpp"
#include "oracles.hpp"

using namespace hadwalk;

using DG = DyadicGaussian;
using TX = ScalarTraits<DG>;

TEST_CASE("sqrt2 extension arithmetic", "[moments]") {
    Sqrt2Ext a(BigRational(1, 2), BigRational(3));   // 1/2 + 3 sqrt2
    Sqrt2Ext b(BigRational(-2), BigRational(1, 3));  // -2 + sqrt2/3
    REQUIRE(a + b == Sqrt2Ext(BigRational(-3, 2), BigRational(10, 3)));
    REQUIRE(a * b == Sqrt2Ext(BigRational(1), BigRational(-35, 6)));
    // (sqrt2)^2 = 2
    Sqrt2Ext root(0, 1);
    REQUIRE(root * root == Sqrt2Ext(2));

    REQUIRE(Sqrt2Ext(BigRational(-1), BigRational(1)).is_positive());  // sqrt2 > 1
    REQUIRE_FALSE(Sqrt2Ext(BigRational(-3, 2), BigRational(1)).is_positive());
    REQUIRE(Sqrt2Ext(BigRational(3), BigRational(-2)).is_positive()); // 9 > 8
    REQUIRE(Sqrt2Ext(BigRational(1), BigRational(-1)) < Sqrt2Ext(0)); // 1 < sqrt2
    REQUIRE_FALSE(Sqrt2Ext().is_positive());
    REQUIRE(std::abs(Sqrt2Ext(BigRational(-1), BigRational(1)).to_double() -
                     0.41421356237309515) < 1e-15);
}

TEST_CASE("coefficient table", "[moments]") {
    // the twenty published values, n = 1..10
    const std::pair<BigRational, BigRational> table[] = {
        {BigRational(0), BigRational(1)},
        {BigRational(0), BigRational(1)},
        {BigRational(1, 2), BigRational(1)},
        {BigRational(1), BigRational(3, 2)},
        {BigRational(9, 8), BigRational(2)},
        {BigRational(5, 4), BigRational(17, 8)},
        {BigRational(27, 16), BigRational(9, 4)},
        {BigRational(17, 8), BigRational(43, 16)},
        {BigRational(293, 128), BigRational(25, 8)},
        {BigRational(157, 64), BigRational(421, 128)},
    };
    for (int n = 1; n <= 10; ++n) {
        auto f = expectation_form(n);
        REQUIRE(f.a == table[n - 1].first);
        REQUIRE(f.b == table[n - 1].second);
    }
}

TEST_CASE("form consistency checks run clean to n = 30", "[moments]") {
    for (int n = 1; n <= 30; ++n)
        REQUIRE_NOTHROW(expectation_form(n));
}

TEST_CASE("the form reproduces engine expectations", "[moments]") {
    auto states = oracles::sample_exact_states(50, 424242u);
    for (int n = 1; n <= 12; ++n) {
        auto f = expectation_form(n);
        for (const auto& phi : states)
            REQUIRE(apply_form(f, phi) == expectation(evolve(phi, n)));
    }

    // and float states within tolerance
    auto f5 = expectation_form(5);
    for (const auto& phi : oracles::sample_float_states(20, 99u))
        REQUIRE(std::abs(apply_form(f5, phi) - expectation(evolve(phi, 5))) <
                kFloatTolerance);
}

TEST_CASE("successor identity between the columns", "[moments]") {
    auto rows = conjecture_check(30);
    REQUIRE(rows.size() == 30);
    for (const auto& row : rows)
        REQUIRE(row.holds);
    REQUIRE(rows[2].a_n == BigRational(1, 2));
    REQUIRE(rows[2].b_next == BigRational(3, 2));
    REQUIRE(rows[8].a_n == BigRational(293, 128));
    REQUIRE(rows[8].b_next == BigRational(421, 128));
}

TEST_CASE("limit moments in closed form", "[moments]") {
    REQUIRE(limit_moment(0).value == Sqrt2Ext(1));
    REQUIRE(limit_moment(3).value == Sqrt2Ext(0));
    REQUIRE(limit_moment(7).value == Sqrt2Ext(0));
    // (2 - sqrt2)/2
    REQUIRE(limit_moment(2).value == Sqrt2Ext(1, BigRational(-1, 2)));
    REQUIRE(std::abs(limit_moment(2).to_double() - 0.29289321881345254) < 1e-15);
    REQUIRE_THROWS_AS(limit_moment(-2), std::domain_error);

    // positive, below one, strictly decreasing
    Sqrt2Ext prev(1);
    for (int n = 1; n <= 15; ++n) {
        auto m = limit_moment(2 * n).value;
        REQUIRE(m.is_positive());
        REQUIRE(m < prev);
        prev = m;
    }
}

TEST_CASE("quadrature agrees with the closed form", "[moments]") {
    REQUIRE(std::abs(moment_quadrature(0) - 1.0) < 1e-10);
    REQUIRE(std::abs(moment_quadrature(2) - 0.29289321881345254) < 1e-10);
    for (int m = 2; m <= 14; m += 2)
        REQUIRE(std::abs(moment_quadrature(m) - limit_moment(m).to_double()) < 1e-8);
    REQUIRE_THROWS_AS(moment_quadrature(3), std::domain_error);
    REQUIRE_THROWS_AS(moment_quadrature(-2), std::domain_error);
}

TEST_CASE("integral recursion rebuilds the moments", "[moments]") {
    auto rows = j_recursion(15);
    REQUIRE(rows.size() == 15);
    // J_1 = (2 - sqrt2)/(4 sqrt2) * pi = (-1/4 + sqrt2/4) pi
    REQUIRE(rows[0].j_over_pi == Sqrt2Ext(BigRational(-1, 4), BigRational(1, 4)));
    REQUIRE(rows[0].moment == Sqrt2Ext(1, BigRational(-1, 2)));
    for (const auto& row : rows) {
        REQUIRE(row.matches);
        REQUIRE(row.moment == row.closed);
    }
}
