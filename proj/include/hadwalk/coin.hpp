#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "hadwalk/scalar.hpp"

namespace hadwalk {

template <class S>
struct Vec2 {
    S left{};  // amplitude of the left-moving chirality component
    S right{}; // amplitude of the right-moving chirality component

    Vec2() = default;
    Vec2(S l, S r) : left(std::move(l)), right(std::move(r)) {}

    Vec2 operator+(const Vec2& o) const { return {left + o.left, right + o.right}; }
    Vec2 operator-(const Vec2& o) const { return {left - o.left, right - o.right}; }
    Vec2 operator-() const { return {-left, -right}; }
    Vec2& operator+=(const Vec2& o) { left = left + o.left; right = right + o.right; return *this; }
    bool operator==(const Vec2&) const = default;

    bool is_zero() const {
        using T = ScalarTraits<S>;
        return T::is_zero(left) && T::is_zero(right);
    }
    typename ScalarTraits<S>::Prob norm_sq() const {
        using T = ScalarTraits<S>;
        return T::norm_sq(left) + T::norm_sq(right);
    }
};

template <class S>
struct Mat2 {
    // Row-major 2x2: [[a, b], [c, d]]
    S a{}, b{}, c{}, d{};

    Mat2() = default;
    Mat2(S a_, S b_, S c_, S d_)
        : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)) {}

    Mat2 operator+(const Mat2& o) const { return {a + o.a, b + o.b, c + o.c, d + o.d}; }
    Mat2 operator-(const Mat2& o) const { return {a - o.a, b - o.b, c - o.c, d - o.d}; }
    Mat2 operator-() const { return {-a, -b, -c, -d}; }
    Mat2 operator*(const Mat2& o) const {
        return {a * o.a + b * o.c, a * o.b + b * o.d,
                c * o.a + d * o.c, c * o.b + d * o.d};
    }
    Vec2<S> operator*(const Vec2<S>& v) const {
        return {a * v.left + b * v.right, c * v.left + d * v.right};
    }
    Mat2 operator*(const S& s) const { return {a * s, b * s, c * s, d * s}; }
    Mat2& operator+=(const Mat2& o) { *this = *this + o; return *this; }
    bool operator==(const Mat2&) const = default;

    Mat2 transpose() const { return {a, c, b, d}; }
    Mat2 conj_transpose() const {
        using T = ScalarTraits<S>;
        return {T::conj(a), T::conj(c), T::conj(b), T::conj(d)};
    }
    bool is_zero() const {
        using T = ScalarTraits<S>;
        return T::is_zero(a) && T::is_zero(b) && T::is_zero(c) && T::is_zero(d);
    }
    // Frobenius norm squared; with the float backend this is the natural
    // "equal up to rounding" test via prob_is_zero.
    typename ScalarTraits<S>::Prob norm_sq() const {
        using T = ScalarTraits<S>;
        return T::norm_sq(a) + T::norm_sq(b) + T::norm_sq(c) + T::norm_sq(d);
    }

    static Mat2 zero() { return {}; }
    static Mat2 identity() {
        using T = ScalarTraits<S>;
        return {T::make(1), T::make(0), T::make(0), T::make(1)};
    }
};

// Named constant matrices of the split Hadamard coin. H = P + Q with P
// picking out the left-moving part and Q the right-moving part; R and S
// are the normalized cross products sqrt(2)PQ and sqrt(2)QP; J is the
// antisymmetric unit used by the reflection identities.
enum class Coin { H, P, Q, R, S, J, I, Zero };

inline std::string coin_name(Coin c) {
    switch (c) {
        case Coin::H: return "H";
        case Coin::P: return "P";
        case Coin::Q: return "Q";
        case Coin::R: return "R";
        case Coin::S: return "S";
        case Coin::J: return "J";
        case Coin::I: return "I";
        case Coin::Zero: return "0";
    }
    throw std::logic_error("unreachable");
}

template <class S>
Mat2<S> coin_constant(Coin c) {
    using T = ScalarTraits<S>;
    auto m = [](long a, long b, long cc, long d, unsigned s) {
        return Mat2<S>{T::make(a, 0, s), T::make(b, 0, s),
                       T::make(cc, 0, s), T::make(d, 0, s)};
    };
    switch (c) {
        case Coin::H:    return m(1, 1, 1, -1, 1);
        case Coin::P:    return m(1, 1, 0, 0, 1);
        case Coin::Q:    return m(0, 0, 1, -1, 1);
        case Coin::R:    return m(1, -1, 0, 0, 1);
        case Coin::S:    return m(0, 0, 1, 1, 1);
        case Coin::J:    return m(0, -1, 1, 0, 0);
        case Coin::I:    return Mat2<S>::identity();
        case Coin::Zero: return Mat2<S>::zero();
    }
    throw std::logic_error("unreachable");
}

template <class S>
Mat2<S> coin_constant(std::string_view name) {
    if (name == "H") return coin_constant<S>(Coin::H);
    if (name == "P") return coin_constant<S>(Coin::P);
    if (name == "Q") return coin_constant<S>(Coin::Q);
    if (name == "R") return coin_constant<S>(Coin::R);
    if (name == "S") return coin_constant<S>(Coin::S);
    if (name == "J") return coin_constant<S>(Coin::J);
    if (name == "I") return coin_constant<S>(Coin::I);
    if (name == "0") return coin_constant<S>(Coin::Zero);
    throw std::domain_error("unknown coin matrix name: " + std::string(name));
}

// One entry of the P/Q/R/S multiplication table: lhs*rhs equals
// coeff * result / sqrt(2), where coeff is +1 or -1.
struct TableEntry {
    Coin lhs;
    Coin rhs;
    Coin result;
    int coeff;
};

// The closed multiplication table of {P, Q, R, S}. Every product lands
// back in the set up to a sign and one factor of 1/sqrt(2), which is what
// makes path-sums over products of P and Q collapse to four coefficients.
inline const std::array<TableEntry, 16>& coin_table() {
    static const std::array<TableEntry, 16> table = {{
        {Coin::P, Coin::P, Coin::P, +1},
        {Coin::P, Coin::Q, Coin::R, +1},
        {Coin::P, Coin::R, Coin::R, +1},
        {Coin::P, Coin::S, Coin::P, +1},
        {Coin::Q, Coin::P, Coin::S, +1},
        {Coin::Q, Coin::Q, Coin::Q, -1},
        {Coin::Q, Coin::R, Coin::Q, +1},
        {Coin::Q, Coin::S, Coin::S, -1},
        {Coin::R, Coin::P, Coin::P, +1},
        {Coin::R, Coin::Q, Coin::R, -1},
        {Coin::R, Coin::R, Coin::R, +1},
        {Coin::R, Coin::S, Coin::P, -1},
        {Coin::S, Coin::P, Coin::S, +1},
        {Coin::S, Coin::Q, Coin::Q, +1},
        {Coin::S, Coin::R, Coin::Q, +1},
        {Coin::S, Coin::S, Coin::S, +1},
    }};
    return table;
}

// Recompute every product in the table from the matrix entries and report
// any cell that fails, as "X*Y". An empty result means the table holds.
template <class S>
std::vector<std::string> verify_table() {
    std::vector<std::string> bad;
    for (const auto& e : coin_table()) {
        Mat2<S> lhs = coin_constant<S>(e.lhs) * coin_constant<S>(e.rhs);
        Mat2<S> rhs = coin_constant<S>(e.result) * ScalarTraits<S>::make(e.coeff, 0, 1);
        if (!ScalarTraits<S>::prob_is_zero((lhs - rhs).norm_sq()))
            bad.push_back(coin_name(e.lhs) + "*" + coin_name(e.rhs));
    }
    return bad;
}

} // namespace hadwalk
