#pragma once

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <cmath>
#include <numbers>
#include <vector>

#include "hadwalk/pascal.hpp"

namespace hadwalk {

/**
 * Numbers of the form r0 + r1*sqrt(2) with exact rational parts: the field
 * the limit moments live in. Sign queries are exact (compare squares), so
 * monotonicity statements about the moments need no floating point.
 */
struct Sqrt2Ext {
    BigRational r0{0}, r1{0};

    Sqrt2Ext() = default;
    Sqrt2Ext(BigRational a, BigRational b = 0) : r0(std::move(a)), r1(std::move(b)) {}
    Sqrt2Ext(int a) : r0(a) {}

    Sqrt2Ext operator+(const Sqrt2Ext& o) const { return {r0 + o.r0, r1 + o.r1}; }
    Sqrt2Ext operator-(const Sqrt2Ext& o) const { return {r0 - o.r0, r1 - o.r1}; }
    Sqrt2Ext operator-() const { return {-r0, -r1}; }
    Sqrt2Ext operator*(const Sqrt2Ext& o) const {
        return {r0 * o.r0 + 2 * r1 * o.r1, r0 * o.r1 + r1 * o.r0};
    }
    Sqrt2Ext& operator+=(const Sqrt2Ext& o) { r0 += o.r0; r1 += o.r1; return *this; }
    bool operator==(const Sqrt2Ext&) const = default;

    bool is_zero() const { return r0 == 0 && r1 == 0; }
    bool is_positive() const {
        if (r0 >= 0 && r1 >= 0) return !is_zero();
        if (r0 <= 0 && r1 <= 0) return false;
        // mixed signs: compare |r0| against |r1|*sqrt(2) by squaring
        if (r0 > 0) return r0 * r0 > 2 * r1 * r1; // r1 < 0
        return 2 * r1 * r1 > r0 * r0;             // r0 < 0, r1 > 0
    }
    bool operator<(const Sqrt2Ext& o) const { return (o - *this).is_positive(); }

    double to_double() const { return hadwalk::to_double(r0) + hadwalk::to_double(r1) * std::numbers::sqrt2; }
};

// The expectation at time n as a linear functional of the initial state:
// E(X_n) = -a*(|alpha|^2-|beta|^2) - b*(alpha*conj(beta)+conj(alpha)*beta).
struct LinearForm {
    int n = 0;
    BigRational a{0}, b{0};
};

// Build the form from the exact site matrices: A = sum_k k*M_k, then
// a = -A11, b = -A12. A must come out real, symmetric and trace-free --
// anything else means the site matrices are wrong, so it throws.
inline LinearForm expectation_form(int n) {
    using DG = DyadicGaussian;
    auto form = quadratic_form<DG>(n);
    Mat2<DG> acc;
    for (const auto& [k, mk] : form.site)
        acc += mk * ScalarTraits<DG>::make(k);
    if (!(acc.b - acc.c).is_zero() || !(acc.a + acc.d).is_zero())
        throw std::logic_error("expectation matrix is not symmetric trace-free");
    if (!acc.a.is_real() || !acc.b.is_real())
        throw std::logic_error("expectation matrix is not real");
    LinearForm f;
    f.n = n;
    f.a = -acc.a.to_rational();
    f.b = -acc.b.to_rational();
    return f;
}

template <class S>
typename ScalarTraits<S>::Prob apply_form(const LinearForm& f, const Vec2<S>& phi) {
    using T = ScalarTraits<S>;
    auto mod_diff = T::norm_sq(phi.left) - T::norm_sq(phi.right);
    S cross = phi.left * T::conj(phi.right) + T::conj(phi.left) * phi.right;
    if constexpr (T::exact) {
        return -f.a * mod_diff - f.b * cross.to_rational();
    } else {
        return -to_double(f.a) * mod_diff - to_double(f.b) * cross.real();
    }
}

struct ConjectureRow {
    int n = 0;
    BigRational a_n{0};
    BigRational b_next{0};
    bool holds = false;
};

// b_{n+1} = a_n + 1, checked value by value. Evidence, not an assumption:
// nothing else in here builds on it.
inline std::vector<ConjectureRow> conjecture_check(int n_max) {
    std::vector<ConjectureRow> rows;
    rows.reserve(static_cast<std::size_t>(n_max));
    for (int n = 1; n <= n_max; ++n) {
        ConjectureRow row;
        row.n = n;
        row.a_n = expectation_form(n).a;
        row.b_next = expectation_form(n + 1).b;
        row.holds = row.b_next == row.a_n + 1;
        rows.push_back(std::move(row));
    }
    return rows;
}

struct LimitMoment {
    int order = 0;
    Sqrt2Ext value; // exact; odd orders are exactly zero

    double to_double() const { return value.to_double(); }
};

// Moments of the limit density 1/(pi(1-x^2)sqrt(1-2x^2)) on (-1/sqrt2, 1/sqrt2):
// odd ones vanish by symmetry, even ones telescope into
// 1 - (1/sqrt2) * sum_{k<n} C(2k,k)/2^{3k}.
inline LimitMoment limit_moment(int m) {
    if (m < 0)
        throw std::domain_error("moment order must be non-negative");
    LimitMoment out;
    out.order = m;
    if (m % 2 == 1)
        return out; // zero
    if (m == 0) {
        out.value = Sqrt2Ext(1);
        return out;
    }
    int n = m / 2;
    BigRational sum = 0;
    for (int k = 0; k < n; ++k)
        sum += BigRational(binomial(2 * k, k), pow2(static_cast<unsigned>(3 * k)));
    // 1/sqrt2 = sqrt2/2
    out.value = Sqrt2Ext(1) - Sqrt2Ext(0, sum / 2);
    return out;
}

// Numerical check of the same moments, independent of the closed form.
// The substitution x = sin(theta)/sqrt2 removes both endpoint singularities
// and leaves a smooth integrand on [0, pi/2].
inline double moment_quadrature(int m) {
    if (m < 0 || m % 2 == 1)
        throw std::domain_error("quadrature covers even orders only");
    auto integrand = [m](double theta) {
        double c = std::cos(theta);
        return std::pow(std::sin(theta), m) / (1.0 + c * c);
    };
    using boost::math::quadrature::gauss_kronrod;
    double integral = gauss_kronrod<double, 61>::integrate(
        integrand, 0.0, std::numbers::pi / 2, 12, 1e-13);
    double scale = 2.0 * std::numbers::sqrt2 /
                   (std::numbers::pi * std::pow(2.0, m / 2));
    return scale * integral;
}

namespace detail {

// r0 + r1*sqrt2 + pi*(p0 + p1*sqrt2): the working type of the J recursion.
// pi stays formal; the final division asserts the pi-free part cancelled.
struct PiValue {
    Sqrt2Ext unit;
    Sqrt2Ext pi;

    PiValue operator-(const PiValue& o) const { return {unit - o.unit, pi - o.pi}; }
    PiValue scaled(const Sqrt2Ext& f) const { return {unit * f, pi * f}; }

    Sqrt2Ext divided_by_pi() const {
        if (!unit.is_zero())
            throw std::logic_error("formal pi failed to cancel");
        return pi;
    }
};

} // namespace detail

struct JRow {
    int n = 0;
    Sqrt2Ext j_over_pi;  // J_n = pi * this
    Sqrt2Ext moment;     // E(Z^{2n}) recovered through I_{2n} = 2^n J_n
    Sqrt2Ext closed;     // limit_moment(2n) for comparison
    bool matches = false;
};

// Rebuild the even moments through the integral recursion
// J_{n+1} = J_n - pi*C(2n,n)/2^{3n+2}, J_0 = pi/(2 sqrt2), and compare with
// the closed form; pi is carried formally and must cancel in every row.
inline std::vector<JRow> j_recursion(int n_max) {
    if (n_max < 1)
        throw std::domain_error("j_recursion needs n_max >= 1");
    std::vector<JRow> rows;
    rows.reserve(static_cast<std::size_t>(n_max));
    // J_0 = pi/(2 sqrt2) = pi * sqrt2/4
    detail::PiValue j{Sqrt2Ext(0), Sqrt2Ext(0, BigRational(1, 4))};
    for (int n = 1; n <= n_max; ++n) {
        BigRational c(binomial(2 * (n - 1), n - 1),
                      pow2(static_cast<unsigned>(3 * n - 1)));
        j = j - detail::PiValue{Sqrt2Ext(0), Sqrt2Ext(c)};
        JRow row;
        row.n = n;
        row.j_over_pi = j.divided_by_pi();
        // I_{2n} = 2^n J_n and E(Z^{2n}) = 2^{(3-2n)/2}/pi * I_{2n}; combined
        // the scale is 2*sqrt2 = 0 + 2*sqrt2.
        row.moment = j.scaled(Sqrt2Ext(0, 2)).divided_by_pi();
        row.closed = limit_moment(2 * n).value;
        row.matches = row.moment == row.closed;
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace hadwalk
