#pragma once

#include <map>
#include <stdexcept>
#include <string>

#include "hadwalk/coin.hpp"

namespace hadwalk {

inline BigInt binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n)
        return 0;
    if (k > n - k)
        k = n - k;
    BigInt r = 1;
    for (long j = 1; j <= k; ++j) {
        r *= n - k + j;
        r /= j; // exact at every step: r is C(n-k+j, j)
    }
    return r;
}

namespace detail {

// The four P/Q/R/S weights of one Xi(l,m), as plain rationals before the
// common (1/sqrt2)^(n-1) scale is attached.
struct XiWeights {
    BigRational p{0}, q{0}, r{0}, s{0};
};

inline XiWeights xi_weights(long l, long m) {
    if (l < 0 || m < 0 || l + m < 1)
        throw std::domain_error("Xi(l,m) needs l,m >= 0 and a nonempty word");
    XiWeights w;
    if (m == 0) { // pure P word
        w.p = 1;
        return w;
    }
    if (l == 0) { // pure Q word, alternating sign
        w.q = (m % 2 == 0) ? -1 : 1;
        return w;
    }
    // One term per cluster count gamma; the rational brackets (l-gamma)/gamma
    // and (m-gamma)/gamma always cancel against the binomials, so the final
    // weights are integers (asserted below).
    int msign = (m % 2 == 0) ? 1 : -1;
    for (long g = 1; g <= std::min(l, m); ++g) {
        int gsign = (g % 2 == 0) ? 1 : -1;
        BigRational base(binomial(l - 1, g - 1) * binomial(m - 1, g - 1));
        BigRational c = base * gsign * msign;
        w.p += c * BigRational(l - g, g);
        w.q -= c * BigRational(m - g, g);
        w.r += c;
        w.s += c;
    }
    for (const BigRational* x : {&w.p, &w.q, &w.r, &w.s}) {
        if (denominator(*x) != 1)
            throw std::logic_error("Xi weight did not collapse to an integer");
    }
    return w;
}

} // namespace detail

/**
 * Xi(l,m): the sum of all ordered words with l letters P and m letters Q,
 * in closed form. Two boundary cases are pure powers of P or Q; the mixed
 * case is a single alternating sum over the cluster count gamma, with
 * every term a combination of P, Q, R, S under the common scale
 * (1/sqrt2)^(n-1).
 */
template <class S>
Mat2<S> xi_closed(long l, long m) {
    using T = ScalarTraits<S>;
    auto w = detail::xi_weights(l, m);
    unsigned scale = static_cast<unsigned>(l + m - 1);
    auto term = [&](Coin c, const BigRational& coeff) {
        return coin_constant<S>(c) * T::from_rational_scaled(coeff, scale);
    };
    return term(Coin::P, w.p) + term(Coin::Q, w.q) +
           term(Coin::R, w.r) + term(Coin::S, w.s);
}

inline constexpr long kXiOracleCap = 16;

// Brute force: walk every arrangement of l P's and m Q's (bit set = Q) and
// add up the exact matrix products. Exponential, capped, and deliberately
// ignorant of the closed form — this is the referee for xi_closed.
template <class S>
Mat2<S> xi_oracle(long l, long m) {
    if (l < 0 || m < 0 || l + m < 1)
        throw std::domain_error("Xi(l,m) needs l,m >= 0 and a nonempty word");
    long n = l + m;
    if (n > kXiOracleCap)
        throw std::domain_error("xi_oracle: word length above enumeration cap");
    const Mat2<S> P = coin_constant<S>(Coin::P);
    const Mat2<S> Q = coin_constant<S>(Coin::Q);
    Mat2<S> sum;
    for (unsigned long mask = 0; mask < (1ul << n); ++mask) {
        if (static_cast<long>(__builtin_popcountl(mask)) != m)
            continue;
        Mat2<S> prod = (mask & 1ul) ? Q : P;
        for (long pos = 1; pos < n; ++pos)
            prod = prod * ((mask >> pos & 1ul) ? Q : P);
        sum += prod;
    }
    return sum;
}

/**
 * The per-letter weights of Xi(l,m) as exact scalars: Xi = pP + qQ + rR + sS.
 * Computed from the standalone cluster-sum formulas (a different route than
 * xi_closed's single bracket), so the two can cross-check each other.
 */
template <class S>
struct XiDecomposition {
    long l = 0, m = 0;
    S p{}, q{}, r{}, s{};

    Mat2<S> reconstruct() const {
        return coin_constant<S>(Coin::P) * p + coin_constant<S>(Coin::Q) * q +
               coin_constant<S>(Coin::R) * r + coin_constant<S>(Coin::S) * s;
    }
};

template <class S>
XiDecomposition<S> coefficients(long l, long m) {
    using T = ScalarTraits<S>;
    if (l < 0 || m < 0 || l + m < 1)
        throw std::domain_error("Xi(l,m) needs l,m >= 0 and a nonempty word");
    unsigned scale = static_cast<unsigned>(l + m - 1);
    XiDecomposition<S> d;
    d.l = l;
    d.m = m;
    d.p = d.q = d.r = d.s = T::make(0);
    if (m == 0) {
        d.p = T::make(1, 0, scale);
        return d;
    }
    if (l == 0) {
        d.q = T::make(m % 2 == 0 ? -1 : 1, 0, scale);
        return d;
    }
    int msign = (m % 2 == 0) ? 1 : -1;
    BigInt p_sum = 0, q_sum = 0, rs_sum = 0;
    for (long g = 1; g <= std::min(l, m); ++g) {
        int gsign = (g % 2 == 0) ? 1 : -1;
        p_sum += gsign * binomial(l - 1, g) * binomial(m - 1, g - 1);
        q_sum += gsign * binomial(l - 1, g - 1) * binomial(m - 1, g);
        rs_sum += gsign * binomial(l - 1, g - 1) * binomial(m - 1, g - 1);
    }
    d.p = T::from_rational_scaled(BigRational(p_sum * msign), scale);
    d.q = T::from_rational_scaled(BigRational(-q_sum * msign), scale);
    d.r = T::from_rational_scaled(BigRational(rs_sum * msign), scale);
    d.s = d.r;
    return d;
}

// Number of words of Xi(l,m) whose collapsed product is the given letter
// and which break into the given number of P/Q runs. The run counts per
// letter: p-words have 2*gamma+1 runs, q-words 2*gamma+1, r-words 2*gamma,
// s-words 2*gamma.
inline BigInt cluster_count(Coin kind, long l, long m, long gamma) {
    if (l < 1 || m < 1)
        throw std::domain_error("cluster counts need l, m >= 1");
    auto in = [gamma](long lo, long hi) { return gamma >= lo && gamma <= hi; };
    switch (kind) {
        case Coin::P:
            if (!in(1, std::min(l - 1, m)))
                throw std::domain_error("gamma out of range for kind p");
            return binomial(l - 1, gamma) * binomial(m - 1, gamma - 1);
        case Coin::Q:
            if (!in(1, std::min(l, m - 1)))
                throw std::domain_error("gamma out of range for kind q");
            return binomial(l - 1, gamma - 1) * binomial(m - 1, gamma);
        case Coin::R:
        case Coin::S:
            if (!in(1, std::min(l, m)))
                throw std::domain_error("gamma out of range for kind r/s");
            return binomial(l - 1, gamma - 1) * binomial(m - 1, gamma - 1);
        default:
            throw std::domain_error("cluster kind must be one of P, Q, R, S");
    }
}

namespace detail {

template <class S>
Mat2<S> real_transpose(const Mat2<S>& m) {
    using T = ScalarTraits<S>;
    // All Xi are real matrices, which is why the plain transpose below is
    // also the adjoint; make that assumption explicit.
    auto real = [](const S& z) {
        return ScalarTraits<S>::prob_is_zero(T::norm_sq(z - T::conj(z)));
    };
    if (!(real(m.a) && real(m.b) && real(m.c) && real(m.d)))
        throw std::logic_error("expected a real matrix before transposing");
    return m.transpose();
}

} // namespace detail

// tXi(l,m) Xi(l,m) - tXi(m,l) Xi(m,l): always of the shape [[a,b],[b,-a]],
// which is what makes mirror asymmetry a two-parameter linear functional
// of the initial state.
template <class S>
Mat2<S> difference_matrix(long l, long m) {
    auto xi_lm = xi_closed<S>(l, m);
    auto xi_ml = xi_closed<S>(m, l);
    return detail::real_transpose(xi_lm) * xi_lm -
           detail::real_transpose(xi_ml) * xi_ml;
}

/**
 * All site matrices M_k = tXi Xi of one time slice n; P(X_n = k) = phi* M_k phi.
 * Unitarity shows up as sum_k M_k = I, checked at construction.
 */
template <class S>
struct QuadraticForm {
    int n = 0;
    std::map<int, Mat2<S>> site; // k -> M_k, k = -n..n step 2
};

template <class S>
QuadraticForm<S> quadratic_form(int n) {
    if (n < 1)
        throw std::domain_error("quadratic_form needs n >= 1");
    QuadraticForm<S> f;
    f.n = n;
    Mat2<S> total;
    for (int k = -n; k <= n; k += 2) {
        long l = (n - k) / 2, m = (n + k) / 2;
        auto xi = xi_closed<S>(l, m);
        auto mk = detail::real_transpose(xi) * xi;
        total += mk;
        f.site.emplace(k, std::move(mk));
    }
    if (!ScalarTraits<S>::prob_is_zero((total - Mat2<S>::identity()).norm_sq()))
        throw std::logic_error("site matrices do not sum to the identity");
    return f;
}

// phi* M phi for hermitian M: an exact rational (or double) probability-like value.
template <class S>
typename ScalarTraits<S>::Prob apply_form(const Mat2<S>& m, const Vec2<S>& phi) {
    using T = ScalarTraits<S>;
    const S& a = phi.left;
    const S& b = phi.right;
    S value = T::conj(a) * (m.a * a + m.b * b) + T::conj(b) * (m.c * a + m.d * b);
    if constexpr (T::exact) {
        if (!(value - value.conj()).is_zero())
            throw std::logic_error("quadratic form value is not real");
        return value.to_rational();
    } else {
        return value.real();
    }
}

} // namespace hadwalk
