#pragma once

#include <cmath>
#include <complex>

#include "hadwalk/dyadic.hpp"

namespace hadwalk {

using ComplexF = std::complex<double>;

// Tolerance used by the floating backend wherever the exact backend tests
// for equality.
inline constexpr double kFloatTolerance = 1e-12;

/**
 * ScalarTraits: the two amplitude backends behind one interface. The exact
 * backend keeps every structural check an exact identity; the floating backend
 * handles states and integrals with no dyadic representation.
 */
template <class S>
struct ScalarTraits;

template <>
struct ScalarTraits<DyadicGaussian> {
    using Scalar = DyadicGaussian;
    using Prob = BigRational;
    static constexpr bool exact = true;
    static constexpr const char* name = "exact";

    // (re + im*i) / sqrt(2)^s
    static Scalar make(long re, long im = 0, unsigned s = 0) {
        return Scalar(BigInt(re), BigInt(im), s);
    }
    static Scalar from_rational_scaled(const BigRational& r, unsigned s) {
        if (denominator(r) != 1)
            throw std::domain_error("exact scalar requires an integer coefficient");
        return Scalar(numerator(r), 0, s);
    }
    static Scalar conj(const Scalar& z) { return z.conj(); }
    static bool is_zero(const Scalar& z) { return z.is_zero(); }
    static Prob norm_sq(const Scalar& z) { return z.norm_sq(); }
    static Prob prob_zero() { return BigRational(0); }
    static Prob prob_one() { return BigRational(1); }
    static double prob_to_double(const Prob& p) { return to_double(p); }
    static bool prob_is_zero(const Prob& p) { return p == 0; }
    // Two amplitudes can share a state only when their sqrt(2) exponents
    // have equal parity: a sum like 1 + 1/sqrt(2) leaves the ring.
    static bool parity_compatible(const Scalar& a, const Scalar& b) {
        if (a.is_zero() || b.is_zero())
            return true;
        return (a.halfpow() % 2) == (b.halfpow() % 2);
    }
};

template <>
struct ScalarTraits<ComplexF> {
    using Scalar = ComplexF;
    using Prob = double;
    static constexpr bool exact = false;
    static constexpr const char* name = "float";

    static Scalar make(long re, long im = 0, unsigned s = 0) {
        double scale = std::pow(2.0, -0.5 * static_cast<double>(s));
        return Scalar(static_cast<double>(re) * scale,
                      static_cast<double>(im) * scale);
    }
    static Scalar from_rational_scaled(const BigRational& r, unsigned s) {
        return Scalar(to_double(r) * std::pow(2.0, -0.5 * static_cast<double>(s)), 0.0);
    }
    static Scalar conj(const Scalar& z) { return std::conj(z); }
    static bool is_zero(const Scalar& z) { return z == Scalar(0.0, 0.0); }
    static Prob norm_sq(const Scalar& z) { return std::norm(z); }
    static Prob prob_zero() { return 0.0; }
    static Prob prob_one() { return 1.0; }
    static double prob_to_double(Prob p) { return p; }
    static bool prob_is_zero(Prob p) { return std::abs(p) <= kFloatTolerance; }
    static bool parity_compatible(const Scalar&, const Scalar&) { return true; }
};

inline ComplexF to_complexf(const DyadicGaussian& z) {
    auto [re, im] = z.to_complex_parts();
    return ComplexF(re, im);
}

} // namespace hadwalk
