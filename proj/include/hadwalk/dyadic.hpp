#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cmath>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>

namespace hadwalk {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

inline BigInt pow2(unsigned e) { return BigInt(1) << e; }

inline double to_double(const BigRational& r) { return r.convert_to<double>(); }

/**
 * DyadicGaussian: exact numbers of the form (re + im*i) / sqrt(2)^s with
 * arbitrary-precision integer components. Every amplitude reachable by the
 * walk from an exact initial state lives in this set, because each step only
 * multiplies by matrices whose entries are Gaussian integers over sqrt(2).
 *
 * Normal form: while s >= 2 and both components are even, divide both by 2
 * and lower s by 2; zero is stored as (0, 0, 0). This makes equality
 * structural.
 */
class DyadicGaussian {
public:
    DyadicGaussian() : re_(0), im_(0), s_(0) {}
    DyadicGaussian(BigInt re, BigInt im = 0, unsigned halfpow = 0)
        : re_(std::move(re)), im_(std::move(im)), s_(halfpow) {
        canonicalize();
    }
    DyadicGaussian(int re) : DyadicGaussian(BigInt(re)) {}

    static DyadicGaussian zero() { return DyadicGaussian(); }
    static DyadicGaussian one() { return DyadicGaussian(1); }
    static DyadicGaussian i() { return DyadicGaussian(0, 1); }
    // 1/sqrt(2)^k
    static DyadicGaussian inv_sqrt2_pow(unsigned k) { return DyadicGaussian(1, 0, k); }

    const BigInt& re() const { return re_; }
    const BigInt& im() const { return im_; }
    unsigned halfpow() const { return s_; }

    bool is_zero() const { return re_ == 0 && im_ == 0; }
    bool is_real() const { return im_ == 0; }

    DyadicGaussian operator-() const { return DyadicGaussian(-re_, -im_, s_); }

    DyadicGaussian conj() const { return DyadicGaussian(re_, -im_, s_); }

    DyadicGaussian times_i() const { return DyadicGaussian(-im_, re_, s_); }

    // Multiply by 1/sqrt(2).
    DyadicGaussian div_sqrt2() const { return DyadicGaussian(re_, im_, s_ + 1); }

    DyadicGaussian operator*(const DyadicGaussian& o) const {
        return DyadicGaussian(re_ * o.re_ - im_ * o.im_,
                              re_ * o.im_ + im_ * o.re_, s_ + o.s_);
    }

    DyadicGaussian operator*(const BigInt& k) const {
        return DyadicGaussian(re_ * k, im_ * k, s_);
    }

    // Addition is defined only between values whose sqrt(2) exponents share
    // parity; a mixed-parity sum leaves the representable set. The walk never
    // produces one: all amplitudes at a fixed time carry the same exponent.
    DyadicGaussian operator+(const DyadicGaussian& o) const {
        if (is_zero()) return o;
        if (o.is_zero()) return *this;
        if ((s_ & 1u) != (o.s_ & 1u))
            throw std::domain_error(
                "DyadicGaussian: sum of values with mismatched sqrt(2) parity "
                "is not representable");
        unsigned s = std::max(s_, o.s_);
        BigInt f1 = pow2((s - s_) / 2);
        BigInt f2 = pow2((s - o.s_) / 2);
        return DyadicGaussian(re_ * f1 + o.re_ * f2, im_ * f1 + o.im_ * f2, s);
    }

    DyadicGaussian operator-(const DyadicGaussian& o) const { return *this + (-o); }

    DyadicGaussian& operator+=(const DyadicGaussian& o) { return *this = *this + o; }
    DyadicGaussian& operator-=(const DyadicGaussian& o) { return *this = *this - o; }
    DyadicGaussian& operator*=(const DyadicGaussian& o) { return *this = *this * o; }

    bool operator==(const DyadicGaussian& o) const = default;

    // |z|^2 = (re^2 + im^2) / 2^s, an exact non-negative rational.
    BigRational norm_sq() const {
        return BigRational(re_ * re_ + im_ * im_, pow2(s_));
    }

    // Exact rational value of a real dyadic scalar. Requires im == 0 and,
    // unless the value is zero, an even exponent.
    BigRational to_rational() const {
        if (im_ != 0)
            throw std::domain_error("DyadicGaussian: not a real value");
        if (re_ == 0) return BigRational(0);
        if (s_ & 1u)
            throw std::domain_error("DyadicGaussian: not a rational value");
        return BigRational(re_, pow2(s_ / 2));
    }

    std::pair<double, double> to_complex_parts() const {
        double scale = std::pow(2.0, -0.5 * static_cast<double>(s_));
        return {re_.convert_to<double>() * scale, im_.convert_to<double>() * scale};
    }

    // Renders as e.g. "1", "-i", "(1+i)/√2", "(3-2i)/√2^4".
    std::string to_string() const {
        if (is_zero()) return "0";
        std::ostringstream num;
        bool both = re_ != 0 && im_ != 0;
        if (both) num << '(';
        if (re_ != 0) num << re_;
        if (im_ != 0) {
            if (both && im_ > 0) num << '+';
            if (im_ == -1) num << '-';
            else if (im_ != 1) num << im_;
            num << 'i';
        }
        if (both) num << ')';
        if (s_ == 0) return num.str();
        num << "/√2";
        if (s_ > 1) num << '^' << s_;
        return num.str();
    }

    friend std::ostream& operator<<(std::ostream& os, const DyadicGaussian& z) {
        return os << z.to_string();
    }

private:
    void canonicalize() {
        if (re_ == 0 && im_ == 0) {
            s_ = 0;
            return;
        }
        while (s_ >= 2 && re_ % 2 == 0 && im_ % 2 == 0) {
            re_ /= 2;
            im_ /= 2;
            s_ -= 2;
        }
    }

    BigInt re_, im_;
    unsigned s_;
};

inline DyadicGaussian operator*(const BigInt& k, const DyadicGaussian& z) { return z * k; }

} // namespace hadwalk
