#pragma once

#include <cmath>
#include <cstdint>
#include <numeric>
#include <string>

#include "apkit/errors.hpp"

namespace apkit {

// Overflow-checked int64 helpers. Group coordinates and measure supports can
// reach 5^21, so silent wraparound is not acceptable anywhere.
inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw ArithmeticError("int64 overflow in add");
    return r;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r)) throw ArithmeticError("int64 overflow in sub");
    return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw ArithmeticError("int64 overflow in mul");
    return r;
}

inline std::int64_t checked_neg(std::int64_t a) {
    if (a == INT64_MIN) throw ArithmeticError("int64 overflow in neg");
    return -a;
}

/// Exact rational over int64 with checked arithmetic. Always normalized:
/// den > 0, gcd(|num|, den) == 1. Intermediate products go through __int128.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(std::int64_t n) : num_(n), den_(1) {}  // NOLINT: implicit by design
    Rational(std::int64_t n, std::int64_t d) { assign(n, d); }

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    bool isZero() const { return num_ == 0; }
    bool isInteger() const { return den_ == 1; }

    Rational operator-() const { return Rational(checked_neg(num_), den_); }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return fromI128((__int128)a.num_ * b.den_ + (__int128)b.num_ * a.den_,
                        (__int128)a.den_ * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return fromI128((__int128)a.num_ * b.den_ - (__int128)b.num_ * a.den_,
                        (__int128)a.den_ * b.den_);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return fromI128((__int128)a.num_ * b.num_, (__int128)a.den_ * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) throw ArithmeticError("rational division by zero");
        return fromI128((__int128)a.num_ * b.den_, (__int128)a.den_ * b.num_);
    }

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return (__int128)a.num_ * b.den_ < (__int128)b.num_ * a.den_;
    }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    Rational abs() const { return num_ < 0 ? -*this : *this; }

    double toDouble() const { return static_cast<double>(num_) / static_cast<double>(den_); }

    std::string toString() const {
        return den_ == 1 ? std::to_string(num_)
                         : std::to_string(num_) + "/" + std::to_string(den_);
    }

    static Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }
    static Rational min(const Rational& a, const Rational& b) { return a < b ? a : b; }

    /// Best rational with denominator <= maxDen matching x exactly
    /// (|p/q - x| must vanish to double precision). Used to lift config
    /// step sizes like 0.1 into exact arithmetic.
    static Rational fromDoubleExact(double x, std::int64_t maxDen = 1000000) {
        // Stern-Brocot / continued fraction walk.
        double v = x;
        std::int64_t p0 = 0, q0 = 1, p1 = 1, q1 = 0;
        bool neg = v < 0;
        if (neg) v = -v;
        double frac = v;
        for (int it = 0; it < 64; ++it) {
            if (frac > 9e15) break;
            std::int64_t a = static_cast<std::int64_t>(frac);
            std::int64_t p2 = checked_add(checked_mul(a, p1), p0);
            std::int64_t q2 = checked_add(checked_mul(a, q1), q0);
            if (q2 > maxDen) break;
            p0 = p1; q0 = q1; p1 = p2; q1 = q2;
            double rem = frac - static_cast<double>(a);
            if (rem < 1e-15) break;
            frac = 1.0 / rem;
        }
        if (q1 == 0) throw UsageError("cannot represent value as a rational");
        Rational r(neg ? -p1 : p1, q1);
        if (std::abs(r.toDouble() - x) > 1e-12 * (std::abs(x) + 1.0))
            throw UsageError("value is not an exactly representable rational: " + std::to_string(x));
        return r;
    }

private:
    void assign(std::int64_t n, std::int64_t d) {
        if (d == 0) throw ArithmeticError("rational with zero denominator");
        if (n == INT64_MIN || d == INT64_MIN) throw ArithmeticError("rational magnitude overflow");
        if (d < 0) { n = -n; d = -d; }
        std::int64_t g = std::gcd(n, d);
        if (g > 1) { n /= g; d /= g; }
        num_ = n; den_ = d;
    }

    static Rational fromI128(__int128 n, __int128 d) {
        if (d == 0) throw ArithmeticError("rational with zero denominator");
        if (d < 0) { n = -n; d = -d; }
        __int128 an = n < 0 ? -n : n;
        // gcd on unsigned 128-bit magnitudes
        unsigned __int128 ua = (unsigned __int128)an, ub = (unsigned __int128)d;
        while (ub != 0) { unsigned __int128 t = ua % ub; ua = ub; ub = t; }
        if (ua > 1) { n /= (__int128)ua; d /= (__int128)ua; }
        if (n > INT64_MAX || n < INT64_MIN || d > INT64_MAX)
            throw ArithmeticError("rational overflow after reduction");
        Rational r;
        r.num_ = static_cast<std::int64_t>(n);
        r.den_ = static_cast<std::int64_t>(d);
        return r;
    }

    std::int64_t num_;
    std::int64_t den_;
};

}  // namespace apkit
