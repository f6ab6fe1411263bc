#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace hallq {

/// Exact rational number with 128-bit storage.
///
/// All algebra downstream (automorphism counts, Hall coefficients, the
/// two sides of the counting identities) is exact; any overflow throws
/// instead of wrapping.
class Rational {
public:
    using Int = __int128;

    Rational() : num_(0), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}
    Rational(Int n, Int d) : num_(n), den_(d) { normalize(); }

    static Rational from_string(const std::string& s);

    Int num() const { return num_; }
    Int den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_negative() const { return num_ < 0; }
    bool is_integer() const { return den_ == 1; }

    Rational operator-() const { return Rational(-num_, den_); }

    Rational operator+(const Rational& o) const {
        return Rational(checked_add(checked_mul(num_, o.den_), checked_mul(o.num_, den_)),
                        checked_mul(den_, o.den_));
    }
    Rational operator-(const Rational& o) const { return *this + (-o); }
    Rational operator*(const Rational& o) const {
        return Rational(checked_mul(num_, o.num_), checked_mul(den_, o.den_));
    }
    Rational operator/(const Rational& o) const {
        if (o.num_ == 0) throw std::domain_error("rational division by zero");
        return Rational(checked_mul(num_, o.den_), checked_mul(den_, o.num_));
    }

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Rational& o) const { return !(*this == o); }
    bool operator<(const Rational& o) const {
        return checked_mul(num_, o.den_) < checked_mul(o.num_, den_);
    }

    /// q^e for integer e of either sign.
    static Rational int_pow(long long base, long long e);

    /// Reduced "num/den" form, denominator always present and positive.
    std::string str() const;

    long long num_ll() const { return narrow(num_); }
    long long den_ll() const { return narrow(den_); }

private:
    Int num_, den_;

    void normalize();

    static Int checked_add(Int a, Int b) {
        Int r;
        if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("rational overflow");
        return r;
    }
    static Int checked_mul(Int a, Int b) {
        Int r;
        if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("rational overflow");
        return r;
    }
    static long long narrow(Int v) {
        if (v > INT64_MAX || v < INT64_MIN) throw std::overflow_error("rational narrow");
        return static_cast<long long>(v);
    }
    friend std::string int128_str(Rational::Int v);
};

std::string int128_str(Rational::Int v);

}  // namespace hallq
