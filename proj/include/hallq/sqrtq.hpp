#pragma once

#include <stdexcept>
#include <string>

#include "hallq/rational.hpp"

namespace hallq {

/// Element a + b*sqrt(q) of Q(sqrt(q)), with q a fixed non-square prime power.
///
/// This is the coefficient ring of the twisted Hall algebra: v_q = sqrt(q)
/// lives here exactly, as do all its integer powers. sqrt(q) is irrational
/// for every prime power that is not a perfect square; perfect-square q are
/// handled by folding b*sqrt(q) into the rational part on construction.
class SqrtQ {
public:
    SqrtQ() : a_(0), b_(0), q_(0) {}
    SqrtQ(Rational a, Rational b, long long q) : a_(a), b_(b), q_(q) { fold_square(); }

    static SqrtQ of_rational(Rational a, long long q) { return SqrtQ(a, Rational(0), q); }
    static SqrtQ zero(long long q) { return of_rational(Rational(0), q); }
    static SqrtQ one(long long q) { return of_rational(Rational(1), q); }
    /// v_q = +sqrt(q).
    static SqrtQ v(long long q) { return SqrtQ(Rational(0), Rational(1), q); }
    /// v_q^n, any integer n.
    static SqrtQ v_pow(long long q, long long n);

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }
    long long q() const { return q_; }

    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }

    SqrtQ operator-() const { return SqrtQ(-a_, -b_, q_); }
    SqrtQ operator+(const SqrtQ& o) const {
        check(o);
        return SqrtQ(a_ + o.a_, b_ + o.b_, qq(o));
    }
    SqrtQ operator-(const SqrtQ& o) const { return *this + (-o); }
    SqrtQ operator*(const SqrtQ& o) const {
        check(o);
        long long q = qq(o);
        return SqrtQ(a_ * o.a_ + b_ * o.b_ * Rational(q), a_ * o.b_ + b_ * o.a_, q);
    }
    SqrtQ inverse() const;
    SqrtQ operator/(const SqrtQ& o) const { return *this * o.inverse(); }

    SqrtQ& operator+=(const SqrtQ& o) { return *this = *this + o; }
    SqrtQ& operator-=(const SqrtQ& o) { return *this = *this - o; }
    SqrtQ& operator*=(const SqrtQ& o) { return *this = *this * o; }

    bool operator==(const SqrtQ& o) const { return a_ == o.a_ && b_ == o.b_; }
    bool operator!=(const SqrtQ& o) const { return !(*this == o); }

    SqrtQ pow(long long n) const;

    std::string str() const;

private:
    Rational a_, b_;
    long long q_;  // 0 for the neutral zero/one of unknown field size

    // Uninitialized scalars (q_ == 0) act as universal zeros so that empty
    // accumulations work; any arithmetic with a real scalar adopts its q.
    long long qq(const SqrtQ& o) const { return q_ ? q_ : o.q_; }
    void check(const SqrtQ& o) const {
        if (q_ && o.q_ && q_ != o.q_) throw std::invalid_argument("mixed sqrt(q) scalars");
    }
    void fold_square();
};

}  // namespace hallq
