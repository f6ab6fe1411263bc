#include "hallq/sqrtq.hpp"

namespace hallq {

namespace {
long long isqrt_ll(long long v) {
    long long r = 0;
    while ((r + 1) * (r + 1) <= v) ++r;
    return r;
}
}  // namespace

void SqrtQ::fold_square() {
    if (q_ <= 0 || b_.is_zero()) return;
    long long r = isqrt_ll(q_);
    if (r * r == q_) {
        a_ += b_ * Rational(r);
        b_ = Rational(0);
    }
}

SqrtQ SqrtQ::v_pow(long long q, long long n) {
    bool odd = (n % 2) != 0;
    long long half = odd ? (n - 1) / 2 : n / 2;  // exact: n-1 is even when n is odd
    Rational qh = Rational::int_pow(q, half);
    if (!odd) return SqrtQ(qh, Rational(0), q);
    return SqrtQ(Rational(0), qh, q);
}

SqrtQ SqrtQ::inverse() const {
    // norm a^2 - b^2 q vanishes only at 0 when sqrt(q) is irrational
    Rational norm = a_ * a_ - b_ * b_ * Rational(q_);
    if (norm.is_zero()) {
        if (is_zero()) throw std::domain_error("inverse of zero scalar");
        // perfect-square q was folded away, so a nonzero scalar with zero
        // norm cannot occur; b_ == 0 case lands here only via a_ == 0
        throw std::domain_error("non-invertible sqrt(q) scalar");
    }
    return SqrtQ(a_ / norm, -b_ / norm, q_);
}

SqrtQ SqrtQ::pow(long long n) const {
    if (n < 0) return inverse().pow(-n);
    SqrtQ r = SqrtQ::one(q_);
    for (long long i = 0; i < n; ++i) r *= *this;
    return r;
}

std::string SqrtQ::str() const {
    return a_.str() + " + " + b_.str() + "*sqrt(" + std::to_string(q_) + ")";
}

}  // namespace hallq
