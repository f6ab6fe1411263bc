#include "hallq/rational.hpp"

namespace hallq {

namespace {
Rational::Int gcd128(Rational::Int a, Rational::Int b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        Rational::Int t = a % b;
        a = b;
        b = t;
    }
    return a;
}
}  // namespace

void Rational::normalize() {
    if (den_ == 0) throw std::domain_error("rational with zero denominator");
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    Int g = gcd128(num_, den_);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
    if (num_ == 0) den_ = 1;
}

Rational Rational::int_pow(long long base, long long e) {
    Rational r(1);
    Rational b = e >= 0 ? Rational(base) : Rational(Int(1), Int(base));
    long long n = e >= 0 ? e : -e;
    for (long long i = 0; i < n; ++i) r *= b;
    return r;
}

std::string int128_str(Rational::Int v) {
    if (v == 0) return "0";
    bool neg = v < 0;
    unsigned __int128 u = neg ? -(unsigned __int128)v : (unsigned __int128)v;
    std::string s;
    while (u != 0) {
        s.insert(s.begin(), char('0' + int(u % 10)));
        u /= 10;
    }
    return neg ? "-" + s : s;
}

std::string Rational::str() const { return int128_str(num_) + "/" + int128_str(den_); }

Rational Rational::from_string(const std::string& s) {
    auto slash = s.find('/');
    auto parse = [](const std::string& t) -> Int {
        if (t.empty()) throw std::invalid_argument("empty rational literal");
        size_t i = 0;
        bool neg = false;
        if (t[0] == '-' || t[0] == '+') {
            neg = t[0] == '-';
            i = 1;
        }
        if (i == t.size()) throw std::invalid_argument("bad rational literal: " + t);
        Int v = 0;
        for (; i < t.size(); ++i) {
            if (t[i] < '0' || t[i] > '9') throw std::invalid_argument("bad rational literal: " + t);
            Int d = t[i] - '0';
            if (__builtin_mul_overflow(v, Int(10), &v) || __builtin_add_overflow(v, d, &v))
                throw std::overflow_error("rational literal overflow");
        }
        return neg ? -v : v;
    };
    if (slash == std::string::npos) return Rational(parse(s), 1);
    return Rational(parse(s.substr(0, slash)), parse(s.substr(slash + 1)));
}

}  // namespace hallq
