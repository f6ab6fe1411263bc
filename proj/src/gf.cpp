#include "hallq/gf.hpp"

#include <stdexcept>
#include <string>

namespace hallq {

namespace {

bool is_prime(long long n) {
    if (n < 2) return false;
    for (long long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Polynomials over GF(p) encoded base p, constant term in the low digit.
struct PolyRing {
    long long p;

    int deg(long long f) const {
        int d = -1;
        long long q = 1;
        for (int i = 0; q <= f; ++i, q *= p)
            if ((f / q) % p) d = i;
        return d;
    }
    long long coef(long long f, int i) const {
        long long q = 1;
        for (int k = 0; k < i; ++k) q *= p;
        return (f / q) % p;
    }
    long long add(long long f, long long g) const {
        long long r = 0, q = 1;
        while (f || g) {
            r += ((f % p + g % p) % p) * q;
            f /= p;
            g /= p;
            q *= p;
        }
        return r;
    }
    long long scale(long long f, long long c) const {
        long long r = 0, q = 1;
        while (f) {
            r += ((f % p) * c % p) * q;
            f /= p;
            q *= p;
        }
        return r;
    }
    long long shift(long long f, int k) const {
        for (int i = 0; i < k; ++i) f *= p;
        return f;
    }
    long long mul(long long f, long long g) const {
        long long r = 0;
        int i = 0;
        while (g) {
            r = add(r, shift(scale(f, g % p), i));
            g /= p;
            ++i;
        }
        return r;
    }
    long long mod(long long f, long long m) const {
        int dm = deg(m);
        long long lead_inv = 1;
        {  // inverse of leading coefficient of m in GF(p)
            long long lc = coef(m, dm);
            for (long long x = 1; x < p; ++x)
                if (lc * x % p == 1) lead_inv = x;
        }
        while (true) {
            int df = deg(f);
            if (df < dm) return f;
            long long c = coef(f, df) * lead_inv % p;
            long long sub = shift(scale(m, (p - c) % p), df - dm);
            f = add(f, sub);
        }
    }
};

bool is_irreducible(long long f, const PolyRing& R) {
    int d = R.deg(f);
    if (d < 1) return false;
    // trial division by all monic polynomials of degree 1..d/2
    for (int k = 1; 2 * k <= d; ++k) {
        long long lead = R.shift(1, k);
        long long count = 1;
        for (int i = 0; i < k; ++i) count *= R.p;
        for (long long low = 0; low < count; ++low) {
            long long g = R.add(lead, low);
            if (R.mod(f, g) == 0) return false;
        }
    }
    return true;
}

}  // namespace

std::pair<long long, int> factor_prime_power(long long q) {
    if (q < 2) throw std::invalid_argument("field size must be at least 2");
    long long p = 0;
    for (long long d = 2; d * d <= q; ++d)
        if (q % d == 0) {
            p = d;
            break;
        }
    if (p == 0) p = q;  // q itself prime
    int e = 0;
    long long n = q;
    while (n % p == 0) {
        n /= p;
        ++e;
    }
    if (n != 1) throw std::invalid_argument(std::to_string(q) + " is not a prime power");
    if (!is_prime(p)) throw std::invalid_argument(std::to_string(q) + " is not a prime power");
    return {p, e};
}

std::shared_ptr<const GaloisField> GaloisField::make(long long q) {
    if (q > (1 << 16)) throw std::invalid_argument("field size above 2^16 unsupported");
    auto [p, e] = factor_prime_power(q);

    auto F = std::shared_ptr<GaloisField>(new GaloisField());
    F->q_ = q;
    F->p_ = p;
    F->e_ = e;

    PolyRing R{p};
    long long modulus = 0;
    if (e > 1) {
        // lowest lexicographic monic irreducible: x^e + (smallest lower part)
        long long lead = R.shift(1, e);
        long long count = 1;
        for (int i = 0; i < e; ++i) count *= p;
        for (long long low = 0; low < count; ++low) {
            long long f = R.add(lead, low);
            if (is_irreducible(f, R)) {
                modulus = f;
                break;
            }
        }
        if (modulus == 0) throw std::logic_error("no irreducible polynomial found");
    }

    auto field_mul = [&](long long a, long long b) -> long long {
        if (e == 1) return a * b % p;
        return R.mod(R.mul(a, b), modulus);
    };

    // negation
    F->neg_.assign(q, 0);
    for (long long a = 0; a < q; ++a) {
        if (e == 1) {
            F->neg_[a] = int((p - a) % p);
        } else {
            long long r = 0, qq = 1, f = a;
            while (f) {
                r += ((p - f % p) % p) * qq;
                f /= p;
                qq *= p;
            }
            F->neg_[a] = int(r);
        }
    }

    // primitive element: smallest a whose multiplicative order is q-1
    long long order_target = q - 1;
    std::vector<long long> prime_factors;
    {
        long long n = order_target;
        for (long long d = 2; d * d <= n; ++d)
            if (n % d == 0) {
                prime_factors.push_back(d);
                while (n % d == 0) n /= d;
            }
        if (n > 1) prime_factors.push_back(n);
    }
    auto pow_mul = [&](long long a, long long k) {
        long long r = 1;
        for (long long i = 0; i < k; ++i) r = field_mul(r, a);
        return r;
    };
    long long g = 0;
    if (q == 2) {
        g = 1;  // trivial multiplicative group
    } else {
        for (long long a = 2; a < q; ++a) {
            bool prim = true;
            for (long long f : prime_factors)
                if (pow_mul(a, order_target / f) == 1) {
                    prim = false;
                    break;
                }
            if (prim) {
                g = a;
                break;
            }
        }
    }
    if (g == 0) throw std::logic_error("no primitive element found");
    F->primitive_ = int(g);

    // discrete-log tables
    F->log_.assign(q, 0);
    F->exp_.assign(2 * (q - 1), 0);
    long long x = 1;
    for (long long k = 0; k < q - 1; ++k) {
        F->exp_[k] = int(x);
        F->exp_[k + q - 1] = int(x);
        F->log_[x] = int(k);
        x = field_mul(x, g);
    }
    if (x != 1) throw std::logic_error("primitive element order check failed");

    if (e > 1) {
        F->add_table_.assign(q * q, 0);
        for (long long a = 0; a < q; ++a)
            for (long long b = 0; b < q; ++b) {
                long long r = 0, qq = 1, fa = a, fb = b;
                while (fa || fb) {
                    r += ((fa % p + fb % p) % p) * qq;
                    fa /= p;
                    fb /= p;
                    qq *= p;
                }
                F->add_table_[a * q + b] = int(r);
            }
    }

    // spot-check the axioms on a small deterministic sample
    for (int a = 0; a < std::min<long long>(q, 5); ++a)
        for (int b = 0; b < std::min<long long>(q, 5); ++b)
            for (int c = 0; c < std::min<long long>(q, 5); ++c) {
                if (F->mul(a, F->add(b, c)) != F->add(F->mul(a, b), F->mul(a, c)))
                    throw std::logic_error("distributivity failure");
                if (F->mul(F->mul(a, b), c) != F->mul(a, F->mul(b, c)))
                    throw std::logic_error("associativity failure");
            }
    for (int a = 1; a < q; ++a)
        if (F->mul(a, F->inv(a)) != 1) throw std::logic_error("inverse failure");

    return F;
}

int GaloisField::inv(int a) const {
    if (a == 0) throw std::domain_error("inverse of zero field element");
    return exp_[(q_ - 1) - log_[a]];
}

int GaloisField::frobenius(int a) const {
    int r = 1;
    for (long long i = 0; i < p_; ++i) r = mul(r, a);
    return a == 0 ? 0 : r;
}

}  // namespace hallq
