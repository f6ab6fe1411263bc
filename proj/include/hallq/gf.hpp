#pragma once

#include <cstdint>
#include <memory>
#include <vector>

namespace hallq {

/// GF(q) for a prime power q <= 2^16. Elements are integers 0..q-1.
///
/// For extension degree e > 1 the field is the polynomial quotient by the
/// lowest lexicographic monic irreducible of degree e over GF(p); an element
/// value encodes its coefficient tuple in base p (constant term in the
/// lowest digit). Multiplication and inversion run on discrete-log tables,
/// addition is digitwise mod p (a plain modular add when e == 1).
class GaloisField {
public:
    static std::shared_ptr<const GaloisField> make(long long q);

    long long q() const { return q_; }
    long long p() const { return p_; }
    int e() const { return e_; }

    int add(int a, int b) const {
        if (e_ == 1) {
            int s = a + b;
            return s >= p_ ? s - int(p_) : s;
        }
        return add_table_[a * q_ + b];
    }
    int neg(int a) const { return neg_[a]; }
    int sub(int a, int b) const { return add(a, neg_[b]); }
    int mul(int a, int b) const {
        if (a == 0 || b == 0) return 0;
        return exp_[log_[a] + log_[b]];
    }
    int inv(int a) const;
    int div(int a, int b) const { return mul(a, inv(b)); }

    /// A fixed generator of the multiplicative group.
    int primitive_element() const { return primitive_; }

    /// x -> x^p, the absolute Frobenius.
    int frobenius(int a) const;

private:
    GaloisField() = default;
    long long q_ = 0, p_ = 0;
    int e_ = 0;
    int primitive_ = 0;
    std::vector<int> log_;        // log_[a] for a != 0
    std::vector<int> exp_;        // exp_[k] = g^k, doubled range to skip a mod
    std::vector<int> neg_;        // additive inverse
    std::vector<int> add_table_;  // only for e > 1
};

using FieldPtr = std::shared_ptr<const GaloisField>;

/// q = p^e with p prime, e >= 1; returns {p, e} or throws.
std::pair<long long, int> factor_prime_power(long long q);

}  // namespace hallq
