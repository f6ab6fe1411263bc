#pragma once

#include <map>
#include <tuple>

#include "hallq/sqrtq.hpp"
#include "hallq/table_cache.hpp"

namespace hallq {

/// Basis index of the twisted Hall algebra: an iso-class named by its
/// dimension vector and orbit id in that grade's table.
struct ClassKey {
    DimVector dim;
    int id = 0;

    bool operator<(const ClassKey& o) const {
        if (dim.counts() != o.dim.counts()) return dim.counts() < o.dim.counts();
        return id < o.id;
    }
    bool operator==(const ClassKey& o) const { return dim == o.dim && id == o.id; }
    std::string str() const { return dim.str() + ":" + std::to_string(id); }
};

/// Finitely supported scalar combination of basis classes. Zero
/// coefficients are never stored.
class HallElement {
public:
    void add(const ClassKey& k, const SqrtQ& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(k, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    const std::map<ClassKey, SqrtQ>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    SqrtQ coeff(const ClassKey& k) const {
        auto it = terms_.find(k);
        return it == terms_.end() ? SqrtQ() : it->second;
    }
    HallElement operator-(const HallElement& o) const {
        HallElement r = *this;
        for (const auto& [k, c] : o.terms_) r.add(k, -c);
        return r;
    }
    bool operator==(const HallElement& o) const { return terms_ == o.terms_; }

private:
    std::map<ClassKey, SqrtQ> terms_;
};

/// Finitely supported element of the tensor square.
class TensorElement {
public:
    using Key = std::pair<ClassKey, ClassKey>;
    void add(const Key& k, const SqrtQ& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(k, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    const std::map<Key, SqrtQ>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    SqrtQ coeff(const Key& k) const {
        auto it = terms_.find(k);
        return it == terms_.end() ? SqrtQ() : it->second;
    }
    TensorElement operator-(const TensorElement& o) const {
        TensorElement r = *this;
        for (const auto& [k, c] : o.terms_) r.add(k, -c);
        return r;
    }
    bool operator==(const TensorElement& o) const { return terms_ == o.terms_; }

private:
    std::map<Key, SqrtQ> terms_;
};

/// u_alpha for an existing class; throws if the id is out of range.
HallElement hall_basis(const HallContext& ctx, const ClassKey& key);

/// The unit u_of the zero-dimensional class.
HallElement hall_unit(const HallContext& ctx);
ClassKey empty_class(const HallContext& ctx);

/// g^gamma_{alpha beta} through the context's memo of bucketed
/// stable-subspace counts.
long long hall_number_memo(const HallContext& ctx, const ClassKey& gamma, const ClassKey& alpha,
                           const ClassKey& beta);

/// Ringel multiplication u_a * u_b = sum_g v^{<dim a, dim b>} g^g_{ab} u_g,
/// extended bilinearly.
HallElement hall_multiply(const HallContext& ctx, const HallElement& x, const HallElement& y);

/// Comultiplication D(u_g) = sum v^{<a,b>} a_a a_b / a_g g^g_{ab} u_a (x) u_b
/// over all splittings of the grade, extended linearly.
TensorElement hall_comultiply(const HallContext& ctx, const HallElement& x);

/// (u_a (x) u_b) . (u_c (x) u_d) = v^{sign*(dim b, dim c)} (u_a*u_c) (x) (u_b*u_d).
TensorElement twisted_tensor_multiply(const HallContext& ctx, const TensorElement& s,
                                      const TensorElement& t, int sign);

/// Symmetric Gaussian binomial at v = sqrt(q), exact.
SqrtQ gaussian_binomial(int n, int k, long long q);

/// sum_p (-1)^p [1-a_ij choose p] u_i^p u_j u_i^{1-a_ij-p}; zero exactly
/// when the simple classes satisfy the quantum Serre relation.
HallElement serre_defect(const HallContext& ctx, int vertex_i, int vertex_j);

/// (Delta (x) id) Delta and (id (x) Delta) Delta of a basis class, for the
/// coassociativity check.
std::map<std::tuple<ClassKey, ClassKey, ClassKey>, SqrtQ> comultiply_twice(
    const HallContext& ctx, const ClassKey& key, bool left_first);

}  // namespace hallq
