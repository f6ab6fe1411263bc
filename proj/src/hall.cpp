#include "hallq/hall.hpp"

#include <stdexcept>

namespace hallq {

ClassKey empty_class(const HallContext& ctx) {
    return {DimVector::zeros(ctx.quiver()->num_vertices()), 0};
}

HallElement hall_basis(const HallContext& ctx, const ClassKey& key) {
    auto table = ctx.table(key.dim);
    if (key.id < 0 || size_t(key.id) >= table->num_classes())
        throw std::invalid_argument("class id out of range for grade " + key.dim.str());
    HallElement e;
    e.add(key, SqrtQ::one(ctx.q()));
    return e;
}

HallElement hall_unit(const HallContext& ctx) { return hall_basis(ctx, empty_class(ctx)); }

long long hall_number_memo(const HallContext& ctx, const ClassKey& gamma, const ClassKey& alpha,
                           const ClassKey& beta) {
    const auto& buckets = ctx.subspace_buckets(gamma.dim, gamma.id, beta.dim);
    return buckets[alpha.id][beta.id];
}

HallElement hall_multiply(const HallContext& ctx, const HallElement& x, const HallElement& y) {
    HallElement out;
    for (const auto& [ka, ca] : x.terms())
        for (const auto& [kb, cb] : y.terms()) {
            DimVector gamma_dim = ka.dim + kb.dim;
            auto table_gamma = ctx.table(gamma_dim);
            SqrtQ twist = SqrtQ::v_pow(ctx.q(), euler_form(*ctx.quiver(), ka.dim, kb.dim));
            SqrtQ factor = ca * cb * twist;
            for (size_t g = 0; g < table_gamma->num_classes(); ++g) {
                long long gn = hall_number_memo(ctx, {gamma_dim, int(g)}, ka, kb);
                if (gn == 0) continue;
                out.add({gamma_dim, int(g)}, factor * SqrtQ::of_rational(Rational(gn), ctx.q()));
            }
        }
    return out;
}

TensorElement hall_comultiply(const HallContext& ctx, const HallElement& x) {
    TensorElement out;
    size_t nv = ctx.quiver()->num_vertices();
    for (const auto& [kg, cg] : x.terms()) {
        auto table_gamma = ctx.table(kg.dim);
        Rational a_gamma(table_gamma->aut(kg.id));

        // all splittings dim = a + b, odometer over the box [0, dim]
        std::vector<int> a(nv, 0);
        while (true) {
            DimVector da(a), db = kg.dim - da;
            auto table_a = ctx.table(da);
            auto table_b = ctx.table(db);
            const auto& buckets = ctx.subspace_buckets(kg.dim, kg.id, db);
            SqrtQ twist = SqrtQ::v_pow(ctx.q(), euler_form(*ctx.quiver(), da, db));
            for (size_t ia = 0; ia < table_a->num_classes(); ++ia)
                for (size_t ib = 0; ib < table_b->num_classes(); ++ib) {
                    long long gn = buckets[ia][ib];
                    if (gn == 0) continue;
                    Rational coeff = Rational(table_a->aut(int(ia))) *
                                     Rational(table_b->aut(int(ib))) * Rational(gn) / a_gamma;
                    out.add({{da, int(ia)}, {db, int(ib)}},
                            cg * twist * SqrtQ::of_rational(coeff, ctx.q()));
                }
            size_t i = nv;
            bool wrapped = true;
            while (i > 0) {
                --i;
                if (a[i] < kg.dim[i]) {
                    ++a[i];
                    wrapped = false;
                    break;
                }
                a[i] = 0;
            }
            if (wrapped) break;
        }
    }
    return out;
}

TensorElement twisted_tensor_multiply(const HallContext& ctx, const TensorElement& s,
                                      const TensorElement& t, int sign) {
    if (sign != 1 && sign != -1) throw std::invalid_argument("twist sign must be +1 or -1");
    TensorElement out;
    for (const auto& [kab, cab] : s.terms())
        for (const auto& [kcd, ccd] : t.terms()) {
            const auto& [ka, kb] = kab;
            const auto& [kc, kd] = kcd;
            long long e = sign * symmetric_euler_form(*ctx.quiver(), kb.dim, kc.dim);
            SqrtQ factor = cab * ccd * SqrtQ::v_pow(ctx.q(), e);
            HallElement left = hall_multiply(ctx, hall_basis(ctx, ka), hall_basis(ctx, kc));
            HallElement right = hall_multiply(ctx, hall_basis(ctx, kb), hall_basis(ctx, kd));
            for (const auto& [kl, cl] : left.terms())
                for (const auto& [kr, cr] : right.terms())
                    out.add({kl, kr}, factor * cl * cr);
        }
    return out;
}

SqrtQ gaussian_binomial(int n, int k, long long q) {
    if (k < 0 || k > n) throw std::invalid_argument("gaussian binomial needs 0 <= k <= n");
    auto q_integer = [q](int m) {
        // [m] = v^{m-1} + v^{m-3} + ... + v^{1-m}
        SqrtQ s = SqrtQ::zero(q);
        for (int j = 0; j < m; ++j) s += SqrtQ::v_pow(q, m - 1 - 2 * j);
        return s;
    };
    SqrtQ num = SqrtQ::one(q), den = SqrtQ::one(q);
    for (int i = 1; i <= k; ++i) {
        num *= q_integer(n - k + i);
        den *= q_integer(i);
    }
    return num / den;
}

HallElement serre_defect(const HallContext& ctx, int vertex_i, int vertex_j) {
    const Quiver& quiver = *ctx.quiver();
    if (vertex_i == vertex_j) throw std::invalid_argument("serre_defect needs distinct vertices");
    if (quiver.has_loop_at(vertex_i) || quiver.has_loop_at(vertex_j))
        throw std::invalid_argument("serre_defect is undefined at a loop vertex");
    size_t nv = quiver.num_vertices();
    DimVector ei = DimVector::unit(nv, vertex_i);
    DimVector ej = DimVector::unit(nv, vertex_j);
    long long a_ij = symmetric_euler_form(quiver, ei, ej);
    int m = int(1 - a_ij);

    HallElement ui = hall_basis(ctx, {ei, 0});
    HallElement uj = hall_basis(ctx, {ej, 0});
    std::vector<HallElement> ui_pow(m + 1);
    ui_pow[0] = hall_unit(ctx);
    for (int p = 1; p <= m; ++p) ui_pow[p] = hall_multiply(ctx, ui_pow[p - 1], ui);

    HallElement total;
    for (int p = 0; p <= m; ++p) {
        SqrtQ coeff = gaussian_binomial(m, p, ctx.q());
        if (p % 2) coeff = -coeff;
        HallElement term = hall_multiply(ctx, ui_pow[p], hall_multiply(ctx, uj, ui_pow[m - p]));
        for (const auto& [k, c] : term.terms()) total.add(k, coeff * c);
    }
    return total;
}

std::map<std::tuple<ClassKey, ClassKey, ClassKey>, SqrtQ> comultiply_twice(
    const HallContext& ctx, const ClassKey& key, bool left_first) {
    std::map<std::tuple<ClassKey, ClassKey, ClassKey>, SqrtQ> out;
    auto add = [&out](const std::tuple<ClassKey, ClassKey, ClassKey>& k, const SqrtQ& c) {
        auto [it, inserted] = out.try_emplace(k, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) out.erase(it);
        }
    };
    TensorElement first = hall_comultiply(ctx, hall_basis(ctx, key));
    for (const auto& [kk, c] : first.terms()) {
        const auto& [ka, kb] = kk;
        if (left_first) {
            TensorElement inner = hall_comultiply(ctx, hall_basis(ctx, ka));
            for (const auto& [kk2, c2] : inner.terms())
                add({kk2.first, kk2.second, kb}, c * c2);
        } else {
            TensorElement inner = hall_comultiply(ctx, hall_basis(ctx, kb));
            for (const auto& [kk2, c2] : inner.terms())
                add({ka, kk2.first, kk2.second}, c * c2);
        }
    }
    return out;
}

}  // namespace hallq
