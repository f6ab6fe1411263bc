#include "hallq/functor_shadow.hpp"

#include <algorithm>
#include <atomic>
#include <random>
#include <stdexcept>

namespace hallq {

namespace {

long long arrow_pairing(const Quiver& quiver, const DimVector& v, const DimVector& w) {
    long long r = 0;
    for (const auto& a : quiver.arrows()) r += (long long)v[a.src] * w[a.tgt];
    return r;
}

long long vertex_pairing(const DimVector& v, const DimVector& w) {
    long long r = 0;
    for (size_t i = 0; i < v.size(); ++i) r += (long long)v[i] * w[i];
    return r;
}

// all dimension vectors inside the box [0, hi]
std::vector<DimVector> box(const DimVector& hi) {
    std::vector<DimVector> out;
    std::vector<int> c(hi.size(), 0);
    while (true) {
        out.push_back(DimVector(c));
        size_t i = c.size();
        bool wrapped = true;
        while (i > 0) {
            --i;
            if (c[i] < hi[i]) {
                ++c[i];
                wrapped = false;
                break;
            }
            c[i] = 0;
        }
        if (wrapped) break;
    }
    return out;
}

}  // namespace

void ClassFunction::scale(const SqrtQ& c) {
    if (c.is_zero()) {
        values_.clear();
        return;
    }
    for (auto& [k, v] : values_) v *= c;
}

ClassFunction ClassFunction::operator+(const ClassFunction& o) const {
    ClassFunction r = *this;
    for (const auto& [k, v] : o.values_) r.add(k, v);
    return r;
}

bool ClassFunction::factors_size_eq(const ClassFunction& o) const {
    if (factors_.size() != o.factors_.size()) return false;
    for (size_t i = 0; i < factors_.size(); ++i)
        if (factors_[i] != o.factors_[i]) return false;
    return true;
}

ClassFunction delta_fn(const HallContext& ctx, const ClassKey& key) {
    auto t = ctx.table(key.dim);
    if (key.id < 0 || size_t(key.id) >= t->num_classes())
        throw std::invalid_argument("delta_fn: class id out of range");
    ClassFunction f({key.dim});
    f.add({key.id}, SqrtQ::one(ctx.q()));
    return f;
}

ClassFunction outer(const ClassFunction& f, const ClassFunction& g) {
    std::vector<DimVector> factors = f.factors();
    factors.insert(factors.end(), g.factors().begin(), g.factors().end());
    ClassFunction r(std::move(factors));
    for (const auto& [kf, cf] : f.values())
        for (const auto& [kg, cg] : g.values()) {
            std::vector<int> ids = kf;
            ids.insert(ids.end(), kg.begin(), kg.end());
            r.add(ids, cf * cg);
        }
    return r;
}

ClassFunction permute(const ClassFunction& f, const std::vector<size_t>& perm) {
    std::vector<DimVector> factors(perm.size());
    for (size_t j = 0; j < perm.size(); ++j) factors[j] = f.factors().at(perm[j]);
    ClassFunction r(std::move(factors));
    for (const auto& [k, c] : f.values()) {
        std::vector<int> ids(perm.size());
        for (size_t j = 0; j < perm.size(); ++j) ids[j] = k[perm[j]];
        r.add(ids, c);
    }
    return r;
}

long long ind_twist_exponent(const Quiver& quiver, const DimVector& nu1, const DimVector& nu2) {
    return arrow_pairing(quiver, nu1, nu2) + vertex_pairing(nu1, nu2);
}

SqrtQ ind_sum_at(const HallContext& ctx, const ClassFunction& f, const Rep& x,
                 const DimVector& sub_dim) {
    if (f.factors().size() != 2) throw std::invalid_argument("ind expects a two-factor function");
    const GaloisField& F = *ctx.field();
    const Quiver& quiver = *ctx.quiver();
    auto t_quot = ctx.table(x.dim - sub_dim);
    auto t_sub = ctx.table(sub_dim);
    SqrtQ total = SqrtQ::zero(ctx.q());
    for (const auto& W : enumerate_graded_subspaces(F, x.dim, sub_dim)) {
        if (!is_stable(F, quiver, x, W)) continue;
        int quot = t_quot->classify(quotient_rep(F, quiver, x, W));
        int sub = t_sub->classify(sub_rep(F, quiver, x, W));
        total += f.at({quot, sub});
    }
    return total;
}

namespace {

// block-lower-triangular assembly: quotient part first, sub part second,
// extension block y in the lower left
Rep assemble(const Quiver& quiver, const Rep& quot_part, const Rep& sub_part,
             const std::vector<int>& y_digits, const std::vector<std::pair<int, int>>& y_shapes) {
    Rep x;
    x.dim = quot_part.dim + sub_part.dim;
    size_t pos = 0;
    for (size_t h = 0; h < quiver.arrows().size(); ++h) {
        const auto& a = quiver.arrows()[h];
        int r1 = quot_part.dim[a.tgt], c1 = quot_part.dim[a.src];
        int r2 = sub_part.dim[a.tgt], c2 = sub_part.dim[a.src];
        GfMatrix m(r1 + r2, c1 + c2);
        for (int i = 0; i < r1; ++i)
            for (int j = 0; j < c1; ++j) m.set(i, j, quot_part.mats[h].at(i, j));
        for (int i = 0; i < r2; ++i)
            for (int j = 0; j < c2; ++j) m.set(r1 + i, c1 + j, sub_part.mats[h].at(i, j));
        auto [yr, yc] = y_shapes[h];
        for (int i = 0; i < yr; ++i)
            for (int j = 0; j < yc; ++j) m.set(r1 + i, j, y_digits[pos + size_t(i) * yc + j]);
        pos += size_t(yr) * yc;
        x.mats.push_back(std::move(m));
    }
    return x;
}

}  // namespace

SqrtQ res_sum_at(const HallContext& ctx, const ClassFunction& f, const Rep& quot_part,
                 const Rep& sub_part) {
    if (f.factors().size() != 1) throw std::invalid_argument("res expects a one-factor function");
    const Quiver& quiver = *ctx.quiver();
    auto t = ctx.table(quot_part.dim + sub_part.dim);

    // fiber: one block Hom((V_quot)_{s(h)}, (V_sub)_{t(h)}) per arrow
    std::vector<std::pair<int, int>> y_shapes;
    long long fiber_digits = 0;
    for (const auto& a : quiver.arrows()) {
        int yr = sub_part.dim[a.tgt], yc = quot_part.dim[a.src];
        y_shapes.emplace_back(yr, yc);
        fiber_digits += (long long)yr * yc;
    }
    long long fiber_points = 1;
    for (long long i = 0; i < fiber_digits; ++i) {
        if (fiber_points > ctx.budget()) throw std::runtime_error("restriction fiber over budget");
        fiber_points *= ctx.q();
    }

    SqrtQ total = SqrtQ::zero(ctx.q());
    std::vector<int> y(fiber_digits, 0);
    while (true) {
        Rep x = assemble(quiver, quot_part, sub_part, y, y_shapes);
        total += f.at({t->classify(x)});
        size_t i = y.size();
        bool wrapped = true;
        while (i > 0) {
            --i;
            if (y[i] + 1 < ctx.q()) {
                ++y[i];
                wrapped = false;
                break;
            }
            y[i] = 0;
        }
        if (wrapped) break;
    }
    return total;
}

ClassFunction ind_fn(const HallContext& ctx, const ClassFunction& f, const SqrtQ& unit) {
    if (f.factors().size() != 2) throw std::invalid_argument("ind expects a two-factor function");
    const DimVector& nu1 = f.factors()[0];
    const DimVector& nu2 = f.factors()[1];
    DimVector nu = nu1 + nu2;
    auto t = ctx.table(nu);
    SqrtQ twist = unit.pow(ind_twist_exponent(*ctx.quiver(), nu1, nu2));
    ClassFunction out({nu});
    for (size_t c = 0; c < t->num_classes(); ++c) {
        SqrtQ v = ind_sum_at(ctx, f, t->representative(int(c)), nu2);
        out.add({int(c)}, twist * v);
    }
    return out;
}

ClassFunction res_fn(const HallContext& ctx, const ClassFunction& f, const DimVector& nu1,
                     const DimVector& nu2, const SqrtQ& unit) {
    if (f.factors().size() != 1) throw std::invalid_argument("res expects a one-factor function");
    if (nu1 + nu2 != f.factors()[0])
        throw std::invalid_argument("res splitting does not match the function's grade");
    auto t1 = ctx.table(nu1);
    auto t2 = ctx.table(nu2);
    SqrtQ twist = unit.pow(-euler_form(*ctx.quiver(), nu1, nu2));
    ClassFunction out({nu1, nu2});
    for (size_t c1 = 0; c1 < t1->num_classes(); ++c1) {
        Rep quot_part = t1->representative(int(c1));
        for (size_t c2 = 0; c2 < t2->num_classes(); ++c2) {
            SqrtQ v = res_sum_at(ctx, f, quot_part, t2->representative(int(c2)));
            out.add({int(c1), int(c2)}, twist * v);
        }
    }
    return out;
}

ClassFunction ind_pair_fn(const HallContext& ctx, const ClassFunction& f, const SqrtQ& unit) {
    if (f.factors().size() != 4)
        throw std::invalid_argument("pairwise ind expects a four-factor function");
    const GaloisField& F = *ctx.field();
    const Quiver& quiver = *ctx.quiver();
    DimVector a1 = f.factors()[0], b1 = f.factors()[1];
    DimVector a2 = f.factors()[2], b2 = f.factors()[3];
    DimVector ap = a1 + b1, bp = a2 + b2;
    auto tp = ctx.table(ap);
    auto tq = ctx.table(bp);
    auto t_a1 = ctx.table(a1);
    auto t_b1 = ctx.table(b1);
    auto t_a2 = ctx.table(a2);
    auto t_b2 = ctx.table(b2);
    SqrtQ twist = unit.pow(ind_twist_exponent(quiver, a1, b1) + ind_twist_exponent(quiver, a2, b2));

    ClassFunction out({ap, bp});
    for (size_t cp = 0; cp < tp->num_classes(); ++cp) {
        Rep xp = tp->representative(int(cp));
        // gather (quot, sub) pairs of the first factor once
        std::vector<std::pair<int, int>> first_pairs;
        for (const auto& W : enumerate_graded_subspaces(F, ap, b1)) {
            if (!is_stable(F, quiver, xp, W)) continue;
            first_pairs.emplace_back(t_a1->classify(quotient_rep(F, quiver, xp, W)),
                                     t_b1->classify(sub_rep(F, quiver, xp, W)));
        }
        for (size_t cq = 0; cq < tq->num_classes(); ++cq) {
            Rep xq = tq->representative(int(cq));
            SqrtQ total = SqrtQ::zero(ctx.q());
            for (const auto& W : enumerate_graded_subspaces(F, bp, b2)) {
                if (!is_stable(F, quiver, xq, W)) continue;
                int quot2 = t_a2->classify(quotient_rep(F, quiver, xq, W));
                int sub2 = t_b2->classify(sub_rep(F, quiver, xq, W));
                for (const auto& [quot1, sub1] : first_pairs)
                    total += f.at({quot1, sub1, quot2, sub2});
            }
            out.add({int(cp), int(cq)}, twist * total);
        }
    }
    return out;
}

ShiftConstants shift_constants(const Quiver& quiver, const DimVector& alpha,
                               const DimVector& beta, const DimVector& alphap,
                               const DimVector& betap) {
    if (alpha + beta != alphap + betap)
        throw std::invalid_argument("shift constants: alpha+beta != alpha'+beta'");
    ShiftConstants sc;
    sc.M = arrow_pairing(quiver, alpha, beta) + vertex_pairing(alpha, beta) -
           euler_form(quiver, alphap, betap);
    for (const auto& lam : enumerate_quadruples(alpha, beta, alphap, betap)) {
        long long L = arrow_pairing(quiver, lam.a1, lam.a2) +
                      arrow_pairing(quiver, lam.a1, lam.b2) +
                      arrow_pairing(quiver, lam.b1, lam.b2) + vertex_pairing(lam.a2, lam.b1);
        long long K = L - arrow_pairing(quiver, lam.a1, lam.a2) -
                      arrow_pairing(quiver, lam.b1, lam.b2);
        long long N = -euler_form(quiver, lam.a1, lam.a2) - euler_form(quiver, lam.b1, lam.b2) +
                      arrow_pairing(quiver, lam.a1, lam.b1) +
                      arrow_pairing(quiver, lam.a2, lam.b2) + vertex_pairing(lam.a1, lam.b1) +
                      vertex_pairing(lam.a2, lam.b2);
        sc.per_quadruple.push_back({lam, N, L, K});
    }
    return sc;
}

bool verify_shift_identity(const Quiver& quiver, const DimVector& alpha, const DimVector& beta,
                           const DimVector& alphap, const DimVector& betap) {
    ShiftConstants sc = shift_constants(quiver, alpha, beta, alphap, betap);
    for (const auto& pq : sc.per_quadruple) {
        long long rhs = pq.N - symmetric_euler_form(quiver, pq.lambda.a2, pq.lambda.b1);
        if (sc.M - 2 * pq.K != rhs) return false;
    }
    return true;
}

SqrtQ realize_v_unit(VUnit u, long long q) {
    switch (u) {
        case VUnit::PlusV: return SqrtQ::v(q);
        case VUnit::MinusV: return -SqrtQ::v(q);
        case VUnit::PlusVInv: return SqrtQ::v(q).inverse();
        case VUnit::MinusVInv: return -SqrtQ::v(q).inverse();
    }
    throw std::logic_error("unreachable");
}

const char* v_unit_name(VUnit u) {
    switch (u) {
        case VUnit::PlusV: return "+sqrt(q)";
        case VUnit::MinusV: return "-sqrt(q)";
        case VUnit::PlusVInv: return "+1/sqrt(q)";
        case VUnit::MinusVInv: return "-1/sqrt(q)";
    }
    throw std::logic_error("unreachable");
}

std::vector<VUnit> all_v_units() {
    return {VUnit::PlusV, VUnit::MinusV, VUnit::PlusVInv, VUnit::MinusVInv};
}

DecompositionCheck verify_res_ind_decomposition(const HallContext& ctx, const ClassKey& A,
                                                const ClassKey& B, const DimVector& alphap,
                                                const DimVector& betap, const SqrtQ& unit) {
    const Quiver& quiver = *ctx.quiver();
    DimVector gamma = A.dim + B.dim;
    if (alphap + betap != gamma)
        throw std::invalid_argument("decomposition: output splitting does not match the grade");

    // composed side
    ClassFunction lhs =
        res_fn(ctx, ind_fn(ctx, outer(delta_fn(ctx, A), delta_fn(ctx, B)), unit), alphap, betap,
               unit);

    // decomposed side
    ClassFunction rhs({alphap, betap});
    for (const auto& lam : enumerate_quadruples(A.dim, B.dim, alphap, betap)) {
        ClassFunction ra = res_fn(ctx, delta_fn(ctx, A), lam.a1, lam.a2, unit);
        ClassFunction rb = res_fn(ctx, delta_fn(ctx, B), lam.b1, lam.b2, unit);
        ClassFunction four = permute(outer(ra, rb), {0, 2, 1, 3});  // [a1, b1, a2, b2]
        ClassFunction term = ind_pair_fn(ctx, four, unit);
        term.scale(unit.pow(-symmetric_euler_form(quiver, lam.a2, lam.b1)));
        rhs = rhs + term;
    }
    return {lhs == rhs, std::move(lhs), std::move(rhs)};
}

std::vector<DecompositionInstance> decomposition_instances(const HallContext& ctx, int bound) {
    size_t nv = ctx.quiver()->num_vertices();
    std::vector<DecompositionInstance> out;
    std::vector<int> g(nv, 0);
    while (true) {
        DimVector gamma(g);
        if (gamma.total() <= bound) {
            auto splits = box(gamma);
            for (const auto& da : splits) {
                DimVector db = gamma - da;
                auto ta = ctx.table(da);
                auto tb = ctx.table(db);
                for (const auto& dap : splits) {
                    DimVector dbp = gamma - dap;
                    for (size_t ia = 0; ia < ta->num_classes(); ++ia)
                        for (size_t ib = 0; ib < tb->num_classes(); ++ib)
                            out.push_back({{da, int(ia)}, {db, int(ib)}, dap, dbp});
                }
            }
        }
        size_t i = nv;
        bool wrapped = true;
        while (i > 0) {
            --i;
            if (g[i] < bound) {
                ++g[i];
                wrapped = false;
                break;
            }
            g[i] = 0;
        }
        if (wrapped) break;
    }
    return out;
}

VUnitSweep determine_v_unit(const HallContext& ctx, int bound, bool parallel) {
    auto instances = decomposition_instances(ctx, bound);
    auto candidates = all_v_units();
    std::vector<char> alive(candidates.size(), 1);

    std::vector<std::vector<char>> pass(candidates.size(),
                                        std::vector<char>(instances.size(), 0));
    std::atomic<bool> failed{false};
    std::exception_ptr error;
#pragma omp parallel for schedule(dynamic) collapse(2) if (parallel)
    for (long long c = 0; c < (long long)candidates.size(); ++c)
        for (long long i = 0; i < (long long)instances.size(); ++i) {
            if (failed.load(std::memory_order_relaxed)) continue;
            try {
                const auto& inst = instances[i];
                SqrtQ u = realize_v_unit(candidates[c], ctx.q());
                pass[c][i] = verify_res_ind_decomposition(ctx, inst.A, inst.B, inst.alphap,
                                                          inst.betap, u)
                                     .equal
                                 ? 1
                                 : 0;
            } catch (...) {
#pragma omp critical(v_unit_sweep_error)
                {
                    if (!failed.exchange(true)) error = std::current_exception();
                }
            }
        }
    if (failed.load()) std::rethrow_exception(error);

    VUnitSweep result;
    result.instances = (long long)instances.size();
    for (size_t c = 0; c < candidates.size(); ++c) {
        bool ok = true;
        for (char p : pass[c])
            if (!p) ok = false;
        if (ok) result.survivors.push_back(candidates[c]);
    }
    // a clean sweep ends in one +/- gauge pair; report its positive member
    if (result.survivors.size() == 1) {
        result.canonical = result.survivors[0];
    } else if (result.survivors.size() == 2) {
        auto is_pair = [](VUnit a, VUnit b) {
            return (a == VUnit::PlusV && b == VUnit::MinusV) ||
                   (a == VUnit::PlusVInv && b == VUnit::MinusVInv);
        };
        if (is_pair(result.survivors[0], result.survivors[1]))
            result.canonical = result.survivors[0];
    }
    return result;
}

ShiftFuzzResult shift_identity_fuzz(const Quiver& quiver, int samples, uint64_t seed,
                                    int max_entry) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> entry(0, max_entry);
    size_t nv = quiver.num_vertices();

    ShiftFuzzResult result;
    result.all_ok = true;
    for (int s = 0; s < samples; ++s) {
        std::vector<int> a(nv), b(nv), ap(nv);
        for (size_t i = 0; i < nv; ++i) a[i] = entry(rng);
        for (size_t i = 0; i < nv; ++i) b[i] = entry(rng);
        for (size_t i = 0; i < nv; ++i)
            ap[i] = std::uniform_int_distribution<int>(0, a[i] + b[i])(rng);
        DimVector alpha(a), beta(b), alphap(ap);
        DimVector betap = alpha + beta - alphap;
        ++result.instances;
        ShiftConstants sc = shift_constants(quiver, alpha, beta, alphap, betap);
        for (const auto& pq : sc.per_quadruple) {
            ++result.quadruples;
            long long rhs = pq.N - symmetric_euler_form(quiver, pq.lambda.a2, pq.lambda.b1);
            if (sc.M - 2 * pq.K != rhs) result.all_ok = false;
        }
    }
    return result;
}

}  // namespace hallq
