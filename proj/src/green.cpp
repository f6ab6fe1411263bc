#include "hallq/green.hpp"

#include <atomic>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace hallq {

namespace {

void check_frame(const ClassKey& a, const ClassKey& b, const ClassKey& ap, const ClassKey& bp) {
    if (a.dim + b.dim != ap.dim + bp.dim)
        throw std::invalid_argument("green: alpha+beta != alpha'+beta'");
}

Rational require_nonnegative(Rational r, const char* side) {
    if (r.is_negative()) throw std::logic_error(std::string("negative ") + side + " in green sum");
    return r;
}

}  // namespace

Rational green_lhs(const HallContext& ctx, const ClassKey& a, const ClassKey& b,
                   const ClassKey& ap, const ClassKey& bp) {
    check_frame(a, b, ap, bp);
    DimVector gamma = a.dim + b.dim;
    auto tg = ctx.table(gamma);
    Rational sum(0);
    for (size_t g = 0; g < tg->num_classes(); ++g) {
        ClassKey kg{gamma, int(g)};
        long long g1 = hall_number_memo(ctx, kg, a, b);
        if (g1 == 0) continue;
        long long g2 = hall_number_memo(ctx, kg, ap, bp);
        if (g2 == 0) continue;
        sum += Rational(g1) * Rational(g2) / Rational(tg->aut(int(g)));
    }
    Rational aa(ctx.table(a.dim)->aut(a.id)), ab(ctx.table(b.dim)->aut(b.id));
    Rational aap(ctx.table(ap.dim)->aut(ap.id)), abp(ctx.table(bp.dim)->aut(bp.id));
    return require_nonnegative(aa * ab * aap * abp * sum, "lhs");
}

Rational green_rhs(const HallContext& ctx, const ClassKey& a, const ClassKey& b,
                   const ClassKey& ap, const ClassKey& bp) {
    check_frame(a, b, ap, bp);
    const Quiver& quiver = *ctx.quiver();
    Rational sum(0);
    for (const auto& lam : enumerate_quadruples(a.dim, b.dim, ap.dim, bp.dim)) {
        auto t1 = ctx.table(lam.a1);
        auto t2 = ctx.table(lam.a2);
        auto t3 = ctx.table(lam.b1);
        auto t4 = ctx.table(lam.b2);
        // the four filtration-count matrices are fixed per quadruple
        const auto& g_a = ctx.subspace_buckets(a.dim, a.id, lam.a2);    // [i1][i2]
        const auto& g_ap = ctx.subspace_buckets(ap.dim, ap.id, lam.b1); // [i1][i3]
        const auto& g_b = ctx.subspace_buckets(b.dim, b.id, lam.b2);    // [i3][i4]
        const auto& g_bp = ctx.subspace_buckets(bp.dim, bp.id, lam.b2); // [i2][i4]
        long long euler_14 = euler_form(quiver, lam.a1, lam.b2);
        std::vector<std::vector<int>> hom_cache(t1->num_classes(),
                                                std::vector<int>(t4->num_classes(), -1));
        for (size_t i1 = 0; i1 < t1->num_classes(); ++i1) {
            for (size_t i2 = 0; i2 < t2->num_classes(); ++i2) {
                long long ga = g_a[i1][i2];
                if (ga == 0) continue;
                for (size_t i3 = 0; i3 < t3->num_classes(); ++i3) {
                    long long gap = g_ap[i1][i3];
                    if (gap == 0) continue;
                    for (size_t i4 = 0; i4 < t4->num_classes(); ++i4) {
                        long long gb = g_b[i3][i4];
                        if (gb == 0) continue;
                        long long gbp = g_bp[i2][i4];
                        if (gbp == 0) continue;
                        // |Ext^1|/|Hom| = q^{ext - hom}; ext = hom - <a1, b2>
                        int& hom = hom_cache[i1][i4];
                        if (hom < 0) hom = ctx.hom_dim_classes(lam.a1, int(i1), lam.b2, int(i4));
                        long long ext = hom - euler_14;
                        if (ext < 0) throw std::logic_error("negative Ext dimension");
                        Rational weight = Rational::int_pow(ctx.q(), ext - hom);
                        Rational auts = Rational(t1->aut(int(i1))) * Rational(t2->aut(int(i2))) *
                                        Rational(t3->aut(int(i3))) * Rational(t4->aut(int(i4)));
                        sum += weight * Rational(ga) * Rational(gb) * Rational(gap) *
                               Rational(gbp) * auts;
                    }
                }
            }
        }
    }
    return require_nonnegative(sum, "rhs");
}

GreenReport sweep_green(const HallContext& ctx, int bound, bool parallel) {
    GreenReport report;
    report.q = ctx.q();
    report.bound = bound;

    // collect the instance list first, then verify (possibly in parallel)
    size_t nv = ctx.quiver()->num_vertices();
    std::vector<GreenInstance> instances;
    std::vector<DimVector> grades;
    {
        std::vector<int> g(nv, 0);
        while (true) {
            DimVector dg(g);
            if (dg.total() <= bound) grades.push_back(dg);
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
    }
    for (const auto& gamma : grades) {
        // splittings alpha + beta = gamma, then primed splittings
        std::vector<DimVector> splits;
        std::vector<int> s(nv, 0);
        while (true) {
            bool ok = true;
            for (size_t i = 0; i < nv; ++i)
                if (s[i] > gamma[i]) ok = false;
            if (ok) splits.push_back(DimVector(s));
            size_t i = nv;
            bool wrapped = true;
            while (i > 0) {
                --i;
                if (s[i] < gamma[i]) {
                    ++s[i];
                    wrapped = false;
                    break;
                }
                s[i] = 0;
            }
            if (wrapped) break;
        }
        for (const auto& da : splits) {
            DimVector db = gamma - da;
            auto ta = ctx.table(da);
            auto tb = ctx.table(db);
            for (const auto& dap : splits) {
                DimVector dbp = gamma - dap;
                auto tap = ctx.table(dap);
                auto tbp = ctx.table(dbp);
                for (size_t ia = 0; ia < ta->num_classes(); ++ia)
                    for (size_t ib = 0; ib < tb->num_classes(); ++ib)
                        for (size_t iap = 0; iap < tap->num_classes(); ++iap)
                            for (size_t ibp = 0; ibp < tbp->num_classes(); ++ibp) {
                                GreenInstance inst;
                                inst.a = {da, int(ia)};
                                inst.b = {db, int(ib)};
                                inst.ap = {dap, int(iap)};
                                inst.bp = {dbp, int(ibp)};
                                instances.push_back(std::move(inst));
                            }
            }
        }
    }

    // prime every memo the instances can touch, so the parallel phase is
    // read-only: all bucket matrices (sigma, class, sub-dim <= sigma) and
    // all hom pairs within the bound
    {
        std::vector<std::pair<DimVector, TablePtr>> graded;
        for (const auto& d : grades) graded.emplace_back(d, ctx.table(d));
        for (const auto& [d, t] : graded)
            for (const auto& [e, te] : graded) {
                if (!e.leq(d)) continue;
                for (size_t c = 0; c < t->num_classes(); ++c)
                    ctx.subspace_buckets(d, int(c), e);
            }
        for (const auto& [d1, t1] : graded)
            for (const auto& [d2, t2] : graded) {
                if (d1.total() + d2.total() > bound) continue;
                for (size_t c1 = 0; c1 < t1->num_classes(); ++c1)
                    for (size_t c2 = 0; c2 < t2->num_classes(); ++c2)
                        ctx.hom_dim_classes(d1, int(c1), d2, int(c2));
            }
    }

    {
        HallContext::FreezeGuard frozen(ctx);
        std::atomic<bool> failed{false};
        std::exception_ptr error;
#pragma omp parallel for schedule(dynamic, 16) if (parallel)
        for (long long i = 0; i < (long long)instances.size(); ++i) {
            if (failed.load(std::memory_order_relaxed)) continue;
            try {
                auto& inst = instances[i];
                inst.lhs = green_lhs(ctx, inst.a, inst.b, inst.ap, inst.bp);
                inst.rhs = green_rhs(ctx, inst.a, inst.b, inst.ap, inst.bp);
                inst.equal = inst.lhs == inst.rhs;
            } catch (...) {
#pragma omp critical(green_sweep_error)
                {
                    if (!failed.exchange(true)) error = std::current_exception();
                }
            }
        }
        if (failed.load()) std::rethrow_exception(error);
    }

    report.instances = std::move(instances);
    report.all_equal = true;
    for (const auto& inst : report.instances)
        if (!inst.equal) report.all_equal = false;
    return report;
}

std::string GreenReport::to_tsv() const {
    std::ostringstream os;
    os << "alpha\tbeta\talphap\tbetap\tlhs\trhs\tequal\n";
    for (const auto& inst : instances)
        os << inst.a.str() << '\t' << inst.b.str() << '\t' << inst.ap.str() << '\t'
           << inst.bp.str() << '\t' << inst.lhs.str() << '\t' << inst.rhs.str() << '\t'
           << (inst.equal ? "1" : "0") << '\n';
    return os.str();
}

std::string GreenReport::to_json() const {
    nlohmann::ordered_json j;
    j["format"] = 1;
    j["quiver"] = quiver_name;
    j["q"] = q;
    j["bound"] = bound;
    j["all_equal"] = all_equal;
    j["instances"] = nlohmann::ordered_json::array();
    for (const auto& inst : instances)
        j["instances"].push_back({{"alpha", inst.a.str()},
                                  {"beta", inst.b.str()},
                                  {"alphap", inst.ap.str()},
                                  {"betap", inst.bp.str()},
                                  {"lhs", inst.lhs.str()},
                                  {"rhs", inst.rhs.str()},
                                  {"equal", inst.equal}});
    return j.dump(2);
}

TensorElement bialgebra_defect(const HallContext& ctx, const ClassKey& x, const ClassKey& y,
                               int sign) {
    HallElement ux = hall_basis(ctx, x), uy = hall_basis(ctx, y);
    TensorElement lhs = hall_comultiply(ctx, hall_multiply(ctx, ux, uy));
    TensorElement rhs = twisted_tensor_multiply(ctx, hall_comultiply(ctx, ux),
                                                hall_comultiply(ctx, uy), sign);
    return lhs - rhs;
}

TwistSignSweep determine_twist_sign(const HallContext& ctx, int bound) {
    TwistSignSweep result;
    size_t nv = ctx.quiver()->num_vertices();
    std::vector<ClassKey> basis;
    std::vector<int> g(nv, 0);
    while (true) {
        DimVector d(g);
        if (d.total() <= bound) {
            auto t = ctx.table(d);
            for (size_t i = 0; i < t->num_classes(); ++i) basis.push_back({d, int(i)});
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

    bool plus_ok = true, minus_ok = true;
    for (const auto& x : basis)
        for (const auto& y : basis) {
            if ((x.dim + y.dim).total() > bound) continue;
            ++result.pairs_checked;
            if (plus_ok && !bialgebra_defect(ctx, x, y, +1).is_zero()) plus_ok = false;
            if (minus_ok && !bialgebra_defect(ctx, x, y, -1).is_zero()) minus_ok = false;
            if (!plus_ok && !minus_ok) break;
        }
    if (plus_ok) result.surviving_signs.push_back(+1);
    if (minus_ok) result.surviving_signs.push_back(-1);
    return result;
}

}  // namespace hallq
