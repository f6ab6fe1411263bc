#include "hallq/iso_table.hpp"
#include <algorithm>

#include <atomic>
#include <stdexcept>

#include <json.hpp>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace hallq {

long long group_order(const DimVector& dim, long long q) {
    long long total = 1;
    for (size_t v = 0; v < dim.size(); ++v) {
        int n = dim[v];
        // |GL_n(F_q)| = prod_{k<n} (q^n - q^k)
        long long qn = 1;
        for (int i = 0; i < n; ++i) {
            if (qn > (1ll << 62) / q) throw std::overflow_error("group order overflow");
            qn *= q;
        }
        long long qk = 1;
        for (int k = 0; k < n; ++k) {
            long long factor = qn - qk;
            if (factor != 0 && total > (1ll << 62) / factor)
                throw std::overflow_error("group order overflow");
            total *= factor;
            qk *= q;
        }
    }
    return total;
}

void IsoClassTable::init_meta(QuiverPtr quiver, FieldPtr field, const DimVector& dim) {
    quiver_ = std::move(quiver);
    field_ = std::move(field);
    dim_ = dim;
    layout_ = std::make_unique<RepLayout>(*quiver_, field_->q(), dim_);
    group_order_ = hallq::group_order(dim_, field_->q());
}

void IsoClassTable::index_reps() {
    rep_to_id_.clear();
    for (size_t i = 0; i < entries_.size(); ++i) rep_to_id_[entries_[i].rep_code] = int(i);
}

namespace {

// Generator moves expressed directly on codes.
struct CodeMover {
    const GaloisField& F;
    const Quiver& quiver;
    const RepLayout& layout;
    std::vector<GroupGenerator> gens;

    CodeMover(const GaloisField& f, const Quiver& q, const RepLayout& l, const DimVector& dim)
        : F(f), quiver(q), layout(l), gens(group_generators(f, dim)) {}

    long long apply(size_t gen_index, long long code, std::vector<int>& scratch) const {
        layout.decode(code, scratch);
        const GroupGenerator& gen = gens[gen_index];
        for (size_t h = 0; h < quiver.arrows().size(); ++h) {
            const auto& a = quiver.arrows()[h];
            auto [rows, cols] = layout.arrow_shape(h);
            int off = layout.arrow_offset(h);
            if (a.tgt == gen.vertex) {
                // left-multiply by g
                std::vector<int> out(size_t(rows) * cols, 0);
                for (int i = 0; i < rows; ++i)
                    for (int k = 0; k < rows; ++k) {
                        int gik = gen.g.at(i, k);
                        if (gik == 0) continue;
                        for (int j = 0; j < cols; ++j)
                            out[size_t(i) * cols + j] =
                                F.add(out[size_t(i) * cols + j],
                                      F.mul(gik, scratch[off + size_t(k) * cols + j]));
                    }
                std::copy(out.begin(), out.end(), scratch.begin() + off);
            }
            if (a.src == gen.vertex) {
                // right-multiply by g^{-1}
                std::vector<int> out(size_t(rows) * cols, 0);
                for (int i = 0; i < rows; ++i)
                    for (int k = 0; k < cols; ++k) {
                        int xik = scratch[off + size_t(i) * cols + k];
                        if (xik == 0) continue;
                        for (int j = 0; j < cols; ++j)
                            out[size_t(i) * cols + j] = F.add(
                                out[size_t(i) * cols + j], F.mul(xik, gen.g_inv.at(k, j)));
                    }
                std::copy(out.begin(), out.end(), scratch.begin() + off);
            }
        }
        return layout.encode(scratch);
    }
};

void check_budget(const RepLayout& layout, long long budget) {
    if (layout.num_points() > budget)
        throw std::runtime_error("enumeration budget exceeded: " +
                                 std::to_string(layout.num_points()) + " points > budget " +
                                 std::to_string(budget));
}

}  // namespace

std::shared_ptr<const IsoClassTable> IsoClassTable::build_serial(QuiverPtr quiver, FieldPtr field,
                                                                 const DimVector& dim,
                                                                 long long budget) {
    auto table = std::shared_ptr<IsoClassTable>(new IsoClassTable());
    table->init_meta(std::move(quiver), std::move(field), dim);
    check_budget(*table->layout_, budget);

    const long long N = table->layout_->num_points();
    CodeMover mover(*table->field_, *table->quiver_, *table->layout_, dim);
    table->class_of_.assign(N, -1);
    std::vector<int> scratch;

    std::vector<long long> queue;
    for (long long seed = 0; seed < N; ++seed) {
        if (table->class_of_[seed] >= 0) continue;
        int id = int(table->entries_.size());
        queue.clear();
        queue.push_back(seed);
        table->class_of_[seed] = id;
        long long orbit = 0;
        while (!queue.empty()) {
            long long x = queue.back();
            queue.pop_back();
            ++orbit;
            for (size_t g = 0; g < mover.gens.size(); ++g) {
                long long y = mover.apply(g, x, scratch);
                if (table->class_of_[y] < 0) {
                    table->class_of_[y] = id;
                    queue.push_back(y);
                }
            }
        }
        if (table->group_order_ % orbit != 0)
            throw std::logic_error("orbit size does not divide the group order");
        table->entries_.push_back({seed, orbit, table->group_order_ / orbit});
    }
    table->index_reps();
    return table;
}

std::shared_ptr<const IsoClassTable> IsoClassTable::build_parallel(QuiverPtr quiver, FieldPtr field,
                                                                   const DimVector& dim,
                                                                   long long budget) {
    auto table = std::shared_ptr<IsoClassTable>(new IsoClassTable());
    table->init_meta(std::move(quiver), std::move(field), dim);
    check_budget(*table->layout_, budget);

    const long long N = table->layout_->num_points();
    CodeMover mover(*table->field_, *table->quiver_, *table->layout_, dim);

    // Lock-free union-find; roots are the componentwise minima, so the
    // final partition (and everything derived from it) is independent of
    // the thread schedule.
    std::vector<std::atomic<int64_t>> parent(N);
#pragma omp parallel for schedule(static)
    for (long long i = 0; i < N; ++i) parent[i].store(i, std::memory_order_relaxed);

    auto find = [&](int64_t x) {
        while (true) {
            int64_t p = parent[x].load(std::memory_order_relaxed);
            if (p == x) return x;
            int64_t gp = parent[p].load(std::memory_order_relaxed);
            parent[x].compare_exchange_weak(p, gp, std::memory_order_relaxed);
            x = gp;
        }
    };
    auto unite = [&](int64_t a, int64_t b) {
        while (true) {
            int64_t ra = find(a), rb = find(b);
            if (ra == rb) return;
            if (ra > rb) std::swap(ra, rb);
            int64_t expected = rb;
            if (parent[rb].compare_exchange_strong(expected, ra, std::memory_order_relaxed)) return;
        }
    };

#pragma omp parallel
    {
        std::vector<int> scratch;
#pragma omp for schedule(dynamic, 1024)
        for (long long x = 0; x < N; ++x)
            for (size_t g = 0; g < mover.gens.size(); ++g) unite(x, mover.apply(g, x, scratch));
    }

    // ascending scan: roots appear in canonical order
    table->class_of_.assign(N, -1);
    for (long long x = 0; x < N; ++x)
        if (find(x) == x) {
            table->class_of_[x] = int(table->entries_.size());
            table->entries_.push_back({x, 0, 0});
        }
    std::vector<std::atomic<long long>> counts(table->entries_.size());
    for (auto& c : counts) c.store(0, std::memory_order_relaxed);
#pragma omp parallel for schedule(static)
    for (long long x = 0; x < N; ++x) {
        int id = table->class_of_[find(x)];
        table->class_of_[x] = id;
        counts[id].fetch_add(1, std::memory_order_relaxed);
    }
    for (size_t i = 0; i < table->entries_.size(); ++i) {
        long long orbit = counts[i].load();
        if (table->group_order_ % orbit != 0)
            throw std::logic_error("orbit size does not divide the group order");
        table->entries_[i].orbit_size = orbit;
        table->entries_[i].aut_order = table->group_order_ / orbit;
    }
    table->index_reps();
    return table;
}

std::shared_ptr<const IsoClassTable> IsoClassTable::build(QuiverPtr quiver, FieldPtr field,
                                                          const DimVector& dim, long long budget,
                                                          bool parallel) {
    return parallel ? build_parallel(std::move(quiver), std::move(field), dim, budget)
                    : build_serial(std::move(quiver), std::move(field), dim, budget);
}

int IsoClassTable::classify(const Rep& x) const {
    if (x.dim != dim_) throw std::invalid_argument("classify: dimension vector mismatch");
    for (size_t h = 0; h < quiver_->num_arrows(); ++h)
        for (int e : x.mats[h].entries())
            if (e < 0 || e >= field_->q())
                throw std::invalid_argument("classify: entry outside the field");
    return classify_code(layout_->from_rep(x));
}

int IsoClassTable::classify_code(long long code) const {
    if (code < 0 || code >= layout_->num_points())
        throw std::invalid_argument("classify: code out of range");
    if (!class_of_.empty()) return class_of_[code];

    // loaded table: close the single orbit of the query and look up its
    // minimal element among the stored canonical representatives
    CodeMover mover(*field_, *quiver_, *layout_, dim_);
    std::vector<int> scratch;
    std::unordered_map<long long, bool> seen;
    std::vector<long long> queue{code};
    seen[code] = true;
    long long min_code = code;
    while (!queue.empty()) {
        long long x = queue.back();
        queue.pop_back();
        if (x < min_code) min_code = x;
        for (size_t g = 0; g < mover.gens.size(); ++g) {
            long long y = mover.apply(g, x, scratch);
            if (!seen.count(y)) {
                seen[y] = true;
                queue.push_back(y);
            }
        }
    }
    auto it = rep_to_id_.find(min_code);
    if (it == rep_to_id_.end())
        throw std::runtime_error("orbit representative missing from table");
    return it->second;
}

std::vector<long long> IsoClassTable::orbit_codes(int id) const {
    CodeMover mover(*field_, *quiver_, *layout_, dim_);
    std::vector<int> scratch;
    std::unordered_map<long long, bool> seen;
    std::vector<long long> queue{entries_.at(id).rep_code};
    seen[queue[0]] = true;
    size_t head = 0;
    while (head < queue.size()) {
        long long x = queue[head++];
        for (size_t g = 0; g < mover.gens.size(); ++g) {
            long long y = mover.apply(g, x, scratch);
            if (!seen.count(y)) {
                seen[y] = true;
                queue.push_back(y);
            }
        }
    }
    std::sort(queue.begin(), queue.end());
    return queue;
}

std::string IsoClassTable::to_json() const {
    nlohmann::ordered_json j;
    j["format"] = 1;
    j["quiver"] = nlohmann::ordered_json::parse(quiver_->to_json());
    j["q"] = field_->q();
    j["dim"] = dim_.counts();
    j["classes"] = nlohmann::ordered_json::array();
    for (size_t i = 0; i < entries_.size(); ++i) {
        Rep r = representative(int(i));
        nlohmann::ordered_json rep = nlohmann::ordered_json::array();
        for (const auto& m : r.mats) rep.push_back(m.entries());
        j["classes"].push_back({{"id", i},
                                {"rep", rep},
                                {"orbit", entries_[i].orbit_size},
                                {"aut", entries_[i].aut_order}});
    }
    return j.dump();
}

std::shared_ptr<const IsoClassTable> IsoClassTable::from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const std::exception& e) {
        throw std::runtime_error(std::string("table parse failure: ") + e.what());
    }
    if (!j.contains("format") || j["format"].get<int>() != 1)
        throw std::runtime_error("table format mismatch");

    auto quiver = Quiver::from_json(j.at("quiver").dump());
    auto field = GaloisField::make(j.at("q").get<long long>());
    DimVector dim(j.at("dim").get<std::vector<int>>());

    auto table = std::shared_ptr<IsoClassTable>(new IsoClassTable());
    table->init_meta(quiver, field, dim);

    long long orbit_sum = 0;
    long long prev_code = -1;
    for (const auto& c : j.at("classes")) {
        Rep x;
        x.dim = dim;
        size_t h = 0;
        for (const auto& flat : c.at("rep")) {
            if (h >= quiver->num_arrows()) throw std::runtime_error("table rep arity mismatch");
            auto [rows, cols] = table->layout_->arrow_shape(h);
            std::vector<int> entries = flat.get<std::vector<int>>();
            if (int(entries.size()) != rows * cols)
                throw std::runtime_error("table rep shape mismatch");
            for (int e : entries)
                if (e < 0 || e >= field->q()) throw std::runtime_error("table rep entry out of field");
            x.mats.emplace_back(rows, cols, std::move(entries));
            ++h;
        }
        if (h != quiver->num_arrows()) throw std::runtime_error("table rep arity mismatch");
        Entry entry;
        entry.rep_code = table->layout_->from_rep(x);
        entry.orbit_size = c.at("orbit").get<long long>();
        entry.aut_order = c.at("aut").get<long long>();
        if (entry.rep_code <= prev_code)
            throw std::runtime_error("table representatives out of canonical order");
        prev_code = entry.rep_code;
        if (entry.orbit_size <= 0 || entry.aut_order <= 0)
            throw std::runtime_error("table entry with nonpositive count");
        if ((__int128)entry.aut_order * entry.orbit_size != (__int128)table->group_order_)
            throw std::runtime_error("orbit-stabilizer invariant violated in table");
        orbit_sum += entry.orbit_size;
        table->entries_.push_back(entry);
    }
    if (orbit_sum != table->layout_->num_points())
        throw std::runtime_error("orbit sizes do not cover the representation space");
    table->index_reps();
    return table;
}

int hom_dim(const GaloisField& F, const Quiver& quiver, const Rep& M, const Rep& N) {
    // unknowns: f_v of shape n_v x m_v, flattened row-major, vertices in order
    size_t nv = quiver.num_vertices();
    std::vector<int> offset(nv + 1, 0);
    for (size_t v = 0; v < nv; ++v) offset[v + 1] = offset[v] + N.dim[v] * M.dim[v];
    int unknowns = offset[nv];

    int rows = 0;
    for (const auto& a : quiver.arrows()) rows += N.dim[a.tgt] * M.dim[a.src];

    GfMatrix sys(rows, unknowns);
    int row = 0;
    for (size_t h = 0; h < quiver.arrows().size(); ++h) {
        const auto& ar = quiver.arrows()[h];
        int msrc = M.dim[ar.src], mtgt = M.dim[ar.tgt];
        int ntgt = N.dim[ar.tgt], nsrc = N.dim[ar.src];
        const GfMatrix& xM = M.mats[h];
        const GfMatrix& xN = N.mats[h];
        for (int a = 0; a < ntgt; ++a)
            for (int b = 0; b < msrc; ++b) {
                // (f_t xM)_ab - (xN f_s)_ab = 0
                for (int c = 0; c < mtgt; ++c) {
                    int col = offset[ar.tgt] + a * M.dim[ar.tgt] + c;
                    sys.set(row, col, F.add(sys.at(row, col), xM.at(c, b)));
                }
                for (int d = 0; d < nsrc; ++d) {
                    int col = offset[ar.src] + d * M.dim[ar.src] + b;
                    sys.set(row, col, F.sub(sys.at(row, col), xN.at(a, d)));
                }
                ++row;
            }
    }
    return nullspace_dim(F, sys);
}

int hom_dim_alt(const GaloisField& F, const Quiver& quiver, const Rep& M, const Rep& N) {
    // same intertwiner system, unknowns flattened column-major and
    // equations enumerated entries-first, arrows innermost
    size_t nv = quiver.num_vertices();
    std::vector<int> offset(nv + 1, 0);
    for (size_t v = 0; v < nv; ++v) offset[v + 1] = offset[v] + N.dim[v] * M.dim[v];
    int unknowns = offset[nv];

    struct Eq {
        size_t h;
        int a, b;
    };
    std::vector<Eq> eqs;
    int max_t = 0, max_s = 0;
    for (const auto& a : quiver.arrows()) {
        max_t = std::max(max_t, N.dim[a.tgt]);
        max_s = std::max(max_s, M.dim[a.src]);
    }
    for (int a = 0; a < max_t; ++a)
        for (int b = 0; b < max_s; ++b)
            for (size_t h = 0; h < quiver.arrows().size(); ++h) {
                const auto& ar = quiver.arrows()[h];
                if (a < N.dim[ar.tgt] && b < M.dim[ar.src]) eqs.push_back({h, a, b});
            }

    GfMatrix sys(int(eqs.size()), unknowns);
    for (size_t row = 0; row < eqs.size(); ++row) {
        const auto& [h, a, b] = eqs[row];
        const auto& ar = quiver.arrows()[h];
        const GfMatrix& xM = M.mats[h];
        const GfMatrix& xN = N.mats[h];
        for (int c = 0; c < M.dim[ar.tgt]; ++c) {
            int col = offset[ar.tgt] + c * N.dim[ar.tgt] + a;  // column-major flattening
            sys.set(int(row), col, F.add(sys.at(int(row), col), xM.at(c, b)));
        }
        for (int d = 0; d < N.dim[ar.src]; ++d) {
            int col = offset[ar.src] + b * N.dim[ar.src] + d;
            sys.set(int(row), col, F.sub(sys.at(int(row), col), xN.at(a, d)));
        }
    }
    return nullspace_dim(F, sys);
}

int ext1_dim(const GaloisField& F, const Quiver& quiver, const Rep& M, const Rep& N) {
    long long e = hom_dim(F, quiver, M, N) - euler_form(quiver, M.dim, N.dim);
    if (e < 0) throw std::logic_error("negative Ext dimension");
    return int(e);
}

std::vector<std::vector<long long>> stable_subspace_counts(const IsoClassTable& table_gamma,
                                                           const Rep& x,
                                                           const IsoClassTable& table_alpha,
                                                           const IsoClassTable& table_beta) {
    const GaloisField& F = *table_gamma.field();
    const Quiver& quiver = *table_gamma.quiver();
    std::vector<std::vector<long long>> counts(
        table_alpha.num_classes(), std::vector<long long>(table_beta.num_classes(), 0));
    for (const auto& W :
         enumerate_graded_subspaces(F, table_gamma.dim(), table_beta.dim())) {
        if (!is_stable(F, quiver, x, W)) continue;
        int sub = table_beta.classify(sub_rep(F, quiver, x, W));
        int quot = table_alpha.classify(quotient_rep(F, quiver, x, W));
        ++counts[quot][sub];
    }
    return counts;
}

long long hall_number(const IsoClassTable& table_gamma, int gamma, const IsoClassTable& table_alpha,
                      int alpha, const IsoClassTable& table_beta, int beta) {
    if (table_alpha.dim() + table_beta.dim() != table_gamma.dim())
        throw std::invalid_argument("hall_number: dimension vectors do not add up");
    const GaloisField& F = *table_gamma.field();
    const Quiver& quiver = *table_gamma.quiver();
    Rep x = table_gamma.representative(gamma);
    long long count = 0;
    for (const auto& W :
         enumerate_graded_subspaces(F, table_gamma.dim(), table_beta.dim())) {
        if (!is_stable(F, quiver, x, W)) continue;
        if (table_beta.classify(sub_rep(F, quiver, x, W)) != beta) continue;
        if (table_alpha.classify(quotient_rep(F, quiver, x, W)) != alpha) continue;
        ++count;
    }
    return count;
}

}  // namespace hallq
