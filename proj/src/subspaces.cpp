#include "hallq/subspaces.hpp"

#include <stdexcept>

namespace hallq {

namespace {

void fill_complement(VertexSubspace& W, int n) {
    W.complement.clear();
    size_t pi = 0;
    for (int c = 0; c < n; ++c) {
        if (pi < W.pivots.size() && W.pivots[pi] == c)
            ++pi;
        else
            W.complement.push_back(c);
    }
}

}  // namespace

std::vector<VertexSubspace> enumerate_vertex_subspaces(const GaloisField& F, int n, int k) {
    if (k < 0 || k > n) throw std::invalid_argument("subspace dimension out of range");
    std::vector<VertexSubspace> out;
    if (k == 0) {
        VertexSubspace W{GfMatrix(0, n), {}, {}};
        fill_complement(W, n);
        out.push_back(std::move(W));
        return out;
    }

    // choose pivot columns, then run an odometer over the free entries
    std::vector<int> pivots(k);
    for (int i = 0; i < k; ++i) pivots[i] = i;
    while (true) {
        // free positions: (i, j) with j > pivots[i] and j not a pivot
        std::vector<std::pair<int, int>> free_pos;
        std::vector<bool> is_pivot(n, false);
        for (int p : pivots) is_pivot[p] = true;
        for (int i = 0; i < k; ++i)
            for (int j = pivots[i] + 1; j < n; ++j)
                if (!is_pivot[j]) free_pos.emplace_back(i, j);

        std::vector<int> vals(free_pos.size(), 0);
        while (true) {
            VertexSubspace W;
            W.basis = GfMatrix(k, n);
            for (int i = 0; i < k; ++i) W.basis.set(i, pivots[i], 1);
            for (size_t t = 0; t < free_pos.size(); ++t)
                W.basis.set(free_pos[t].first, free_pos[t].second, vals[t]);
            W.pivots = pivots;
            fill_complement(W, n);
            out.push_back(std::move(W));

            size_t t = vals.size();
            bool wrapped = true;
            while (t > 0) {
                --t;
                if (vals[t] + 1 < F.q()) {
                    ++vals[t];
                    wrapped = false;
                    break;
                }
                vals[t] = 0;
            }
            if (wrapped) break;
        }

        // next pivot combination in lexicographic order
        int i = k - 1;
        while (i >= 0 && pivots[i] == n - k + i) --i;
        if (i < 0) break;
        ++pivots[i];
        for (int j = i + 1; j < k; ++j) pivots[j] = pivots[j - 1] + 1;
    }
    return out;
}

std::vector<GradedSubspace> enumerate_graded_subspaces(const GaloisField& F,
                                                       const DimVector& dims,
                                                       const DimVector& subdims) {
    if (!subdims.leq(dims))
        throw std::invalid_argument("graded subspace dimension exceeds ambient dimension");
    size_t nv = dims.size();
    std::vector<std::vector<VertexSubspace>> per_vertex(nv);
    for (size_t i = 0; i < nv; ++i)
        per_vertex[i] = enumerate_vertex_subspaces(F, dims[i], subdims[i]);

    std::vector<GradedSubspace> out;
    std::vector<size_t> idx(nv, 0);
    while (true) {
        GradedSubspace W;
        W.at.reserve(nv);
        for (size_t i = 0; i < nv; ++i) W.at.push_back(per_vertex[i][idx[i]]);
        out.push_back(std::move(W));
        size_t i = nv;
        bool wrapped = true;
        while (i > 0) {
            --i;
            if (idx[i] + 1 < per_vertex[i].size()) {
                ++idx[i];
                wrapped = false;
                break;
            }
            idx[i] = 0;
        }
        if (wrapped) break;
    }
    return out;
}

long long q_binomial_count(long long q, int n, int k) {
    if (k < 0 || k > n) return 0;
    // [n k]_q = [n-1 k-1]_q + q^k [n-1 k]_q
    std::vector<std::vector<long long>> t(n + 1, std::vector<long long>(k + 1, 0));
    for (int i = 0; i <= n; ++i) t[i][0] = 1;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= std::min(i, k); ++j) {
            long long qk = 1;
            for (int s = 0; s < j; ++s) qk *= q;
            t[i][j] = t[i - 1][j - 1] + qk * t[i - 1][j];
        }
    return t[n][k];
}

std::vector<int> reduce_mod_subspace(const GaloisField& F, const VertexSubspace& W,
                                     std::vector<int>& vec) {
    std::vector<int> coords(W.dim(), 0);
    for (int i = 0; i < W.dim(); ++i) {
        int c = vec[W.pivots[i]];
        coords[i] = c;
        if (c == 0) continue;
        for (int j = 0; j < W.ambient(); ++j)
            vec[j] = F.sub(vec[j], F.mul(c, W.basis.at(i, j)));
    }
    return coords;
}

bool vector_is_zero(const std::vector<int>& v) {
    for (int x : v)
        if (x) return false;
    return true;
}

}  // namespace hallq
