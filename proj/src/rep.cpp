#include "hallq/rep.hpp"

#include <stdexcept>

namespace hallq {

RepLayout::RepLayout(const Quiver& quiver, long long field_size, const DimVector& dim)
    : q_(field_size), dim_(dim) {
    if (dim.size() != quiver.num_vertices())
        throw std::invalid_argument("dimension vector does not cover the quiver");
    D_ = 0;
    for (const auto& a : quiver.arrows()) {
        int rows = dim[a.tgt], cols = dim[a.src];
        offsets_.push_back(D_);
        shapes_.emplace_back(rows, cols);
        D_ += rows * cols;
    }
    npoints_ = 1;
    for (int i = 0; i < D_; ++i) {
        if (npoints_ > (1ll << 62) / q_) throw std::overflow_error("representation space too large");
        npoints_ *= q_;
    }
}

void RepLayout::decode(long long code, std::vector<int>& digits) const {
    digits.assign(D_, 0);
    for (int i = D_ - 1; i >= 0; --i) {
        digits[i] = int(code % q_);
        code /= q_;
    }
}

long long RepLayout::encode(const std::vector<int>& digits) const {
    long long code = 0;
    for (int i = 0; i < D_; ++i) code = code * q_ + digits[i];
    return code;
}

Rep RepLayout::to_rep(long long code, const Quiver& quiver) const {
    std::vector<int> digits;
    decode(code, digits);
    Rep x;
    x.dim = dim_;
    x.mats.reserve(quiver.num_arrows());
    for (size_t h = 0; h < quiver.num_arrows(); ++h) {
        auto [rows, cols] = shapes_[h];
        std::vector<int> e(digits.begin() + offsets_[h], digits.begin() + offsets_[h] + rows * cols);
        x.mats.emplace_back(rows, cols, std::move(e));
    }
    return x;
}

long long RepLayout::from_rep(const Rep& x) const {
    if (x.dim != dim_) throw std::invalid_argument("representation dimension mismatch");
    if (x.mats.size() != shapes_.size())
        throw std::invalid_argument("representation arrow count mismatch");
    std::vector<int> digits;
    digits.reserve(D_);
    for (size_t h = 0; h < x.mats.size(); ++h) {
        const auto& m = x.mats[h];
        if (std::make_pair(m.rows(), m.cols()) != shapes_[h])
            throw std::invalid_argument("representation matrix shape mismatch");
        digits.insert(digits.end(), m.entries().begin(), m.entries().end());
    }
    return encode(digits);
}

std::vector<GroupGenerator> group_generators(const GaloisField& F, const DimVector& dim) {
    std::vector<GroupGenerator> gens;
    for (size_t v = 0; v < dim.size(); ++v) {
        int n = dim[v];
        if (n == 0) continue;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                if (i == j) continue;
                GfMatrix g = GfMatrix::identity(n);
                g.set(i, j, 1);
                GfMatrix ginv = GfMatrix::identity(n);
                ginv.set(i, j, F.neg(1));
                gens.push_back({int(v), std::move(g), std::move(ginv)});
            }
        if (F.q() > 2) {
            int w = F.primitive_element();
            GfMatrix g = GfMatrix::identity(n);
            g.set(0, 0, w);
            GfMatrix ginv = GfMatrix::identity(n);
            ginv.set(0, 0, F.inv(w));
            gens.push_back({int(v), std::move(g), std::move(ginv)});
        }
    }
    return gens;
}

Rep apply_generator(const GaloisField& F, const Quiver& quiver, const GroupGenerator& gen,
                    const Rep& x) {
    Rep y = x;
    for (size_t h = 0; h < quiver.arrows().size(); ++h) {
        const auto& a = quiver.arrows()[h];
        if (a.tgt == gen.vertex) y.mats[h] = gen.g.mul(F, y.mats[h]);
        if (a.src == gen.vertex) y.mats[h] = y.mats[h].mul(F, gen.g_inv);
    }
    return y;
}

bool is_stable(const GaloisField& F, const Quiver& quiver, const Rep& x,
               const GradedSubspace& W) {
    for (size_t h = 0; h < quiver.arrows().size(); ++h) {
        const auto& a = quiver.arrows()[h];
        const auto& Ws = W.at[a.src];
        const auto& Wt = W.at[a.tgt];
        for (int i = 0; i < Ws.dim(); ++i) {
            std::vector<int> img(x.mats[h].rows(), 0);
            for (int r = 0; r < x.mats[h].rows(); ++r) {
                int acc = 0;
                for (int c = 0; c < x.mats[h].cols(); ++c)
                    acc = F.add(acc, F.mul(x.mats[h].at(r, c), Ws.basis.at(i, c)));
                img[r] = acc;
            }
            reduce_mod_subspace(F, Wt, img);
            if (!vector_is_zero(img)) return false;
        }
    }
    return true;
}

Rep sub_rep(const GaloisField& F, const Quiver& quiver, const Rep& x, const GradedSubspace& W) {
    Rep y;
    std::vector<int> subdim(W.at.size());
    for (size_t v = 0; v < W.at.size(); ++v) subdim[v] = W.at[v].dim();
    y.dim = DimVector(subdim);
    for (size_t h = 0; h < quiver.arrows().size(); ++h) {
        const auto& a = quiver.arrows()[h];
        const auto& Ws = W.at[a.src];
        const auto& Wt = W.at[a.tgt];
        GfMatrix m(Wt.dim(), Ws.dim());
        for (int i = 0; i < Ws.dim(); ++i) {
            std::vector<int> img(x.mats[h].rows(), 0);
            for (int r = 0; r < x.mats[h].rows(); ++r) {
                int acc = 0;
                for (int c = 0; c < x.mats[h].cols(); ++c)
                    acc = F.add(acc, F.mul(x.mats[h].at(r, c), Ws.basis.at(i, c)));
                img[r] = acc;
            }
            auto coords = reduce_mod_subspace(F, Wt, img);
            if (!vector_is_zero(img))
                throw std::logic_error("sub_rep called on an unstable subspace");
            for (int r = 0; r < Wt.dim(); ++r) m.set(r, i, coords[r]);
        }
        y.mats.push_back(std::move(m));
    }
    return y;
}

Rep quotient_rep(const GaloisField& F, const Quiver& quiver, const Rep& x,
                 const GradedSubspace& W) {
    Rep y;
    std::vector<int> qdim(W.at.size());
    for (size_t v = 0; v < W.at.size(); ++v) qdim[v] = W.at[v].ambient() - W.at[v].dim();
    y.dim = DimVector(qdim);
    for (size_t h = 0; h < quiver.arrows().size(); ++h) {
        const auto& a = quiver.arrows()[h];
        const auto& Ws = W.at[a.src];
        const auto& Wt = W.at[a.tgt];
        int qs = int(Ws.complement.size()), qt = int(Wt.complement.size());
        GfMatrix m(qt, qs);
        for (int i = 0; i < qs; ++i) {
            int c0 = Ws.complement[i];
            std::vector<int> img(x.mats[h].rows(), 0);
            for (int r = 0; r < x.mats[h].rows(); ++r) img[r] = x.mats[h].at(r, c0);
            reduce_mod_subspace(F, Wt, img);
            for (int r = 0; r < qt; ++r) m.set(r, i, img[Wt.complement[r]]);
        }
        y.mats.push_back(std::move(m));
    }
    return y;
}

}  // namespace hallq
