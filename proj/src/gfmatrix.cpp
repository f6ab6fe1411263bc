#include "hallq/gfmatrix.hpp"

#include <stdexcept>

namespace hallq {

GfMatrix GfMatrix::identity(int n) {
    GfMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
}

GfMatrix GfMatrix::mul(const GaloisField& F, const GfMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix shape mismatch in mul");
    GfMatrix r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            int a = at(i, k);
            if (a == 0) continue;
            for (int j = 0; j < o.cols_; ++j) {
                int b = o.at(k, j);
                if (b == 0) continue;
                r.set(i, j, F.add(r.at(i, j), F.mul(a, b)));
            }
        }
    return r;
}

GfMatrix GfMatrix::inverse(const GaloisField& F) const {
    if (rows_ != cols_) throw std::invalid_argument("inverse of non-square matrix");
    int n = rows_;
    GfMatrix aug(n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug.set(i, j, at(i, j));
        aug.set(i, n + i, 1);
    }
    std::vector<int> pivots;
    rref_in_place(F, aug, &pivots);
    // all pivots must land in the left block
    if (int(pivots.size()) < n || pivots[n - 1] >= n) throw std::domain_error("singular matrix");
    GfMatrix inv(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv.set(i, j, aug.at(i, n + j));
    return inv;
}

int rref_in_place(const GaloisField& F, GfMatrix& m, std::vector<int>* pivots) {
    int r = 0;
    if (pivots) pivots->clear();
    for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
        int pivot_row = -1;
        for (int i = r; i < m.rows(); ++i)
            if (m.at(i, c) != 0) {
                pivot_row = i;
                break;
            }
        if (pivot_row < 0) continue;
        if (pivot_row != r)
            for (int j = 0; j < m.cols(); ++j) {
                int t = m.at(r, j);
                m.set(r, j, m.at(pivot_row, j));
                m.set(pivot_row, j, t);
            }
        int inv = F.inv(m.at(r, c));
        for (int j = 0; j < m.cols(); ++j) m.set(r, j, F.mul(inv, m.at(r, j)));
        for (int i = 0; i < m.rows(); ++i) {
            if (i == r) continue;
            int f = m.at(i, c);
            if (f == 0) continue;
            for (int j = 0; j < m.cols(); ++j)
                m.set(i, j, F.sub(m.at(i, j), F.mul(f, m.at(r, j))));
        }
        if (pivots) pivots->push_back(c);
        ++r;
    }
    return r;
}

int rank(const GaloisField& F, const GfMatrix& m) {
    GfMatrix t = m;
    return rref_in_place(F, t);
}

int nullspace_dim(const GaloisField& F, const GfMatrix& m) { return m.cols() - rank(F, m); }

}  // namespace hallq
