#pragma once

#include <vector>

#include "hallq/gf.hpp"

namespace hallq {

/// Dense matrix over GF(q), row-major, entries as field-element integers.
class GfMatrix {
public:
    GfMatrix() : rows_(0), cols_(0) {}
    GfMatrix(int rows, int cols) : rows_(rows), cols_(cols), e_(size_t(rows) * cols, 0) {}
    GfMatrix(int rows, int cols, std::vector<int> entries)
        : rows_(rows), cols_(cols), e_(std::move(entries)) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    int at(int r, int c) const { return e_[size_t(r) * cols_ + c]; }
    void set(int r, int c, int v) { e_[size_t(r) * cols_ + c] = v; }
    const std::vector<int>& entries() const { return e_; }

    bool operator==(const GfMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
    }
    bool operator!=(const GfMatrix& o) const { return !(*this == o); }

    static GfMatrix identity(int n);
    GfMatrix mul(const GaloisField& F, const GfMatrix& o) const;
    GfMatrix inverse(const GaloisField& F) const;  // throws if singular

private:
    int rows_, cols_;
    std::vector<int> e_;
};

/// In-place reduced row echelon form; returns the rank.
int rref_in_place(const GaloisField& F, GfMatrix& m, std::vector<int>* pivots = nullptr);

int rank(const GaloisField& F, const GfMatrix& m);

/// cols - rank, the dimension of the right kernel.
int nullspace_dim(const GaloisField& F, const GfMatrix& m);

}  // namespace hallq
