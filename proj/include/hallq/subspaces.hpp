#pragma once

#include <vector>

#include "hallq/gfmatrix.hpp"
#include "hallq/quiver.hpp"

namespace hallq {

/// A subspace of F^n in canonical form: rows of `basis` are a reduced
/// row echelon basis (full row rank), so equal subspaces compare equal.
struct VertexSubspace {
    GfMatrix basis;               // k x n, RREF
    std::vector<int> pivots;      // ascending pivot columns, size k
    std::vector<int> complement;  // ascending non-pivot columns, size n-k

    int dim() const { return basis.rows(); }
    int ambient() const { return basis.cols(); }
};

/// I-graded subspace: one canonical vertex subspace per vertex.
struct GradedSubspace {
    std::vector<VertexSubspace> at;
};

/// All k-dimensional subspaces of F^n, each once, in a deterministic order.
std::vector<VertexSubspace> enumerate_vertex_subspaces(const GaloisField& F, int n, int k);

/// All I-graded subspaces of the graded space with the given dims; one
/// canonical representative each. Throws if subdims exceeds dims anywhere.
std::vector<GradedSubspace> enumerate_graded_subspaces(const GaloisField& F,
                                                       const DimVector& dims,
                                                       const DimVector& subdims);

/// Gaussian binomial [n choose k]_q as an integer count.
long long q_binomial_count(long long q, int n, int k);

/// Reduce `vec` modulo the subspace: returns the coordinates of vec in the
/// RREF basis and leaves vec supported on the complement columns only.
/// vec is in the subspace iff the residual is zero.
std::vector<int> reduce_mod_subspace(const GaloisField& F, const VertexSubspace& W,
                                     std::vector<int>& vec);

bool vector_is_zero(const std::vector<int>& v);

}  // namespace hallq
