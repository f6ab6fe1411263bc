#pragma once

#include <vector>

#include "hallq/gfmatrix.hpp"
#include "hallq/quiver.hpp"
#include "hallq/subspaces.hpp"

namespace hallq {

/// A point of the representation space: one matrix per arrow, with the
/// matrix of arrow h of shape dim[t(h)] x dim[s(h)].
struct Rep {
    DimVector dim;
    std::vector<GfMatrix> mats;
};

/// Fixed encoding of representation points as integers in [0, q^D), where
/// D is the total entry count. Entries are taken arrow by arrow in
/// row-major order with the first entry most significant, so the numeric
/// order of codes is the lexicographic order of entry tuples.
class RepLayout {
public:
    RepLayout(const Quiver& q, long long field_size, const DimVector& dim);

    int digit_count() const { return D_; }
    long long num_points() const { return npoints_; }
    long long q() const { return q_; }
    const DimVector& dim() const { return dim_; }

    void decode(long long code, std::vector<int>& digits) const;
    long long encode(const std::vector<int>& digits) const;

    Rep to_rep(long long code, const Quiver& quiver) const;
    long long from_rep(const Rep& x) const;

    int arrow_offset(size_t h) const { return offsets_[h]; }
    std::pair<int, int> arrow_shape(size_t h) const { return shapes_[h]; }

private:
    long long q_;
    DimVector dim_;
    int D_;
    long long npoints_;  // q^D, overflow-checked
    std::vector<int> offsets_;
    std::vector<std::pair<int, int>> shapes_;
};

/// One generator of the product of vertex general linear groups: a matrix
/// supported at a single vertex, acting by g.x = (g_{t} x_h g_{s}^{-1})_h.
struct GroupGenerator {
    int vertex;
    GfMatrix g;
    GfMatrix g_inv;
};

/// Transvections with unit off-diagonal entry plus one primitive-scalar
/// diagonal per vertex; together they generate the full group.
std::vector<GroupGenerator> group_generators(const GaloisField& F, const DimVector& dim);

/// g.x for a single generator.
Rep apply_generator(const GaloisField& F, const Quiver& quiver, const GroupGenerator& gen,
                    const Rep& x);

/// x_h(W at source) contained in (W at target) for every arrow.
bool is_stable(const GaloisField& F, const Quiver& quiver, const Rep& x, const GradedSubspace& W);

/// The restriction of x to the stable subspace W, written in W's
/// echelon bases. Precondition: is_stable.
Rep sub_rep(const GaloisField& F, const Quiver& quiver, const Rep& x, const GradedSubspace& W);

/// The induced map on the quotient by W, written in the basis of unit
/// vectors at the non-pivot columns (lowest index first).
Rep quotient_rep(const GaloisField& F, const Quiver& quiver, const Rep& x,
                 const GradedSubspace& W);

}  // namespace hallq
