#pragma once

#include "hallq/hall.hpp"

namespace hallq {

/// a_a a_b a_a' a_b' sum_g a_g^{-1} g^g_{ab} g^g_{a'b'} over all classes g
/// of the common grade. Exact, and nonnegative by construction.
Rational green_lhs(const HallContext& ctx, const ClassKey& a, const ClassKey& b,
                   const ClassKey& ap, const ClassKey& bp);

/// The quadruple sum: over dimension quadruples of the frame and all class
/// choices inside each, q^{ext-hom} weighted products of four filtration
/// counts and four automorphism orders.
Rational green_rhs(const HallContext& ctx, const ClassKey& a, const ClassKey& b,
                   const ClassKey& ap, const ClassKey& bp);

struct GreenInstance {
    ClassKey a, b, ap, bp;
    Rational lhs, rhs;
    bool equal = false;
};

struct GreenReport {
    std::string quiver_name;
    long long q = 0;
    int bound = 0;
    std::vector<GreenInstance> instances;
    bool all_equal = false;

    std::string to_tsv() const;
    std::string to_json() const;
};

/// Every compatible class quadruple with |total grade| <= bound; instances
/// verified in parallel, reported in deterministic order.
GreenReport sweep_green(const HallContext& ctx, int bound, bool parallel = true);

/// D(u_x * u_y) - D(u_x) ._{sign} D(u_y).
TensorElement bialgebra_defect(const HallContext& ctx, const ClassKey& x, const ClassKey& y,
                               int sign);

struct TwistSignSweep {
    std::vector<int> surviving_signs;  // subset of {+1, -1}
    long long pairs_checked = 0;
};

/// Sweeps both signs over all basis pairs with |dim x + dim y| <= bound.
TwistSignSweep determine_twist_sign(const HallContext& ctx, int bound);

}  // namespace hallq
