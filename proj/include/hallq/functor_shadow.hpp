#pragma once

#include <optional>

#include "hallq/hall.hpp"

namespace hallq {

/// Invariant function on a product of representation spaces, stored by
/// class-id tuples (one id per factor); absent tuples are zero.
class ClassFunction {
public:
    ClassFunction() = default;
    explicit ClassFunction(std::vector<DimVector> factors) : factors_(std::move(factors)) {}

    const std::vector<DimVector>& factors() const { return factors_; }
    const std::map<std::vector<int>, SqrtQ>& values() const { return values_; }

    void add(const std::vector<int>& ids, const SqrtQ& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = values_.try_emplace(ids, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) values_.erase(it);
        }
    }
    SqrtQ at(const std::vector<int>& ids) const {
        auto it = values_.find(ids);
        return it == values_.end() ? SqrtQ() : it->second;
    }
    void scale(const SqrtQ& c);
    ClassFunction operator+(const ClassFunction& o) const;
    bool operator==(const ClassFunction& o) const {
        return factors_size_eq(o) && values_ == o.values_;
    }

private:
    bool factors_size_eq(const ClassFunction& o) const;
    std::vector<DimVector> factors_;
    std::map<std::vector<int>, SqrtQ> values_;
};

/// The delta function of one class.
ClassFunction delta_fn(const HallContext& ctx, const ClassKey& key);

ClassFunction outer(const ClassFunction& f, const ClassFunction& g);

/// Factor permutation: result factor j is input factor perm[j].
ClassFunction permute(const ClassFunction& f, const std::vector<size_t>& perm);

/// Twist exponent of induction: sum_h nu1_{s(h)} nu2_{t(h)} + sum_i nu1_i nu2_i.
long long ind_twist_exponent(const Quiver& quiver, const DimVector& nu1, const DimVector& nu2);

/// Untwisted induction sum at an arbitrary point x: over x-stable graded
/// subspaces W of dimension sub_dim, f(class of quotient, class of sub).
SqrtQ ind_sum_at(const HallContext& ctx, const ClassFunction& f, const Rep& x,
                 const DimVector& sub_dim);

/// Untwisted restriction sum at an arbitrary point pair: over the
/// extension fiber y, f(class of the assembled lower-triangular point).
SqrtQ res_sum_at(const HallContext& ctx, const ClassFunction& f, const Rep& quot_part,
                 const Rep& sub_part);

/// Induction on a two-factor function [nu1, nu2] -> [nu1+nu2], with the
/// unit standing in for v_q in the twist.
ClassFunction ind_fn(const HallContext& ctx, const ClassFunction& f, const SqrtQ& unit);

/// Restriction [nu] -> [nu1, nu2]; twist exponent -<nu1, nu2>.
ClassFunction res_fn(const HallContext& ctx, const ClassFunction& f, const DimVector& nu1,
                     const DimVector& nu2, const SqrtQ& unit);

/// Pairwise induction on a four-factor function [a1, b1, a2, b2] ->
/// [a1+b1, a2+b2].
ClassFunction ind_pair_fn(const HallContext& ctx, const ClassFunction& f, const SqrtQ& unit);

/// Integer shift bookkeeping of the decomposition: the aggregate constant
/// M of the composed side and per-quadruple constants (N, L, K) of the
/// decomposed side, tied together by M - 2K = N - (a2, b1).
struct ShiftConstants {
    struct PerQuadruple {
        Quadruple lambda;
        long long N, L, K;
    };
    long long M = 0;
    std::vector<PerQuadruple> per_quadruple;
};

ShiftConstants shift_constants(const Quiver& quiver, const DimVector& alpha,
                               const DimVector& beta, const DimVector& alphap,
                               const DimVector& betap);

bool verify_shift_identity(const Quiver& quiver, const DimVector& alpha, const DimVector& beta,
                           const DimVector& alphap, const DimVector& betap);

/// The four candidate units the decomposition sweep discriminates.
enum class VUnit { PlusV, MinusV, PlusVInv, MinusVInv };
SqrtQ realize_v_unit(VUnit u, long long q);
const char* v_unit_name(VUnit u);
std::vector<VUnit> all_v_units();

struct DecompositionCheck {
    bool equal = false;
    ClassFunction lhs, rhs;
};

/// Both sides of the restriction-of-induction decomposition for delta
/// functions of the classes A, B and the output splitting (alphap, betap),
/// with every twist computed in the given unit. Pointwise comparison.
DecompositionCheck verify_res_ind_decomposition(const HallContext& ctx, const ClassKey& A,
                                                const ClassKey& B, const DimVector& alphap,
                                                const DimVector& betap, const SqrtQ& unit);

struct DecompositionInstance {
    ClassKey A, B;
    DimVector alphap, betap;
};

/// All instances with |total grade| <= bound.
std::vector<DecompositionInstance> decomposition_instances(const HallContext& ctx, int bound);

struct VUnitSweep {
    std::vector<VUnit> survivors;       // candidates passing every instance
    std::optional<VUnit> canonical;     // positive member when the survivors
                                        // form a single +/- gauge pair
    long long instances = 0;
};

/// Runs every instance at all four candidates. The identity is blind to
/// the sign of the unit (all exponent gaps are even), so a successful
/// sweep ends with a single +/- pair; the positive member is reported.
VUnitSweep determine_v_unit(const HallContext& ctx, int bound, bool parallel = true);

struct ShiftFuzzResult {
    bool all_ok = false;
    long long instances = 0;
    long long quadruples = 0;
};

/// Seeded random frames (entries <= max_entry) checked against the shift
/// identity on every quadruple of each frame.
ShiftFuzzResult shift_identity_fuzz(const Quiver& quiver, int samples, uint64_t seed,
                                    int max_entry);

}  // namespace hallq
