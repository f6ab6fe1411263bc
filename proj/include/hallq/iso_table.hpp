#pragma once

#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "hallq/rep.hpp"

namespace hallq {

/// |prod_i GL_{dim_i}(F_q)|; throws on overflow.
long long group_order(const DimVector& dim, long long q);

/// The complete list of group orbits on the representation space of one
/// dimension vector, with orbit sizes and automorphism-group orders.
/// Class ids are assigned in ascending order of the canonical
/// representative, which is the lexicographically minimal matrix tuple.
class IsoClassTable {
public:
    struct Entry {
        long long rep_code;
        long long orbit_size;
        long long aut_order;
    };

    /// Serial reference build: ascending scan + breadth-first orbit closure.
    static std::shared_ptr<const IsoClassTable> build_serial(QuiverPtr quiver, FieldPtr field,
                                                             const DimVector& dim,
                                                             long long budget);

    /// OpenMP build via lock-free union-find over generator moves; produces
    /// the identical canonical table.
    static std::shared_ptr<const IsoClassTable> build_parallel(QuiverPtr quiver, FieldPtr field,
                                                               const DimVector& dim,
                                                               long long budget);

    static std::shared_ptr<const IsoClassTable> build(QuiverPtr quiver, FieldPtr field,
                                                      const DimVector& dim, long long budget,
                                                      bool parallel = true);

    size_t num_classes() const { return entries_.size(); }
    const Entry& entry(int id) const { return entries_.at(id); }
    const std::vector<Entry>& entries() const { return entries_; }

    QuiverPtr quiver() const { return quiver_; }
    FieldPtr field() const { return field_; }
    long long q() const { return field_->q(); }
    const DimVector& dim() const { return dim_; }
    long long num_points() const { return layout_->num_points(); }
    long long group_order() const { return group_order_; }

    Rep representative(int id) const { return layout_->to_rep(entries_.at(id).rep_code, *quiver_); }

    /// Orbit id of x; throws on quiver/field/dimension mismatch.
    int classify(const Rep& x) const;
    int classify_code(long long code) const;

    /// Every point of one orbit, ascending; closes the orbit by breadth
    /// first search from the canonical representative.
    std::vector<long long> orbit_codes(int id) const;
    Rep rep_of_code(long long code) const { return layout_->to_rep(code, *quiver_); }

    /// Automorphism-group order of class id (the a_alpha of the algebra).
    long long aut(int id) const { return entries_.at(id).aut_order; }

    std::string to_json() const;

    /// Parses and validates: orbit sizes must sum to the point count and
    /// every entry must satisfy aut * orbit = group order. Throws
    /// std::runtime_error on any violation.
    static std::shared_ptr<const IsoClassTable> from_json(const std::string& text);

private:
    IsoClassTable() = default;
    void init_meta(QuiverPtr quiver, FieldPtr field, const DimVector& dim);
    void index_reps();

    QuiverPtr quiver_;
    FieldPtr field_;
    DimVector dim_;
    long long group_order_ = 0;
    std::unique_ptr<RepLayout> layout_;
    std::vector<Entry> entries_;
    std::vector<int32_t> class_of_;  // dense code -> id; empty for loaded tables
    std::unordered_map<long long, int> rep_to_id_;
};

using TablePtr = std::shared_ptr<const IsoClassTable>;

/// dim_Fq Hom(M, N): nullity of the intertwiner system f_t x_h = y_h f_s.
int hom_dim(const GaloisField& F, const Quiver& quiver, const Rep& M, const Rep& N);

/// Same system assembled in the transposed enumeration order; equal by
/// construction, kept as an independent route for tests.
int hom_dim_alt(const GaloisField& F, const Quiver& quiver, const Rep& M, const Rep& N);

/// dim_Fq Ext^1(M, N) = hom_dim(M, N) - <dim M, dim N>; throws if negative.
int ext1_dim(const GaloisField& F, const Quiver& quiver, const Rep& M, const Rep& N);

/// Filtration count g^gamma_{alpha beta}: the number of stable graded
/// subspaces W of the canonical representative of gamma with sub in class
/// beta and quotient in class alpha.
long long hall_number(const IsoClassTable& table_gamma, int gamma, const IsoClassTable& table_alpha,
                      int alpha, const IsoClassTable& table_beta, int beta);

/// Stable-subspace counts for one fixed point x of the gamma table,
/// bucketed by (quotient class, sub class); the brute-force oracle route.
std::vector<std::vector<long long>> stable_subspace_counts(const IsoClassTable& table_gamma,
                                                           const Rep& x,
                                                           const IsoClassTable& table_alpha,
                                                           const IsoClassTable& table_beta);

}  // namespace hallq
