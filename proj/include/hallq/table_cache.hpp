#pragma once

#include <atomic>
#include <map>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <string>

#include "hallq/iso_table.hpp"

namespace hallq {

/// Shared context for all algebra operations over one (quiver, q):
/// memoizes iso-class tables per dimension vector and optionally mirrors
/// them in a directory cache. Builds are serialized per context; finished
/// tables are immutable and freely shared.
class HallContext {
public:
    HallContext(QuiverPtr quiver, long long q, long long budget = 10'000'000)
        : quiver_(std::move(quiver)), field_(GaloisField::make(q)), budget_(budget) {}

    QuiverPtr quiver() const { return quiver_; }
    FieldPtr field() const { return field_; }
    long long q() const { return field_->q(); }
    long long budget() const { return budget_; }

    void set_cache_dir(std::string dir) { cache_dir_ = std::move(dir); }
    const std::optional<std::string>& cache_dir() const { return cache_dir_; }
    void set_parallel_build(bool on) { parallel_build_ = on; }

    TablePtr table(const DimVector& dim) const;

    /// Every table built or loaded so far, in deterministic key order.
    std::vector<TablePtr> built_tables() const;

    /// Stable-subspace counts of the canonical representative of
    /// (gamma_dim, gamma_id), split off a sub of dimension beta_dim,
    /// bucketed as [quotient class][sub class]. Memoized.
    const std::vector<std::vector<long long>>& subspace_buckets(const DimVector& gamma_dim,
                                                                int gamma_id,
                                                                const DimVector& beta_dim) const;

    /// hom_dim between canonical representatives, memoized per class pair.
    int hom_dim_classes(const DimVector& dim_m, int id_m, const DimVector& dim_n,
                        int id_n) const;

    /// Freezes the memo maps: queries become plain lock-free reads and a
    /// miss throws. Sweeps prime everything they touch, freeze, fan out.
    void freeze() const { frozen_.store(true, std::memory_order_release); }
    void unfreeze() const { frozen_.store(false, std::memory_order_release); }

    struct FreezeGuard {
        const HallContext& ctx;
        explicit FreezeGuard(const HallContext& c) : ctx(c) { ctx.freeze(); }
        ~FreezeGuard() { ctx.unfreeze(); }
    };

private:
    QuiverPtr quiver_;
    FieldPtr field_;
    long long budget_;
    bool parallel_build_ = true;
    std::optional<std::string> cache_dir_;
    mutable std::atomic<bool> frozen_{false};
    // reader-writer guards: sweeps hit these maps from every worker, and
    // after warmup all traffic is reads
    mutable std::shared_mutex mutex_;
    mutable std::map<std::vector<int>, TablePtr> tables_;
    mutable std::shared_mutex bucket_mutex_;
    mutable std::map<std::tuple<std::vector<int>, int, std::vector<int>>,
                     std::vector<std::vector<long long>>>
        buckets_;
    mutable std::shared_mutex hom_mutex_;
    mutable std::map<std::tuple<std::vector<int>, int, std::vector<int>, int>, int> hom_;
};

}  // namespace hallq
