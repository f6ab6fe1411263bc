#include "hallq/table_cache.hpp"

#include <mutex>

#include "hallq/cache.hpp"

namespace hallq {

TablePtr HallContext::table(const DimVector& dim) const {
    if (frozen_.load(std::memory_order_acquire)) {
        auto it = tables_.find(dim.counts());
        if (it == tables_.end()) throw std::logic_error("table miss on a frozen context");
        return it->second;
    }
    {
        std::shared_lock lock(mutex_);
        auto it = tables_.find(dim.counts());
        if (it != tables_.end()) return it->second;
    }
    std::unique_lock lock(mutex_);
    auto it = tables_.find(dim.counts());
    if (it != tables_.end()) return it->second;

    TablePtr built;
    if (cache_dir_) {
        auto key = CacheKey::of(*quiver_, q(), dim);
        if (auto loaded = cache_load(*cache_dir_, key)) built = *loaded;
        if (!built) {
            built = IsoClassTable::build(quiver_, field_, dim, budget_, parallel_build_);
            cache_store(*cache_dir_, key, *built);
        }
    } else {
        built = IsoClassTable::build(quiver_, field_, dim, budget_, parallel_build_);
    }
    tables_.emplace(dim.counts(), built);
    return built;
}

std::vector<TablePtr> HallContext::built_tables() const {
    std::shared_lock lock(mutex_);
    std::vector<TablePtr> out;
    out.reserve(tables_.size());
    for (const auto& [k, t] : tables_) out.push_back(t);
    return out;
}

int HallContext::hom_dim_classes(const DimVector& dim_m, int id_m, const DimVector& dim_n,
                                 int id_n) const {
    auto key = std::make_tuple(dim_m.counts(), id_m, dim_n.counts(), id_n);
    if (frozen_.load(std::memory_order_acquire)) {
        auto it = hom_.find(key);
        if (it == hom_.end()) throw std::logic_error("hom miss on a frozen context");
        return it->second;
    }
    {
        std::shared_lock lock(hom_mutex_);
        auto it = hom_.find(key);
        if (it != hom_.end()) return it->second;
    }
    Rep m = table(dim_m)->representative(id_m);
    Rep n = table(dim_n)->representative(id_n);
    int h = hom_dim(*field_, *quiver_, m, n);
    std::unique_lock lock(hom_mutex_);
    return hom_.emplace(std::move(key), h).first->second;
}

const std::vector<std::vector<long long>>& HallContext::subspace_buckets(
    const DimVector& gamma_dim, int gamma_id, const DimVector& beta_dim) const {
    auto key = std::make_tuple(gamma_dim.counts(), gamma_id, beta_dim.counts());
    if (frozen_.load(std::memory_order_acquire)) {
        auto it = buckets_.find(key);
        if (it == buckets_.end()) throw std::logic_error("bucket miss on a frozen context");
        return it->second;
    }
    {
        std::shared_lock lock(bucket_mutex_);
        auto it = buckets_.find(key);
        if (it != buckets_.end()) return it->second;
    }
    auto table_gamma = table(gamma_dim);
    auto table_beta = table(beta_dim);
    auto table_alpha = table(gamma_dim - beta_dim);
    auto counts = stable_subspace_counts(*table_gamma, table_gamma->representative(gamma_id),
                                         *table_alpha, *table_beta);
    std::unique_lock lock(bucket_mutex_);
    return buckets_.emplace(std::move(key), std::move(counts)).first->second;
}

}  // namespace hallq
