#pragma once

#include <optional>
#include <string>

#include "hallq/iso_table.hpp"

namespace hallq {

/// Stable identifier for one iso-class table: quiver content, field size
/// and dimension vector. Equal inputs produce the same key on any run and
/// platform.
struct CacheKey {
    uint64_t quiver_hash;
    long long q;
    std::vector<int> dim;

    static CacheKey of(const Quiver& quiver, long long q, const DimVector& dim) {
        return {quiver.content_hash(), q, dim.counts()};
    }

    /// Filesystem-safe hex name.
    std::string file_name() const;
};

/// Writes the table under the key, atomically (temp file then rename).
void cache_store(const std::string& dir, const CacheKey& key, const IsoClassTable& table);

/// Loads and validates; returns nullopt when absent. A present-but-invalid
/// entry also returns nullopt after emitting a warning on stderr, so the
/// caller rebuilds.
std::optional<TablePtr> cache_load(const std::string& dir, const CacheKey& key);

}  // namespace hallq
