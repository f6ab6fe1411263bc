#include "hallq/cache.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace hallq {

std::string CacheKey::file_name() const {
    // fold q and dim into the quiver hash with the same FNV-1a stream
    uint64_t h = quiver_hash;
    auto mix = [&h](long long v) {
        for (int i = 0; i < 8; ++i) {
            h ^= uint64_t((v >> (8 * i)) & 0xff);
            h *= 1099511628211ull;
        }
    };
    mix(q);
    mix((long long)dim.size());
    for (int d : dim) mix(d);
    char buf[32];
    std::snprintf(buf, sizeof buf, "%016llx", (unsigned long long)h);
    return std::string("table-") + buf + ".json";
}

void cache_store(const std::string& dir, const CacheKey& key, const IsoClassTable& table) {
    namespace fs = std::filesystem;
    fs::create_directories(dir);
    fs::path final_path = fs::path(dir) / key.file_name();
    fs::path tmp_path = final_path;
    tmp_path += ".tmp";
    {
        std::ofstream out(tmp_path, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write cache file " + tmp_path.string());
        out << table.to_json();
    }
    fs::rename(tmp_path, final_path);
}

std::optional<TablePtr> cache_load(const std::string& dir, const CacheKey& key) {
    namespace fs = std::filesystem;
    fs::path path = fs::path(dir) / key.file_name();
    std::ifstream in(path, std::ios::binary);
    if (!in) return std::nullopt;
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        auto table = IsoClassTable::from_json(buf.str());
        // the key must describe the loaded content
        if (table->q() != key.q || table->dim().counts() != key.dim ||
            table->quiver()->content_hash() != key.quiver_hash)
            throw std::runtime_error("cache entry does not match its key");
        return table;
    } catch (const std::exception& e) {
        std::cerr << "warning: discarding corrupt cache entry " << path.string() << ": "
                  << e.what() << "\n";
        return std::nullopt;
    }
}

}  // namespace hallq
