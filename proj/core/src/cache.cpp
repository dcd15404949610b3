#include "stabatlas/cache.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "stabatlas/serialize.hpp"

namespace stabatlas {

namespace {

/* bumped whenever the GroupTable wire format changes */
constexpr char cache_magic[] = "stabgrp1";

std::filesystem::path entry_path(const std::string& key) {
    return cache_directory() / (key + ".group");
}

}  // namespace

std::filesystem::path cache_directory() {
    if (const char* env = std::getenv(cache_env_var); env && *env)
        return std::filesystem::path(env);
    return std::filesystem::path(".stabatlas-cache");
}

std::string group_cache_key(const std::vector<NamedGenerator>& gens, bool mod_phase) {
    std::string bytes;
    bytes.push_back(mod_phase ? 1 : 0);
    put_varint(bytes, gens.size());
    for (const auto& g : gens) {
        put_varint(bytes, g.name.size());
        bytes += g.name;
        g.matrix.encode_into(bytes);
    }
    std::ostringstream hex;
    hex << std::hex << fnv1a(bytes);
    /* a second pass with a different seed widens the key to 128 bits */
    hex << std::hex << fnv1a(bytes, 0x9e3779b97f4a7c15ull);
    return hex.str();
}

std::optional<GroupTable> load_cached_group(const std::string& key) {
    std::ifstream in(entry_path(key), std::ios::binary);
    if (!in) return std::nullopt;
    std::ostringstream buf;
    buf << in.rdbuf();
    if (!in.good() && !in.eof()) return std::nullopt;
    const std::string data = buf.str();
    const std::size_t head = sizeof(cache_magic) - 1;
    if (data.size() < head || data.compare(0, head, cache_magic) != 0) {
        std::fprintf(stderr, "warning: cache entry %s is corrupt, recomputing\n", key.c_str());
        return std::nullopt;
    }
    try {
        return GroupTable::decode(data.substr(head));
    } catch (const std::exception&) {
        std::fprintf(stderr, "warning: cache entry %s is corrupt, recomputing\n", key.c_str());
        return std::nullopt;
    }
}

void store_cached_group(const std::string& key, const GroupTable& table) {
    const auto dir = cache_directory();
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) return;  // caching is best-effort
    const auto final_path = entry_path(key);
    auto tmp = final_path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) return;
        out.write(cache_magic, sizeof(cache_magic) - 1);
        const std::string payload = table.encode();
        out.write(payload.data(), static_cast<std::streamsize>(payload.size()));
        if (!out.good()) {
            out.close();
            std::filesystem::remove(tmp, ec);
            return;
        }
    }
    std::filesystem::rename(tmp, final_path, ec);
    if (ec) std::filesystem::remove(tmp, ec);
}

GroupTable close_subgroup_cached(const std::vector<NamedGenerator>& gens, bool mod_phase,
                                 std::size_t cap) {
    const std::string key = group_cache_key(gens, mod_phase);
    if (auto hit = load_cached_group(key)) return std::move(*hit);
    GroupTable table = close_subgroup(gens, mod_phase, cap);
    store_cached_group(key, table);
    return table;
}

}  // namespace stabatlas
