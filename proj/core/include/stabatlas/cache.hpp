#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "stabatlas/group.hpp"

namespace stabatlas {

inline constexpr const char* cache_env_var = "STABATLAS_CACHE_DIR";

/* $STABATLAS_CACHE_DIR if set, else ./.stabatlas-cache */
std::filesystem::path cache_directory();

/* content hash of the generating set plus the phase convention */
std::string group_cache_key(const std::vector<NamedGenerator>& gens, bool mod_phase);

/* nullopt on miss or on any corruption; a corrupt entry is never partially
   decoded into a result */
std::optional<GroupTable> load_cached_group(const std::string& key);

/* atomic write (temp file + rename) so readers never observe partial data */
void store_cached_group(const std::string& key, const GroupTable& table);

/* close_subgroup with a read-through disk cache */
GroupTable close_subgroup_cached(const std::vector<NamedGenerator>& gens, bool mod_phase,
                                 std::size_t cap = 200000);

}  // namespace stabatlas
