// Advisory disk cache for census levels: cache/g{g}_p{p}/n{n}.json under the
// cache root (TCOV_CACHE_DIR or ./cache).  Entries carry a schema tag and are
// revalidated on load; anything stale, foreign or inconsistent is ignored and
// recomputed.
#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "tcov/census.hpp"

namespace tcov {

// Bumped whenever serialized structure or canonical forms change.
std::string cache_schema_tag();

// TCOV_CACHE_DIR if set, else "cache" under the current directory.
std::filesystem::path default_cache_dir();

std::filesystem::path cache_file(const std::filesystem::path& root, int g, int p, int n);

// Returns the cached level only if it carries the current schema tag and
// passes revalidation (covers valid, keys canonical, sorted, counts
// consistent).
std::optional<CensusLevel> load_census_level(const std::filesystem::path& root, int g, int p,
                                             int n);

void store_census_level(const std::filesystem::path& root, const CensusLevel& level);

// census_level with read-through caching; no_cache skips both read and write.
CensusLevel cached_census_level(const std::filesystem::path& root, int g, int p, int n,
                                bool no_cache = false, const CensusBudget& budget = {});

std::vector<CensusLevel> cached_all_cells(const std::filesystem::path& root, int g, int p,
                                          bool no_cache = false, const CensusBudget& budget = {});

} // namespace tcov
