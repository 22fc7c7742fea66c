// Advisory census cache: JSON files under the cache root, tagged with a
// schema version and revalidated on load so stale or corrupt entries are
// silently recomputed.
#include "tcov/cache.hpp"

#include <cstdlib>
#include <fstream>

#include "tcov/io.hpp"

namespace tcov {

std::string cache_schema_tag() { return "tcov-census-v1"; }

std::filesystem::path default_cache_dir() {
    if (const char* dir = std::getenv("TCOV_CACHE_DIR"); dir && *dir)
        return std::filesystem::path(dir);
    return std::filesystem::path("cache");
}

std::filesystem::path cache_file(const std::filesystem::path& root, int g, int p, int n) {
    return root / ("g" + std::to_string(g) + "_p" + std::to_string(p)) /
           ("n" + std::to_string(n) + ".json");
}

namespace {

// A cached level counts as valid only if it matches the request, is sorted by
// canonical key without duplicates, every cover is a valid canonical
// representative of the right shape, and the per-target counts agree.
bool revalidate(const CensusLevel& level, int g, int p, int n) {
    if (level.genus != g || level.p != p || level.n != n) return false;
    std::map<std::string, int> counts;
    CanonKey previous;
    for (std::size_t i = 0; i < level.orbit_reps.size(); ++i) {
        const PCover& c = level.orbit_reps[i];
        if (c.p != p || c.target.num_edges() != n + 1) return false;
        if (graph_genus(c.target) != g) return false;
        if (!validate(c).ok()) return false;
        const CanonKey key = canonical_form(c).key;
        if (i > 0 && !(previous < key)) return false;
        previous = key;
        ++counts[target_name(c.target)];
    }
    return counts == level.counts_by_target;
}

} // namespace

std::optional<CensusLevel> load_census_level(const std::filesystem::path& root, int g, int p,
                                             int n) {
    try {
        std::ifstream in(cache_file(root, g, p, n));
        if (!in) return std::nullopt;
        const nlohmann::json j = nlohmann::json::parse(in);
        if (j.at("schema").get<std::string>() != cache_schema_tag()) return std::nullopt;
        CensusLevel level = census_level_from_json(j.at("level"));
        if (!revalidate(level, g, p, n)) return std::nullopt;
        return level;
    } catch (...) {
        return std::nullopt; // advisory cache: anything unreadable is ignored
    }
}

void store_census_level(const std::filesystem::path& root, const CensusLevel& level) {
    const std::filesystem::path file = cache_file(root, level.genus, level.p, level.n);
    std::filesystem::create_directories(file.parent_path());
    const nlohmann::json j = {{"schema", cache_schema_tag()},
                              {"level", census_level_to_json(level)}};
    std::ofstream out(file);
    out << j.dump(1) << '\n';
}

CensusLevel cached_census_level(const std::filesystem::path& root, int g, int p, int n,
                                bool no_cache, const CensusBudget& budget) {
    if (!no_cache)
        if (std::optional<CensusLevel> cached = load_census_level(root, g, p, n)) return *cached;
    CensusLevel level = census_level(g, p, n, budget);
    if (!no_cache) {
        try {
            store_census_level(root, level);
        } catch (...) {
            // Best effort: an unwritable cache never fails the computation.
        }
    }
    return level;
}

std::vector<CensusLevel> cached_all_cells(const std::filesystem::path& root, int g, int p,
                                          bool no_cache, const CensusBudget& budget) {
    std::vector<CensusLevel> out;
    for (int n = 0; n <= 3 * g - 4; ++n)
        out.push_back(cached_census_level(root, g, p, n, no_cache, budget));
    return out;
}

} // namespace tcov
