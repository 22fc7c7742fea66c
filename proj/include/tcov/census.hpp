// Exhaustive enumeration of isomorphism classes: stable weighted graphs of a
// given genus and edge count, the valid p-covers of each, and the per-dimension
// cell lists they induce.
#pragma once

#include <map>
#include <string>
#include <vector>

#include "tcov/pcover.hpp"

namespace tcov {

// Enumeration caps; exceeding any of them raises resource_budget_exceeded.
// The defaults are far above anything desk-scale inputs need.
struct CensusBudget {
    long long max_graph_candidates = 200'000'000;
    long long max_cover_candidates = 200'000'000;
};

// All isomorphism classes of connected stable weighted graphs of genus g with
// exactly k edges, sorted by canonical key.
std::vector<WeightedGraph> stable_weighted_graphs(int g, int k,
                                                  const CensusBudget& budget = {});

// Short deterministic descriptor of a target graph's shape plus its genus
// multiset, e.g. "theta[0,0]", "loop[1]", "v4e6#3f2a91[0,0,0,0]".
std::string target_name(const WeightedGraph& g);

// All isomorphism classes of valid p-covers with the given target, sorted by
// canonical key.  Each returned cover is its own canonical representative.
std::vector<PCover> covers_of(const WeightedGraph& target, int p,
                              const CensusBudget& budget = {});

// One census dimension: every class of valid covers with n+1 target edges.
struct CensusLevel {
    int genus = 0;
    int p = 0;
    int n = 0; // dimension; covers below have n+1 target edges
    std::vector<PCover> orbit_reps; // canonical reps, sorted by canonical key
    std::map<std::string, int> counts_by_target; // target_name -> class count
};

CensusLevel census_level(int g, int p, int n, const CensusBudget& budget = {});

// Complete census for n = 0 .. 3g-4.
std::vector<CensusLevel> all_cells(int g, int p, const CensusBudget& budget = {});

} // namespace tcov
