// Serialization: JSON round-trips for graphs and covers, DOT export for
// figures (bold dilated edges with flow labels, thin free edges with gain
// labels), CSV tables for census/locus/Betti reports, and the JSON dump of an
// assembled complex.
#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "tcov/delta_complex.hpp"
#include "tcov/loci.hpp"

namespace tcov {

nlohmann::json graph_to_json(const WeightedGraph& g);
WeightedGraph graph_from_json(const nlohmann::json& j);

nlohmann::json cover_to_json(const PCover& c);
PCover cover_from_json(const nlohmann::json& j);

std::string graph_to_dot(const WeightedGraph& g, const std::string& name = "target");
std::string cover_to_dot(const PCover& c, const std::string& name = "cover");

// One row per (dimension, target, family-free count): "dimension,target,count".
std::string census_csv(const std::vector<CensusLevel>& levels);

// One row per cell: dimension, index, target, five locus flags, witness.
std::string locus_csv(const DeltaComplex& X,
                      const std::vector<std::vector<LocusMembership>>& membership);

// One row per dimension: n, dim C_n, b_n, reduced b_n.
std::string betti_csv(const BettiVector& bv);

nlohmann::json complex_to_json(const DeltaComplex& X);

nlohmann::json census_level_to_json(const CensusLevel& level);
CensusLevel census_level_from_json(const nlohmann::json& j);

} // namespace tcov
