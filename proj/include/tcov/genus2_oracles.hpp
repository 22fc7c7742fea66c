// Closed-form genus-2 expectations, implemented independently of the
// enumeration machinery so the two sides can cross-validate: maximal-cell and
// wedge counts, three ways of counting free theta covers with distinct gains,
// the automorphism-class criterion for theta gains, the fully dilated theta
// census, and the family-by-family classification of maximal cells.
#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "tcov/census.hpp"

namespace tcov {

// Number of maximal cells of the genus-2 complex: 7 (p=2), 9 (p=3),
// (4p^2 + 9p - 13)/6 for p >= 5.
long long expected_maximal_cells(int p);

// Number of 2-spheres in the wedge: 0 for p in {2,3}, else
// (p-1)(p-5)/6 + (p-3)^2/4.
long long expected_wedge_count(int p);

// Free theta covers with three distinct gains, counted via the dihedral
// cycle-index polynomial evaluated at 1 + t^k; asserted equal to (p^2-1)/12.
long long polya_free_theta_count(int p);

// The same count by direct orbit enumeration: 3-subsets of residues mod p
// under the dihedral action x -> x+1, x -> -x.
long long bracelet_free_theta_count(int p);

// System of representatives (0, i, j), 1 <= i < (p+1)/3, 2i <= j <= (p+i)/2.
std::vector<std::array<int, 3>> free_theta_representatives(int p);

enum class ThetaAutClass { dihedral, cyclic };

// Automorphism class of the free theta with distinct gains i, j, k mod p:
// dihedral of order 2p iff i+j+k is congruent to one of 3i, 3j, 3k, else
// cyclic of order p.
ThetaAutClass theta_aut_class(int p, int i, int j, int k);

struct DilatedThetaCensus {
    long long distinct_count = 0;   // flow classes with three distinct values
    long long reflection_count = 0; // classes of shape (i, i, -2i)
    std::vector<std::array<int, 3>> distinct_representatives;
};

// Fully dilated theta covers: balanced nowhere-zero flow triples up to
// symmetry; distinct_count = (p-1)(p-5)/12, reflection_count = (p-1)/2.
DilatedThetaCensus dilated_theta_census(int p);

struct FamilyReport {
    std::vector<std::string> family_order; // fixed presentation order
    std::map<std::string, long long> counted;  // classified census cells
    std::map<std::string, long long> expected; // closed-form counts
    long long total = 0;
    bool ok = false; // every family matches and nothing was unclassifiable
};

// Classifies every maximal genus-2 census cell (three target edges) into the
// closed-form families and compares counts; an unclassifiable cell throws
// unclassifiable_cell.  Requires p >= 5.
FamilyReport maximal_family_census_check(int p, const CensusLevel& maximal);

} // namespace tcov
