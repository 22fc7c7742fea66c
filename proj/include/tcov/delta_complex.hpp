// The moduli cell complex of covers: cells are cover classes with labeled
// target edges, glued along edge contractions.  A cover class with n+1 edges
// is an n-cell; its faces are the contractions of single edges; edge
// relabelings act on cells, and orbits whose stabilizer contains an odd
// permutation die rationally.  This module assembles the complex from a
// census, builds exact integer boundary matrices over the alternating-orbit
// basis, and computes Betti numbers and downward-closed subcomplexes.
#pragma once

#include <vector>

#include "tcov/census.hpp"
#include "tcov/linalg.hpp"
#include "tcov/pcover.hpp"

namespace tcov {

struct OrbitCell {
    int dimension = 0;
    PCover representative; // canonical cover; target edge i realizes label i
    std::vector<std::vector<int>> edge_stabilizer; // label perms fixing the class
    bool is_alternating = false; // no odd permutation in the stabilizer
};

struct FaceRef {
    int target = -1;        // orbit index one dimension down
    std::vector<int> align; // label perm: edge j of the contracted cover is
                            // edge align[j] of the target representative
    int sign = 0;           // permutation sign of align
};

struct DeltaComplex {
    int genus = 0;
    int p = 0;
    std::vector<std::vector<OrbitCell>> levels; // [n][orbit]
    // faces[n][orbit][i]: the face obtained by contracting edge/label i;
    // empty vector at n = 0 (vertices have no faces).
    std::vector<std::vector<std::vector<FaceRef>>> faces;

    int dimension() const { return static_cast<int>(levels.size()) - 1; }
    long long cell_count() const;
    bool empty() const;
};

// Relabels target edges: new edge j is old edge order[j].  Vertices and the
// decoration travel along; the cover stays the same class.
PCover relabel_edges(const PCover& c, const std::vector<int>& order);

// Face operator: keeps the edges theta[0..m], so edge theta[j] of the cell
// becomes edge j of the result, and contracts all others.  theta must be
// injective into the cell's labels (it need not be monotone).
PCover face(const PCover& cell, const std::vector<int>& theta);

// Builds the complex: orbit cells from the census representatives, plus the
// full face table with aligning permutations and signs.  Throws missing_face
// if some contraction has no class in the level below.
DeltaComplex assemble(const std::vector<CensusLevel>& census);

// Boundary matrix of the rational cellular chain complex: rows are
// alternating (n-1)-orbits, columns alternating n-orbits, entry =
// sum over i of (-1)^i sign(align_i) for faces landing in that row.
IntMatrix boundary_matrix(const DeltaComplex& X, int n);

struct BettiVector {
    std::vector<int> chain_dims; // dim C_n per dimension
    std::vector<int> b;          // Betti numbers of the realization
    std::vector<int> reduced;    // b with b_0 lowered by 1 on nonempty complexes
};

BettiVector betti(const DeltaComplex& X);

// Smallest subcomplex containing the marked cells (dimension, orbit index)
// and everything below them in the face poset.
DeltaComplex subcomplex_closure(const DeltaComplex& X,
                                const std::vector<std::pair<int, int>>& marked);

// Euler characteristic, computed from chain dimensions and cross-checked
// against the Betti numbers; inconsistency throws inconsistent_euler.
long long euler_characteristic(const DeltaComplex& X);

} // namespace tcov
