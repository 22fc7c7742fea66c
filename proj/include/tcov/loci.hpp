// The five nested loci of the moduli complex (weight, loop-weight, bridge,
// sparsely connected, parallel) as downward closures of generator cells, plus
// the articulation-point counting machinery used as an independent oracle:
// equivariant loops and h-bridges, uncontraction counts at vertices, and
// spiral edges/articulation points.
#pragma once

#include <map>
#include <string>
#include <vector>

#include "tcov/delta_complex.hpp"
#include "tcov/pcover.hpp"

namespace tcov {

enum class Locus { w, lw, br, scon, par };

const char* locus_name(Locus l);

// True iff some fiber of the source has total genus >= p.  Computed two
// independent ways (direct fiber-genus sums and a case list on vertex data);
// a disagreement is an internal error.
bool in_weight_locus(const PCover& c);

// Free loop edges whose p lifts are all loops: loops at a dilated vertex, or
// gain-0 loops at a free vertex.  Ascending edge indices.
std::vector<int> equivariant_loop_edges(const PCover& c);

// Edges e such that contracting everything but e leaves the two-vertex cover
// with a dilated genus-(g-h) vertex, a free genus-h vertex and a free
// connecting edge (p bridge lifts); maps e -> h.
std::map<int, int> equivariant_h_bridges(const PCover& c);

// Maximal number of 1-bridge uncontractions at vertex v:
//   0 when 2g(v)-2+val(v) = 1, else min(g(v), floor(gup(v)/p)) + l(v),
// where gup is the total source genus over v and l counts equivariant loops
// at v.
int max_1bridge_uncontractions(const PCover& c, int v);

struct BridgePointInfo {
    int max_uncontractions = 0;   // the count formula at this vertex
    bool is_articulation = false; // some h-bridge (un)contraction exists here
};

// Per-vertex h-bridge articulation data, h >= 2.  Requires that the cover has
// no equivariant h'-bridges for any h' < h and no positive
// 1-bridge-uncontraction count (the formula's standing assumption, checked
// first; violations throw assumption_violated).
std::map<int, BridgePointInfo> bridge_articulation_points(const PCover& c, int h);

// Edges e such that contracting everything but e leaves a free gain-a loop on
// a free vertex (the source a p-cycle); maps e -> a normalized to
// 1..(p-1)/2.
std::map<int, int> spiral_edges(const PCover& c);

struct SpiralPoints {
    std::vector<int> vertices; // spiral articulation points, ascending
    int common_ascent = 0;     // normalized ascent shared by all of them (0 if none)
};

// Spiral articulation points of a free cover: vertices v all of whose cut
// components admit a tangent subset H' whose removal leaves a connected
// trivial-preimage complement and whose restored edges all close up with one
// common normalized ascent.  Also enforces that all points of one cover agree
// on that ascent.  Dilated covers throw dilated_cover.
SpiralPoints spiral_articulation_points(const PCover& c);

// Generator test per locus (w: weight criterion; lw: + equivariant loop or
// 1-bridge; br: + equivariant h-bridge; scon: + an edge one of whose
// complementary components has disconnected preimage; par: + a free parallel
// pair closing up with ascent 0).  Returns a witness description, or empty.
std::string locus_generator_witness(const PCover& c, Locus which);

// The locus as a subcomplex: downward closure of all generator cells.
DeltaComplex locus_subcomplex(const DeltaComplex& X, Locus which);

struct LocusMembership {
    bool w = false, lw = false, br = false, scon = false, par = false;
    std::string witness; // generator witness for the smallest locus hit
    bool in(Locus l) const;
};

// Membership flags for every cell of X in all five loci (closure semantics).
std::vector<std::vector<LocusMembership>> locus_membership(const DeltaComplex& X);

} // namespace tcov
