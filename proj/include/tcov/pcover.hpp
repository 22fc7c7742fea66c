// Z/p-covers of stable weighted graphs, described on the target side: a
// subset of dilated vertices and dilated edges, a nowhere-zero flow on the
// half-edges of dilated edges (antisymmetric along edges, balanced at each
// dilated vertex), and gain decorations on edges whose endpoints are both
// free.  The source graph, with its Z/p action, is derived.  Gains are only
// meaningful up to switching (re-gauging at free vertices); isomorphism and
// canonical forms account for that.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tcov/halfedge_graph.hpp"

namespace tcov {

struct GainSpec {
    int tail = -1; // half-edge orienting the gain; -1 when the edge carries none
    int value = 0; // in 0..p-1; traversing from root(tail) raises the sheet by value
};

struct PCover {
    int p = 0;
    WeightedGraph target;
    std::vector<char> vertex_dilated; // per cell, nonzero only at vertices
    std::vector<char> edge_dilated;   // per edge index
    std::vector<int> flow;            // per cell: 1..p-1 on half-edges of dilated edges, else -1
    std::vector<GainSpec> gain;       // per edge index; set exactly on free-free edges

    bool vertex_is_dilated(int v) const { return vertex_dilated[v] != 0; }
    bool edge_is_dilated(int e) const { return edge_dilated[e] != 0; }
    // Both endpoints free (implies the edge is free); only these carry gains.
    bool edge_is_free_free(int e) const {
        return !edge_dilated[e] && !vertex_dilated[target.root[target.edges[e].a]] &&
               !vertex_dilated[target.root[target.edges[e].b]];
    }
    // Number of dilated half-edges at vertex v.
    int dilated_degree(int v) const;
    // Gain of a free-free edge read in the direction leaving root(h) through h.
    int oriented_gain(int h) const;
    bool is_free_cover() const;
};

// Assembles a cover and normalizes representation: flows are keyed by
// half-edge (the partner side of a dilated edge is completed to p - value
// when only one side is given), gain tails are stored on the smaller
// half-edge, and free-free edges without an explicit gain default to 0.
// Only index errors throw; semantic violations are left to validate().
PCover make_cover(WeightedGraph target, int p, const std::vector<int>& dilated_vertices,
                  const std::vector<int>& dilated_edges,
                  const std::vector<std::pair<int, int>>& flow_by_halfedge,
                  const std::vector<std::pair<int, GainSpec>>& gain_by_edge);

struct Violation {
    std::string clause;
    std::string message;
};

struct ValidationReport {
    std::vector<Violation> violations;
    bool ok() const { return violations.empty(); }
};

// Checks every defining clause (prime p, stable connected target, dilated
// edges inside the dilated vertex set, flow range/antisymmetry/balance, gain
// placement, nonnegative source vertex genus, connected and stable source).
// Collects all violations instead of aborting.
ValidationReport validate(const PCover& c);

// Genus of the single source vertex over a dilated vertex:
//   p*(g(v) - 1) + 1 + d(v)*(p - 1)/2.
int source_vertex_genus(const PCover& c, int dilated_vertex);

struct SourceGraph {
    WeightedGraph graph;
    std::vector<int> to_target;         // source cell -> target cell
    std::vector<int> copy_index;        // source cell -> sheet 0..p-1, or -1 over dilated cells
    std::vector<std::vector<int>> fiber; // target cell -> source cells
    std::vector<int> action;            // generator of the Z/p action, source cell -> source cell
};

// Builds the source graph: one cell over each dilated cell, p over each free
// cell; free-free edges wired by their gain, edges with a dilated endpoint
// wired sheet-to-sheet.  Verifies the local degree identity
// 2g~-2 = d_pi(v~)(2g-2) + sum (d_pi(h~)-1) at every source vertex.
SourceGraph build_source(const PCover& c);

struct CoverContraction {
    PCover cover;
    std::vector<int> cell_map; // old target cell -> new, -1 if removed
    std::vector<int> edge_map; // old edge -> new, -1 for the contracted edge
    int merged_vertex = -1;
};

// Contracts a target edge and carries the cover along: dilated loops and
// edges stay dilated (their flows disappear); a free edge with a dilated
// endpoint dilates the merged vertex; a free loop with nonzero gain dilates
// its vertex; gains on edges that acquire a dilated endpoint are discarded;
// contracting a free-free non-loop first re-gauges its gain to zero.
CoverContraction contract(const PCover& c, int e);

// Re-gauges at a free vertex: every free-free edge oriented u -> w changes
// gain by -amount*[u==v] + amount*[w==v]; loops at v are unchanged.
PCover switch_gains(const PCover& c, int v, int amount);

// Ascent of a closed walk through free cells only.  The walk is a list of
// half-edges; step i runs from root(h_i) to root(inv h_i).
int cycle_ascent(const PCover& c, const std::vector<int>& walk);

struct CoverCanon {
    CanonKey key;          // equal exactly for isomorphic covers
    std::vector<int> perm; // witness relabeling of target cells
};

// Canonical form: minimizes the decorated target form over all labelings
// reaching the minimal structural form, comparing gains after zeroing them on
// a spanning forest of the free-free subgraph (a complete invariant for the
// switching class once the labeling is fixed).
CoverCanon canonical_form(const PCover& c);

// The relabeled, forest-gauge-fixed representative realizing canonical_form.
PCover canonical_cover(const PCover& c);

bool isomorphic(const PCover& a, const PCover& b);

struct EdgeAutGroup {
    std::vector<std::vector<int>> edge_perms; // image of the automorphisms in Sym(edges)
    long long target_iso_count = 0;           // cover automorphisms of the target side
    int free_component_count = 0;             // components of the free-cell subgraph
    long long total_order = 0;                // target_iso_count * p^free_component_count
};

// Automorphisms of the cover as permutations of target edges, plus the order
// bookkeeping: each target-side automorphism lifts in p^c ways where c counts
// connected components of the subgraph of free cells.
EdgeAutGroup automorphism_edge_group(const PCover& c);

// Relabels target cells of the cover by perm (old -> new).
PCover apply_cover_permutation(const PCover& c, const std::vector<int>& perm);

} // namespace tcov
