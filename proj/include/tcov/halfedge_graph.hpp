// Weighted graphs in the half-edge formalism: a finite cell set X with an
// involution iota and an idempotent root map r whose fixed points are the
// vertices.  Edges are the 2-element orbits of iota.  Each vertex carries a
// nonnegative integer genus.  This module provides construction/validation,
// genus and stability, edge contraction, exact canonical labeling (searched,
// with color-refinement pruning), automorphism groups, cut components and
// edge classification.
#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "tcov/common.hpp"

namespace tcov {

struct Edge {
    int a = -1; // half-edge, a < b
    int b = -1;
    bool operator==(const Edge&) const = default;
};

struct WeightedGraph {
    int num_cells = 0;
    std::vector<int> inv;    // involution on cells
    std::vector<int> root;   // idempotent retraction onto vertices
    std::vector<int> genus;  // per cell; meaningful (>= 0) at vertices, 0 elsewhere

    // Derived on construction:
    std::vector<char> is_vertex; // per cell
    std::vector<int> vertices;   // ascending cell indices
    std::vector<Edge> edges;     // sorted by smaller half-edge
    std::vector<int> edge_of;    // per cell: index into edges, or -1 for vertices

    int num_vertices() const { return static_cast<int>(vertices.size()); }
    int num_edges() const { return static_cast<int>(edges.size()); }
    bool is_loop(int e) const { return root[edges[e].a] == root[edges[e].b]; }
    std::pair<int, int> endpoints(int e) const { return {root[edges[e].a], root[edges[e].b]}; }
    int other_half(int h) const { return inv[h]; }
};

// Validates the axioms (iota an involution, r idempotent with iota∘r = r,
// Fix(iota) = image(r), genus nonnegative and given exactly on vertices) and
// derives the vertex/edge tables.  vertex_genus is keyed by vertex cell.
WeightedGraph build_graph(const std::vector<int>& inv, const std::vector<int>& root,
                          const std::map<int, int>& vertex_genus);

// Convenience constructor used by tests and enumeration: vertices first, then
// one half-edge pair per added edge, so edge indices coincide with add order.
struct GraphBuilder {
    std::vector<int> vertex_genus;
    std::vector<std::pair<int, int>> edge_list;

    int add_vertex(int genus);
    int add_edge(int u, int v); // loops allowed (u == v)
    WeightedGraph build() const;
};

bool is_connected(const WeightedGraph& g);

// First Betti number plus total vertex genus; requires a connected graph.
int graph_genus(const WeightedGraph& g);

// Tangent half-edges at v (cells h != v with root h = v), ascending.
std::vector<int> tangent_halfedges(const WeightedGraph& g, int v);
int valence(const WeightedGraph& g, int v);

// Every vertex satisfies 2*genus - 2 + valence > 0.
bool is_stable(const WeightedGraph& g);

struct Contraction {
    WeightedGraph graph;
    std::vector<int> cell_map;   // old cell -> new cell, -1 if removed
    std::vector<int> edge_map;   // old edge -> new edge, -1 for the contracted edge
    int merged_vertex = -1;      // new index of the image vertex of the contracted edge
};

// Contracts edge e: a non-loop merges its endpoints (genera add); a loop
// increments its vertex's genus.  Surviving cells keep their relative order,
// so surviving edges keep their relative order too.
Contraction contract_edge(const WeightedGraph& g, int e);

// Induced subgraph on an iota- and root-closed cell subset (ascending order);
// cells keep relative order.  to_sub maps original cells (-1 if absent).
struct Subgraph {
    WeightedGraph graph;
    std::vector<int> to_sub;
    std::vector<int> from_sub;
};
Subgraph induced_subgraph(const WeightedGraph& g, const std::vector<int>& cells);

// Connected components of g minus the vertex v, each returned with v added
// back (the "cut components" at v).  Components are ordered by smallest cell.
std::vector<Subgraph> cut_components(const WeightedGraph& g, int v);

struct EdgeClassification {
    std::vector<char> is_loop;
    std::vector<char> is_bridge; // removal disconnects; loops are never bridges
    std::vector<std::vector<int>> parallel_classes; // non-loop edges sharing endpoints, size >= 2
};
EdgeClassification classify_edges(const WeightedGraph& g);

// Relabels cells by perm (old cell -> new cell).
WeightedGraph apply_permutation(const WeightedGraph& g, const std::vector<int>& perm);

struct CanonicalLabeling {
    CanonKey key;                            // canonical form bytes
    std::vector<int> perm;                   // old cell -> canonical label (first minimal leaf)
    std::vector<std::vector<int>> min_perms; // every labeling achieving the key
};

// Exact canonical labeling via color refinement plus individualization
// search.  colors (optional, per cell) take part in refinement and in the
// key, so two graphs get equal keys exactly when some bijection preserves
// iota, r, genus and colors.  min_perms is the full coset of minimal
// labelings; composing one with the inverse of another yields automorphisms.
CanonicalLabeling canonical_labeling(const WeightedGraph& g,
                                     const std::vector<std::int64_t>& colors = {});

// The full group of cell permutations commuting with iota and r and
// preserving genus and colors, derived from the canonical search coset.
std::vector<std::vector<int>> automorphisms(const WeightedGraph& g,
                                            const std::vector<std::int64_t>& colors = {});

// Composition helpers for cell permutations (one-line notation, old -> new).
std::vector<int> compose_perm(const std::vector<int>& outer, const std::vector<int>& inner);
std::vector<int> invert_perm(const std::vector<int>& p);

} // namespace tcov
