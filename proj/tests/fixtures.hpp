// Shared construction helpers for the test suite: the standard genus-2
// targets (loop, bridge, figure-eight, lollipop, theta, dumbbell) and the
// standard covers over them.  Edge indices follow the add order of
// GraphBuilder, so e.g. theta edges are 0,1,2 between vertices 0 and 1.
#pragma once

#include <vector>

#include "tcov/halfedge_graph.hpp"
#include "tcov/pcover.hpp"

namespace fixtures {

using tcov::GainSpec;
using tcov::GraphBuilder;
using tcov::PCover;
using tcov::WeightedGraph;

inline WeightedGraph loop_graph(int vertex_genus) {
    GraphBuilder b;
    int v = b.add_vertex(vertex_genus);
    b.add_edge(v, v);
    return b.build();
}

inline WeightedGraph bridge_graph(int g0, int g1) {
    GraphBuilder b;
    int u = b.add_vertex(g0), w = b.add_vertex(g1);
    b.add_edge(u, w);
    return b.build();
}

inline WeightedGraph figure_eight_graph(int vertex_genus) {
    GraphBuilder b;
    int v = b.add_vertex(vertex_genus);
    b.add_edge(v, v);
    b.add_edge(v, v);
    return b.build();
}

// Loop at vertex 0, then the bridge 0-1; vertex 1 carries the genus.
inline WeightedGraph lollipop_graph(int g0, int g1) {
    GraphBuilder b;
    int u = b.add_vertex(g0), w = b.add_vertex(g1);
    b.add_edge(u, u);
    b.add_edge(u, w);
    return b.build();
}

inline WeightedGraph theta_graph(int g0 = 0, int g1 = 0) {
    GraphBuilder b;
    int u = b.add_vertex(g0), w = b.add_vertex(g1);
    b.add_edge(u, w);
    b.add_edge(u, w);
    b.add_edge(u, w);
    return b.build();
}

// Edge 0: loop at vertex 0; edge 1: bridge; edge 2: loop at vertex 1.
inline WeightedGraph dumbbell_graph(int g0 = 0, int g1 = 0) {
    GraphBuilder b;
    int u = b.add_vertex(g0), w = b.add_vertex(g1);
    b.add_edge(u, u);
    b.add_edge(u, w);
    b.add_edge(w, w);
    return b.build();
}

// Dilated loop with flow i on a dilated genus-1 vertex (a genus-2 cover).
inline PCover ring_cover(int p, int i) {
    WeightedGraph t = loop_graph(1);
    return tcov::make_cover(t, p, {0}, {0}, {{t.edges[0].a, i}}, {});
}

// Free loop with gain a on a free genus-1 vertex; the source is a p-cycle.
inline PCover spiral_cover(int p, int a) {
    WeightedGraph t = loop_graph(1);
    return tcov::make_cover(t, p, {}, {}, {}, {{0, GainSpec{t.edges[0].a, a}}});
}

// Free loop on a dilated genus-1 vertex; the source is one vertex, p loops.
inline PCover butterfly_cover(int p) {
    return tcov::make_cover(loop_graph(1), p, {0}, {}, {}, {});
}

// Free bridge from a dilated genus-(g-h) vertex to a free genus-h vertex.
inline PCover bh_cover(int p, int g, int h) {
    return tcov::make_cover(bridge_graph(g - h, h), p, {0}, {}, {}, {});
}

// Free bridge between two dilated genus-1 vertices; p parallel lifts.
inline PCover p1_cover(int p) {
    return tcov::make_cover(bridge_graph(1, 1), p, {0, 1}, {}, {}, {});
}

// Free theta with the given gains, all oriented from vertex 0 to vertex 1.
inline PCover free_theta_cover(int p, int x0, int x1, int x2) {
    WeightedGraph t = theta_graph();
    return tcov::make_cover(t, p,
                            {}, {}, {},
                            {{0, GainSpec{t.edges[0].a, x0}},
                             {1, GainSpec{t.edges[1].a, x1}},
                             {2, GainSpec{t.edges[2].a, x2}}});
}

// Theta with edges 0 and 1 dilated (flows i and -i out of vertex 0), edge 2 free.
inline PCover mixed_theta_cover(int p, int i) {
    WeightedGraph t = theta_graph();
    return tcov::make_cover(t, p, {0, 1}, {0, 1},
                            {{t.edges[0].a, i}, {t.edges[1].a, (p - i) % p}}, {});
}

// Fully dilated theta with flows (i, j, k) out of vertex 0; needs i+j+k = 0 mod p.
inline PCover dilated_theta_cover(int p, int i, int j, int k) {
    WeightedGraph t = theta_graph();
    return tcov::make_cover(t, p, {0, 1}, {0, 1, 2},
                            {{t.edges[0].a, i}, {t.edges[1].a, j}, {t.edges[2].a, k}}, {});
}

// Free dumbbell with loop gains a (at vertex 0) and b (at vertex 1); the
// bridge gain is 0 in the standard gauge.
inline PCover free_dumbbell_cover(int p, int a, int b) {
    WeightedGraph t = dumbbell_graph();
    return tcov::make_cover(t, p, {}, {}, {},
                            {{0, GainSpec{t.edges[0].a, a}}, {2, GainSpec{t.edges[2].a, b}}});
}

} // namespace fixtures
