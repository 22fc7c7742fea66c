// Locus classifiers: the weight criterion (two routes), equivariant loops,
// equivariant h-bridges via contraction onto two-vertex reference covers,
// uncontraction counting at vertices, spiral edges and articulation points,
// and the five nested subcomplexes as downward closures of generator cells.
#include "tcov/loci.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace tcov {

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

// The two-vertex reference cover with a dilated genus-(g-h) vertex, a free
// genus-h vertex and one free connecting edge.
PCover bridge_reference(int p, int g, int h) {
    GraphBuilder gb;
    const int v1 = gb.add_vertex(g - h);
    const int v2 = gb.add_vertex(h);
    gb.add_edge(v1, v2);
    return make_cover(gb.build(), p, {v1}, {}, {}, {});
}

// The one-loop reference cover whose source is a single p-cycle of ascent a.
PCover spiral_reference(int p, int g, int a) {
    GraphBuilder gb;
    const int v = gb.add_vertex(g - 1);
    gb.add_edge(v, v);
    return make_cover(gb.build(), p, {}, {}, {}, {{0, GainSpec{1, a}}});
}

// Total source genus over a target vertex.
int fiber_genus(const PCover& c, int v) {
    return c.vertex_is_dilated(v) ? source_vertex_genus(c, v) : c.p * c.target.genus[v];
}

// Flat view of one cut component at v in the labels of the ambient graph.
struct CompView {
    std::vector<int> edges;          // edge indices
    std::vector<int> other_vertices; // vertices of the component besides v
    std::vector<int> halves_at_v;    // half-edges of the component rooted at v
    int genus_excl_v = 0;            // first Betti number + genus of the other vertices
};

std::vector<CompView> component_views(const WeightedGraph& T, int v) {
    std::vector<CompView> out;
    for (const Subgraph& sub : cut_components(T, v)) {
        CompView comp;
        for (const Edge& e : sub.graph.edges) comp.edges.push_back(T.edge_of[sub.from_sub[e.a]]);
        for (int w : sub.graph.vertices)
            if (sub.from_sub[w] != v) comp.other_vertices.push_back(sub.from_sub[w]);
        for (int x = 0; x < sub.graph.num_cells; ++x)
            if (!sub.graph.is_vertex[x] && T.root[sub.from_sub[x]] == v)
                comp.halves_at_v.push_back(sub.from_sub[x]);
        comp.genus_excl_v = sub.graph.num_edges() - sub.graph.num_vertices() + 1;
        for (int w : comp.other_vertices) comp.genus_excl_v += T.genus[w];
        out.push_back(std::move(comp));
    }
    return out;
}

// Number of connected components of the source subgraph lying over the given
// target vertices and edges.
int source_components_over(const PCover& c, const SourceGraph& S,
                           const std::set<int>& target_vertices,
                           const std::set<int>& target_edges) {
    UnionFind uf(S.graph.num_cells);
    for (const Edge& e : S.graph.edges) {
        const int target_edge = c.target.edge_of[S.to_target[e.a]];
        if (target_edges.count(target_edge))
            uf.unite(S.graph.root[e.a], S.graph.root[e.b]);
    }
    std::set<int> roots;
    for (int v : target_vertices)
        for (int cell : S.fiber[v]) roots.insert(uf.find(cell));
    return static_cast<int>(roots.size());
}

// Definition of "trivial preimage away from v": the preimage of the piece is
// p disjoint copies (free v), or p copies glued at the single vertex over a
// dilated v.
bool trivial_preimage_away(const PCover& c, const SourceGraph& S, const CompView& comp,
                           int v) {
    for (int e : comp.edges)
        if (c.edge_is_dilated(e)) return false;
    for (int w : comp.other_vertices)
        if (c.vertex_is_dilated(w)) return false;
    if (!c.vertex_is_dilated(v)) {
        std::set<int> verts(comp.other_vertices.begin(), comp.other_vertices.end());
        verts.insert(v);
        const std::set<int> edges(comp.edges.begin(), comp.edges.end());
        return source_components_over(c, S, verts, edges) == c.p;
    }
    // Dilated v: a free loop lifts to p loops glued at the fiber vertex.
    if (comp.other_vertices.empty()) return true;
    const std::set<int> verts(comp.other_vertices.begin(), comp.other_vertices.end());
    std::set<int> edges;
    for (int e : comp.edges) {
        const auto [x, y] = c.target.endpoints(e);
        if (x != v && y != v) edges.insert(e);
    }
    return source_components_over(c, S, verts, edges) == c.p;
}

// Eq-style count of h-bridge uncontractions at v: r pieces qualify (trivial
// preimage, matching genus, valence >= 2 at v); one of them must stay merged
// when splitting all of them off would destabilize v.
int h_uncontraction_count(const PCover& c, const SourceGraph& S, int v, int h) {
    int r = 0;
    int valence_used = 0;
    for (const CompView& comp : component_views(c.target, v)) {
        if (comp.genus_excl_v != h) continue;
        if (static_cast<int>(comp.halves_at_v.size()) < 2) continue;
        if (!trivial_preimage_away(c, S, comp, v)) continue;
        ++r;
        valence_used += static_cast<int>(comp.halves_at_v.size());
    }
    const int gv = c.target.genus[v];
    const int valence_rest = valence(c.target, v) - valence_used;
    return 2 * gv - 2 + r + valence_rest <= 0 ? r - 1 : r;
}

// Ascent sets of one cut component at a free vertex: all normalized nonzero
// values a such that some nonempty tangent subset H' leaves a connected
// trivial-preimage complement whose restored edges each close up with
// ascent +-a.
std::set<int> spiral_component_ascents(const PCover& c, const CompView& comp, int v) {
    const WeightedGraph& T = c.target;
    const int t = static_cast<int>(comp.halves_at_v.size());
    std::set<int> ascents;
    for (int mask = 1; mask < (1 << t); ++mask) {
        std::set<int> removed_edges;
        for (int i = 0; i < t; ++i)
            if (mask & (1 << i)) removed_edges.insert(T.edge_of[comp.halves_at_v[i]]);
        // Potentials from v over the remaining component; reject when it is
        // disconnected or some remaining cycle has nonzero ascent.
        std::map<int, int> potential;
        potential[v] = 0;
        std::vector<int> queue = {v};
        bool trivial = true;
        while (!queue.empty() && trivial) {
            const int u = queue.back();
            queue.pop_back();
            for (int e : comp.edges) {
                if (removed_edges.count(e)) continue;
                const int ha = T.edges[e].a, hb = T.edges[e].b;
                for (const auto& [from, to] : {std::pair{ha, hb}, std::pair{hb, ha}}) {
                    if (T.root[from] != u) continue;
                    const int w = T.root[to];
                    const int value = (potential[u] + c.oriented_gain(from)) % c.p;
                    auto it = potential.find(w);
                    if (it == potential.end()) {
                        potential[w] = value;
                        queue.push_back(w);
                    } else if (it->second != value) {
                        trivial = false;
                    }
                }
            }
        }
        if (!trivial || potential.size() != comp.other_vertices.size() + 1) continue;
        // Each selected half-edge must close up with one common nonzero ascent.
        int common = -1;
        bool ok = true;
        for (int i = 0; i < t && ok; ++i) {
            if (!(mask & (1 << i))) continue;
            const int h = comp.halves_at_v[i];
            const int w = T.root[T.inv[h]];
            auto it = potential.find(w);
            if (it == potential.end()) {
                ok = false; // removed edge dangles outside the remaining piece
                break;
            }
            const int a = (it->second + c.oriented_gain(T.inv[h])) % c.p;
            if (common == -1) common = a;
            ok = a == common;
        }
        if (!ok || common <= 0) continue;
        ascents.insert(std::min(common, c.p - common));
    }
    return ascents;
}

} // namespace

const char* locus_name(Locus l) {
    switch (l) {
    case Locus::w: return "w";
    case Locus::lw: return "lw";
    case Locus::br: return "br";
    case Locus::scon: return "scon";
    case Locus::par: return "par";
    }
    fail(Errc::internal, "unknown locus");
}

bool LocusMembership::in(Locus l) const {
    switch (l) {
    case Locus::w: return w;
    case Locus::lw: return lw;
    case Locus::br: return br;
    case Locus::scon: return scon;
    case Locus::par: return par;
    }
    fail(Errc::internal, "unknown locus");
}

bool in_weight_locus(const PCover& c) {
    bool direct = false;
    for (int v : c.target.vertices) direct = direct || fiber_genus(c, v) >= c.p;
    bool by_cases = false;
    for (int v : c.target.vertices) {
        const int g = c.target.genus[v];
        if (!c.vertex_is_dilated(v)) {
            by_cases = by_cases || g >= 1;
        } else {
            const int d = c.dilated_degree(v);
            by_cases = by_cases || d * (c.p - 1) >= 2 * (2 * c.p - 1) || (d >= 2 && g >= 1) ||
                       g >= 2;
        }
    }
    if (direct != by_cases) fail(Errc::internal, "weight-locus routes disagree");
    return direct;
}

std::vector<int> equivariant_loop_edges(const PCover& c) {
    std::vector<int> out;
    for (int e = 0; e < c.target.num_edges(); ++e) {
        if (!c.target.is_loop(e) || c.edge_is_dilated(e)) continue;
        const int v = c.target.root[c.target.edges[e].a];
        if (c.vertex_is_dilated(v) || c.oriented_gain(c.target.edges[e].a) == 0)
            out.push_back(e);
    }
    return out;
}

std::map<int, int> equivariant_h_bridges(const PCover& c) {
    const int g = graph_genus(c.target);
    std::map<CanonKey, int> reference;
    for (int h = 1; h <= g - 1; ++h)
        reference.emplace(canonical_form(bridge_reference(c.p, g, h)).key, h);
    std::map<int, int> out;
    for (int e = 0; e < c.target.num_edges(); ++e) {
        if (c.target.is_loop(e)) continue;
        const auto it = reference.find(canonical_form(face(c, {e})).key);
        if (it != reference.end()) out[e] = it->second;
    }
    return out;
}

int max_1bridge_uncontractions(const PCover& c, int v) {
    if (v < 0 || v >= c.target.num_cells || !c.target.is_vertex[v])
        fail(Errc::unknown_vertex, "no such vertex");
    const int g = c.target.genus[v];
    if (2 * g - 2 + valence(c.target, v) == 1) return 0;
    int loops_at_v = 0;
    for (int e : equivariant_loop_edges(c))
        if (c.target.root[c.target.edges[e].a] == v) ++loops_at_v;
    return std::min(g, fiber_genus(c, v) / c.p) + loops_at_v;
}

std::map<int, BridgePointInfo> bridge_articulation_points(const PCover& c, int h) {
    if (h < 2) fail(Errc::assumption_violated, "articulation analysis is stated for h >= 2");
    const auto bridges = equivariant_h_bridges(c);
    for (const auto& [e, he] : bridges)
        if (he < h)
            fail(Errc::assumption_violated,
                 "an equivariant bridge of lower type is present at edge " + std::to_string(e));
    for (int v : c.target.vertices)
        if (max_1bridge_uncontractions(c, v) > 0)
            fail(Errc::assumption_violated,
                 "a 1-bridge uncontraction is possible at vertex " + std::to_string(v));
    const SourceGraph S = build_source(c);
    for (int hp = 2; hp < h; ++hp)
        for (int v : c.target.vertices)
            if (h_uncontraction_count(c, S, v, hp) > 0)
                fail(Errc::assumption_violated, "an uncontraction of type " + std::to_string(hp) +
                                                    " is possible at vertex " + std::to_string(v));
    std::map<int, BridgePointInfo> out;
    for (int v : c.target.vertices) {
        BridgePointInfo info;
        info.max_uncontractions = h_uncontraction_count(c, S, v, h);
        for (const CompView& comp : component_views(c.target, v))
            info.is_articulation = info.is_articulation ||
                                   (comp.genus_excl_v == h && trivial_preimage_away(c, S, comp, v));
        out[v] = info;
    }
    return out;
}

std::map<int, int> spiral_edges(const PCover& c) {
    const int g = graph_genus(c.target);
    std::map<CanonKey, int> reference;
    for (int a = 1; a <= c.p / 2; ++a)
        reference.emplace(canonical_form(spiral_reference(c.p, g, a)).key, a);
    std::map<int, int> out;
    for (int e = 0; e < c.target.num_edges(); ++e) {
        const auto it = reference.find(canonical_form(face(c, {e})).key);
        if (it != reference.end()) out[e] = it->second;
    }
    return out;
}

SpiralPoints spiral_articulation_points(const PCover& c) {
    if (!c.is_free_cover()) fail(Errc::dilated_cover, "spiral articulation needs a free cover");
    SpiralPoints out;
    for (int v : c.target.vertices) {
        std::set<int> candidates;
        bool first = true;
        for (const CompView& comp : component_views(c.target, v)) {
            const std::set<int> ascents = spiral_component_ascents(c, comp, v);
            if (first) {
                candidates = ascents;
                first = false;
            } else {
                std::set<int> kept;
                std::set_intersection(candidates.begin(), candidates.end(), ascents.begin(),
                                      ascents.end(), std::inserter(kept, kept.begin()));
                candidates = std::move(kept);
            }
            if (candidates.empty()) break;
        }
        if (candidates.empty()) continue;
        out.vertices.push_back(v);
        const int a = *candidates.begin();
        if (out.common_ascent != 0 && out.common_ascent != a)
            fail(Errc::internal, "articulation points disagree on the ascent");
        out.common_ascent = a;
    }
    return out;
}

namespace {

std::string weight_witness(const PCover& c) {
    for (int v : c.target.vertices)
        if (fiber_genus(c, v) >= c.p) {
            std::ostringstream os;
            os << "fiber over vertex " << v << " has total genus " << fiber_genus(c, v);
            return os.str();
        }
    return {};
}

std::string scon_witness(const PCover& c) {
    const WeightedGraph& T = c.target;
    const SourceGraph S = build_source(c);
    for (int e = 0; e < T.num_edges(); ++e) {
        UnionFind uf(T.num_cells);
        for (int f = 0; f < T.num_edges(); ++f) {
            if (f == e) continue;
            const auto [x, y] = T.endpoints(f);
            uf.unite(x, y);
        }
        std::map<int, std::pair<std::set<int>, std::set<int>>> comps; // root -> (verts, edges)
        for (int v : T.vertices) comps[uf.find(v)].first.insert(v);
        for (int f = 0; f < T.num_edges(); ++f) {
            if (f == e) continue;
            comps[uf.find(T.endpoints(f).first)].second.insert(f);
        }
        for (const auto& [root, piece] : comps) {
            if (source_components_over(c, S, piece.first, piece.second) > 1) {
                std::ostringstream os;
                os << "component left by removing edge " << e << " has disconnected preimage";
                return os.str();
            }
        }
    }
    return {};
}

std::string parallel_witness(const PCover& c) {
    const WeightedGraph& T = c.target;
    for (int e1 = 0; e1 < T.num_edges(); ++e1) {
        if (T.is_loop(e1) || c.edge_is_dilated(e1)) continue;
        for (int e2 = e1 + 1; e2 < T.num_edges(); ++e2) {
            if (T.is_loop(e2) || c.edge_is_dilated(e2)) continue;
            const auto [u1, w1] = T.endpoints(e1);
            const auto [u2, w2] = T.endpoints(e2);
            if (std::minmax(u1, w1) != std::minmax(u2, w2)) continue;
            if (c.vertex_is_dilated(u1) || c.vertex_is_dilated(w1)) continue;
            // Orient e1 from u1 and come back through e2.
            const int back = T.root[T.edges[e2].a] == w1 ? T.edges[e2].a : T.edges[e2].b;
            if (cycle_ascent(c, {T.edges[e1].a, back}) != 0) continue;
            std::ostringstream os;
            os << "parallel pair (" << e1 << "," << e2 << ") lifts to disjoint cycles";
            return os.str();
        }
    }
    return {};
}

} // namespace

std::string locus_generator_witness(const PCover& c, Locus which) {
    std::string witness = weight_witness(c);
    if (!witness.empty() || which == Locus::w) return witness;

    const std::vector<int> loops = equivariant_loop_edges(c);
    if (!loops.empty()) return "equivariant loop at edge " + std::to_string(loops.front());
    const std::map<int, int> bridges = equivariant_h_bridges(c);
    for (const auto& [e, h] : bridges)
        if (h == 1) return "equivariant 1-bridge at edge " + std::to_string(e);
    if (which == Locus::lw) return {};

    if (!bridges.empty()) {
        const auto& [e, h] = *bridges.begin();
        return "equivariant " + std::to_string(h) + "-bridge at edge " + std::to_string(e);
    }
    if (which == Locus::br) return {};

    witness = scon_witness(c);
    if (!witness.empty() || which == Locus::scon) return witness;

    return parallel_witness(c);
}

namespace {

std::vector<std::pair<int, int>> generator_cells(const DeltaComplex& X, Locus which) {
    std::vector<std::pair<int, int>> out;
    for (int n = 0; n <= X.dimension(); ++n)
        for (std::size_t i = 0; i < X.levels[n].size(); ++i)
            if (!locus_generator_witness(X.levels[n][i].representative, which).empty())
                out.push_back({n, static_cast<int>(i)});
    return out;
}

std::vector<std::vector<char>> closure_flags(const DeltaComplex& X,
                                             const std::vector<std::pair<int, int>>& marked) {
    std::vector<std::vector<char>> flags(X.dimension() + 1);
    for (int n = 0; n <= X.dimension(); ++n) flags[n].assign(X.levels[n].size(), 0);
    std::vector<std::pair<int, int>> queue = marked;
    for (auto [n, i] : marked) flags[n][i] = 1;
    while (!queue.empty()) {
        const auto [n, i] = queue.back();
        queue.pop_back();
        if (n == 0) continue;
        for (const FaceRef& f : X.faces[n][i])
            if (!flags[n - 1][f.target]) {
                flags[n - 1][f.target] = 1;
                queue.push_back({n - 1, f.target});
            }
    }
    return flags;
}

} // namespace

DeltaComplex locus_subcomplex(const DeltaComplex& X, Locus which) {
    return subcomplex_closure(X, generator_cells(X, which));
}

std::vector<std::vector<LocusMembership>> locus_membership(const DeltaComplex& X) {
    const Locus order[] = {Locus::w, Locus::lw, Locus::br, Locus::scon, Locus::par};
    std::vector<std::vector<LocusMembership>> out(X.dimension() + 1);
    for (int n = 0; n <= X.dimension(); ++n) out[n].resize(X.levels[n].size());
    for (Locus l : order) {
        const auto flags = closure_flags(X, generator_cells(X, l));
        for (int n = 0; n <= X.dimension(); ++n)
            for (std::size_t i = 0; i < X.levels[n].size(); ++i) {
                if (!flags[n][i]) continue;
                LocusMembership& m = out[n][i];
                switch (l) {
                case Locus::w: m.w = true; break;
                case Locus::lw: m.lw = true; break;
                case Locus::br: m.br = true; break;
                case Locus::scon: m.scon = true; break;
                case Locus::par: m.par = true; break;
                }
                if (m.witness.empty()) {
                    const std::string direct =
                        locus_generator_witness(X.levels[n][i].representative, l);
                    m.witness = direct.empty() ? "via closure" : direct;
                }
            }
    }
    return out;
}

} // namespace tcov
