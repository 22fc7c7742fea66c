// Implementation of the half-edge graph module.  The only nontrivial piece
// is canonical labeling: iterated color refinement (cells refine by the
// colors of their involution partner, their root, and — for vertices — the
// color multiset of their tangent half-edges) combined with an exhaustive
// individualization search.  The search returns every labeling realizing the
// minimal serialized form; that coset is also how automorphisms are derived.
#include "tcov/halfedge_graph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace tcov {

namespace {

// Simple union-find over 0..n-1.
struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

void derive_tables(WeightedGraph& g) {
    g.is_vertex.assign(g.num_cells, 0);
    g.vertices.clear();
    g.edges.clear();
    g.edge_of.assign(g.num_cells, -1);
    for (int x = 0; x < g.num_cells; ++x) {
        if (g.inv[x] == x) {
            g.is_vertex[x] = 1;
            g.vertices.push_back(x);
        }
    }
    for (int x = 0; x < g.num_cells; ++x) {
        if (g.inv[x] > x) {
            g.edge_of[x] = g.edge_of[g.inv[x]] = static_cast<int>(g.edges.size());
            g.edges.push_back({x, g.inv[x]});
        }
    }
}

} // namespace

WeightedGraph build_graph(const std::vector<int>& inv, const std::vector<int>& root,
                          const std::map<int, int>& vertex_genus) {
    const int n = static_cast<int>(inv.size());
    if (static_cast<int>(root.size()) != n)
        fail(Errc::invalid_root, "root map has " + std::to_string(root.size()) +
                                     " entries, expected " + std::to_string(n));
    for (int x = 0; x < n; ++x) {
        if (inv[x] < 0 || inv[x] >= n)
            fail(Errc::invalid_involution, "involution leaves the cell set at " + std::to_string(x));
        if (root[x] < 0 || root[x] >= n)
            fail(Errc::invalid_root, "root map leaves the cell set at " + std::to_string(x));
    }
    for (int x = 0; x < n; ++x)
        if (inv[inv[x]] != x)
            fail(Errc::invalid_involution, "involution is not self-inverse at " + std::to_string(x));
    for (int x = 0; x < n; ++x)
        if (root[root[x]] != root[x])
            fail(Errc::invalid_root, "root map is not idempotent at " + std::to_string(x));
    for (int x = 0; x < n; ++x) {
        // Fix(iota) must equal the image of the root map.
        if (inv[x] == x && root[x] != x)
            fail(Errc::fixed_point_mismatch,
                 "fixed cell " + std::to_string(x) + " is not a root");
        if (inv[root[x]] != root[x])
            fail(Errc::fixed_point_mismatch,
                 "root " + std::to_string(root[x]) + " is not fixed by the involution");
    }
    WeightedGraph g;
    g.num_cells = n;
    g.inv = inv;
    g.root = root;
    g.genus.assign(n, 0);
    for (auto [v, gv] : vertex_genus) {
        if (v < 0 || v >= n || inv[v] != v)
            fail(Errc::unknown_vertex, "genus assigned to non-vertex cell " + std::to_string(v));
        if (gv < 0)
            fail(Errc::negative_genus, "vertex " + std::to_string(v) + " has negative genus");
        g.genus[v] = gv;
    }
    derive_tables(g);
    return g;
}

int GraphBuilder::add_vertex(int genus) {
    vertex_genus.push_back(genus);
    return static_cast<int>(vertex_genus.size()) - 1;
}

int GraphBuilder::add_edge(int u, int v) {
    edge_list.push_back({u, v});
    return static_cast<int>(edge_list.size()) - 1;
}

WeightedGraph GraphBuilder::build() const {
    const int nv = static_cast<int>(vertex_genus.size());
    const int n = nv + 2 * static_cast<int>(edge_list.size());
    std::vector<int> inv(n), root(n);
    std::map<int, int> genus;
    for (int v = 0; v < nv; ++v) {
        inv[v] = v;
        root[v] = v;
        genus[v] = vertex_genus[v];
    }
    for (std::size_t e = 0; e < edge_list.size(); ++e) {
        const int a = nv + 2 * static_cast<int>(e);
        const int b = a + 1;
        inv[a] = b;
        inv[b] = a;
        root[a] = edge_list[e].first;
        root[b] = edge_list[e].second;
    }
    return build_graph(inv, root, genus);
}

bool is_connected(const WeightedGraph& g) {
    if (g.num_cells == 0) return true;
    UnionFind uf(g.num_cells);
    for (int x = 0; x < g.num_cells; ++x) {
        uf.unite(x, g.inv[x]);
        uf.unite(x, g.root[x]);
    }
    const int r = uf.find(0);
    for (int x = 1; x < g.num_cells; ++x)
        if (uf.find(x) != r) return false;
    return true;
}

int graph_genus(const WeightedGraph& g) {
    if (!is_connected(g)) fail(Errc::disconnected_graph, "genus of a disconnected graph");
    int total = g.num_edges() - g.num_vertices() + 1;
    for (int v : g.vertices) total += g.genus[v];
    return total;
}

std::vector<int> tangent_halfedges(const WeightedGraph& g, int v) {
    if (v < 0 || v >= g.num_cells || !g.is_vertex[v])
        fail(Errc::unknown_vertex, "no vertex " + std::to_string(v));
    std::vector<int> out;
    for (int x = 0; x < g.num_cells; ++x)
        if (x != v && g.root[x] == v) out.push_back(x);
    return out;
}

int valence(const WeightedGraph& g, int v) {
    return static_cast<int>(tangent_halfedges(g, v).size());
}

bool is_stable(const WeightedGraph& g) {
    for (int v : g.vertices)
        if (2 * g.genus[v] - 2 + valence(g, v) <= 0) return false;
    return true;
}

Contraction contract_edge(const WeightedGraph& g, int e) {
    if (e < 0 || e >= g.num_edges()) fail(Errc::unknown_edge, "no edge " + std::to_string(e));
    const int a = g.edges[e].a, b = g.edges[e].b;
    const int va = g.root[a], vb = g.root[b];
    const bool loop = (va == vb);

    std::vector<char> removed(g.num_cells, 0);
    removed[a] = removed[b] = 1;
    int vkeep = va, vgone = -1;
    if (!loop) {
        vkeep = std::min(va, vb);
        vgone = std::max(va, vb);
        removed[vgone] = 1;
    }

    Contraction out;
    out.cell_map.assign(g.num_cells, -1);
    int next = 0;
    for (int x = 0; x < g.num_cells; ++x)
        if (!removed[x]) out.cell_map[x] = next++;

    std::vector<int> inv(next), root(next);
    std::map<int, int> genus;
    for (int x = 0; x < g.num_cells; ++x) {
        if (removed[x]) continue;
        int ix = g.inv[x];
        int rx = g.root[x];
        if (!loop && rx == vgone) rx = vkeep;
        inv[out.cell_map[x]] = out.cell_map[ix];
        root[out.cell_map[x]] = out.cell_map[rx];
    }
    for (int v : g.vertices) {
        if (removed[v]) continue;
        int gv = g.genus[v];
        if (v == vkeep) gv = loop ? gv + 1 : g.genus[va] + g.genus[vb];
        genus[out.cell_map[v]] = gv;
    }
    out.graph = build_graph(inv, root, genus);
    out.merged_vertex = out.cell_map[vkeep];
    out.edge_map.assign(g.num_edges(), -1);
    for (int f = 0; f < g.num_edges(); ++f) {
        if (f == e) continue;
        out.edge_map[f] = out.graph.edge_of[out.cell_map[g.edges[f].a]];
    }
    return out;
}

Subgraph induced_subgraph(const WeightedGraph& g, const std::vector<int>& cells) {
    Subgraph out;
    out.to_sub.assign(g.num_cells, -1);
    out.from_sub = cells;
    for (std::size_t i = 0; i < cells.size(); ++i) out.to_sub[cells[i]] = static_cast<int>(i);
    std::vector<int> inv(cells.size()), root(cells.size());
    std::map<int, int> genus;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        const int x = cells[i];
        if (out.to_sub[g.inv[x]] < 0 || out.to_sub[g.root[x]] < 0)
            fail(Errc::internal, "subgraph cell set is not closed under involution/root");
        inv[i] = out.to_sub[g.inv[x]];
        root[i] = out.to_sub[g.root[x]];
        if (g.is_vertex[x]) genus[static_cast<int>(i)] = g.genus[x];
    }
    out.graph = build_graph(inv, root, genus);
    return out;
}

std::vector<Subgraph> cut_components(const WeightedGraph& g, int v) {
    if (v < 0 || v >= g.num_cells || !g.is_vertex[v])
        fail(Errc::unknown_vertex, "no vertex " + std::to_string(v));
    UnionFind uf(g.num_cells);
    for (int x = 0; x < g.num_cells; ++x) {
        if (x == v) continue;
        uf.unite(x, g.inv[x]); // never joins v: v is iota-fixed
        if (g.root[x] != v && g.root[x] != x) uf.unite(x, g.root[x]);
    }
    std::map<int, std::vector<int>> comps;
    for (int x = 0; x < g.num_cells; ++x)
        if (x != v) comps[uf.find(x)].push_back(x);
    std::vector<std::vector<int>> ordered;
    for (auto& [_, cs] : comps) ordered.push_back(cs);
    std::sort(ordered.begin(), ordered.end(),
              [](const auto& x, const auto& y) { return x.front() < y.front(); });
    std::vector<Subgraph> out;
    for (auto& cs : ordered) {
        cs.push_back(v);
        std::sort(cs.begin(), cs.end());
        out.push_back(induced_subgraph(g, cs));
    }
    return out;
}

EdgeClassification classify_edges(const WeightedGraph& g) {
    EdgeClassification out;
    const int ne = g.num_edges();
    out.is_loop.assign(ne, 0);
    out.is_bridge.assign(ne, 0);
    for (int e = 0; e < ne; ++e) out.is_loop[e] = g.is_loop(e);

    for (int e = 0; e < ne; ++e) {
        if (out.is_loop[e]) continue;
        UnionFind uf(g.num_cells);
        for (int x = 0; x < g.num_cells; ++x) uf.unite(x, g.root[x]);
        for (int f = 0; f < ne; ++f)
            if (f != e) uf.unite(g.edges[f].a, g.edges[f].b);
        out.is_bridge[e] = uf.find(g.edges[e].a) != uf.find(g.edges[e].b);
    }

    std::map<std::pair<int, int>, std::vector<int>> by_ends;
    for (int e = 0; e < ne; ++e) {
        if (out.is_loop[e]) continue;
        auto [u, w] = g.endpoints(e);
        by_ends[{std::min(u, w), std::max(u, w)}].push_back(e);
    }
    for (auto& [_, es] : by_ends)
        if (es.size() >= 2) out.parallel_classes.push_back(es);
    return out;
}

WeightedGraph apply_permutation(const WeightedGraph& g, const std::vector<int>& perm) {
    const int n = g.num_cells;
    std::vector<int> inv(n), root(n);
    std::map<int, int> genus;
    for (int x = 0; x < n; ++x) {
        inv[perm[x]] = perm[g.inv[x]];
        root[perm[x]] = perm[g.root[x]];
        if (g.is_vertex[x]) genus[perm[x]] = g.genus[x];
    }
    return build_graph(inv, root, genus);
}

namespace {

// Iterated refinement: a cell's signature is its own color, the colors of
// iota(x) and r(x), and for vertices the sorted colors of their tangent
// half-edges.  New colors are dense ranks of sorted signatures, so colors
// only ever split and the result does not depend on the input labeling.
std::vector<int> refine_colors(const WeightedGraph& g, std::vector<int> col) {
    const int n = g.num_cells;
    int classes = 0;
    {
        auto sorted = col;
        std::sort(sorted.begin(), sorted.end());
        classes = static_cast<int>(std::unique(sorted.begin(), sorted.end()) - sorted.begin());
    }
    while (true) {
        std::vector<std::vector<int>> sig(n);
        for (int x = 0; x < n; ++x) {
            auto& s = sig[x];
            s = {col[x], col[g.inv[x]], col[g.root[x]]};
            if (g.is_vertex[x]) {
                std::vector<int> tangent;
                for (int h = 0; h < n; ++h)
                    if (h != x && g.root[h] == x) tangent.push_back(col[h]);
                std::sort(tangent.begin(), tangent.end());
                s.insert(s.end(), tangent.begin(), tangent.end());
            }
        }
        std::vector<int> order(n);
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](int x, int y) { return sig[x] < sig[y]; });
        std::vector<int> next(n);
        int rank = 0;
        for (int i = 0; i < n; ++i) {
            if (i > 0 && sig[order[i]] != sig[order[i - 1]]) ++rank;
            next[order[i]] = rank;
        }
        const int new_classes = n == 0 ? 0 : rank + 1;
        col.swap(next);
        if (new_classes == classes) return col;
        classes = new_classes;
    }
}

struct CanonSearch {
    const WeightedGraph& g;
    const std::vector<std::int64_t>& user;
    CanonKey best;
    bool have_best = false;
    std::vector<std::vector<int>> best_perms;
    long long leaves = 0;
    static constexpr long long kLeafBudget = 4'000'000;

    CanonKey serialize(const std::vector<int>& perm) const {
        const int n = g.num_cells;
        std::vector<int> at(n); // position -> cell
        for (int x = 0; x < n; ++x) at[perm[x]] = x;
        CanonKey k;
        k.v.reserve(2 + 5 * n);
        k.v.push_back(n);
        k.v.push_back(g.num_vertices());
        for (int q = 0; q < n; ++q) {
            const int c = at[q];
            k.v.push_back(g.is_vertex[c] ? 0 : 1);
            k.v.push_back(g.is_vertex[c] ? g.genus[c] : 0);
            k.v.push_back(user.empty() ? 0 : user[c]);
        }
        for (int q = 0; q < n; ++q) k.v.push_back(perm[g.inv[at[q]]]);
        for (int q = 0; q < n; ++q) k.v.push_back(perm[g.root[at[q]]]);
        return k;
    }

    void search(std::vector<int> col) {
        col = refine_colors(g, std::move(col));
        const int n = g.num_cells;
        // Locate the first color class with more than one member.
        std::vector<int> count(n, 0);
        for (int x = 0; x < n; ++x) ++count[col[x]];
        int split = -1;
        for (int x = 0; x < n; ++x)
            if (count[col[x]] > 1 && (split < 0 || col[x] < col[split])) split = x;
        if (split < 0) {
            // Discrete coloring: ranks are a labeling.
            if (++leaves > kLeafBudget)
                fail(Errc::resource_budget_exceeded, "canonical labeling search exceeded leaf budget");
            CanonKey k = serialize(col);
            if (!have_best || k < best) {
                best = std::move(k);
                have_best = true;
                best_perms.assign(1, col);
            } else if (k == best) {
                best_perms.push_back(col);
            }
            return;
        }
        const int target_color = col[split];
        for (int m = 0; m < n; ++m) {
            if (col[m] != target_color) continue;
            std::vector<int> c2(n);
            for (int x = 0; x < n; ++x) c2[x] = 2 * col[x] + 1;
            c2[m] -= 1; // individualize m just below its class
            search(std::move(c2));
        }
    }
};

} // namespace

CanonicalLabeling canonical_labeling(const WeightedGraph& g, const std::vector<std::int64_t>& colors) {
    if (!colors.empty() && static_cast<int>(colors.size()) != g.num_cells)
        fail(Errc::internal, "color vector size mismatch");
    // Initial colors: ranks of (tag, genus, user color) tuples.
    const int n = g.num_cells;
    CanonicalLabeling out;
    std::vector<std::vector<std::int64_t>> init(n);
    for (int x = 0; x < n; ++x) {
        init[x] = {g.is_vertex[x] ? 0 : 1, g.is_vertex[x] ? g.genus[x] : 0,
                   colors.empty() ? 0 : colors[x]};
    }
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return init[a] < init[b]; });
    std::vector<int> col(n, 0);
    int rank = 0;
    for (int i = 0; i < n; ++i) {
        if (i > 0 && init[order[i]] != init[order[i - 1]]) ++rank;
        col[order[i]] = rank;
    }
    CanonSearch s{g, colors, {}, {}};
    s.search(col);
    out.key = s.best;
    out.min_perms = s.best_perms;
    std::sort(out.min_perms.begin(), out.min_perms.end());
    out.perm = out.min_perms.front();
    return out;
}

std::vector<std::vector<int>> automorphisms(const WeightedGraph& g,
                                            const std::vector<std::int64_t>& colors) {
    auto canon = canonical_labeling(g, colors);
    const auto base_inv = invert_perm(canon.perm);
    std::vector<std::vector<int>> out;
    out.reserve(canon.min_perms.size());
    for (const auto& p : canon.min_perms) out.push_back(compose_perm(base_inv, p));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> compose_perm(const std::vector<int>& outer, const std::vector<int>& inner) {
    std::vector<int> out(inner.size());
    for (std::size_t x = 0; x < inner.size(); ++x) out[x] = outer[inner[x]];
    return out;
}

std::vector<int> invert_perm(const std::vector<int>& p) {
    std::vector<int> out(p.size());
    for (std::size_t x = 0; x < p.size(); ++x) out[p[x]] = static_cast<int>(x);
    return out;
}

} // namespace tcov
