// Implementation of the cover module.  Wiring conventions: the source has
// one cell over every dilated cell and p over every free cell; a free-free
// edge with gain (tail t, value x) joins sheet m at root(t) to sheet m+x at
// the far end; an edge with a dilated endpoint joins sheet to like sheet.
// Canonical forms fix the switching freedom by zeroing gains along a
// spanning forest of the free-free subgraph, which pins the switching class
// completely once a labeling is chosen.
#include "tcov/pcover.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace tcov {

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[a] = b;
        return true;
    }
};

} // namespace

int PCover::dilated_degree(int v) const {
    int d = 0;
    for (int h = 0; h < target.num_cells; ++h)
        if (h != v && target.root[h] == v && edge_dilated[target.edge_of[h]]) ++d;
    return d;
}

int PCover::oriented_gain(int h) const {
    const int e = target.edge_of[h];
    if (e < 0 || gain[e].tail < 0)
        fail(Errc::invalid_cover, "no gain on the edge of half-edge " + std::to_string(h));
    return gain[e].tail == h ? gain[e].value : (p - gain[e].value) % p;
}

bool PCover::is_free_cover() const {
    for (int v : target.vertices)
        if (vertex_dilated[v]) return false;
    for (int e = 0; e < target.num_edges(); ++e)
        if (edge_dilated[e]) return false;
    return true;
}

PCover make_cover(WeightedGraph target, int p, const std::vector<int>& dilated_vertices,
                  const std::vector<int>& dilated_edges,
                  const std::vector<std::pair<int, int>>& flow_by_halfedge,
                  const std::vector<std::pair<int, GainSpec>>& gain_by_edge) {
    PCover c;
    if (p < 2) fail(Errc::not_prime, "p must be at least 2");
    c.p = p;
    c.target = std::move(target);
    const auto& T = c.target;
    c.vertex_dilated.assign(T.num_cells, 0);
    c.edge_dilated.assign(T.num_edges(), 0);
    c.flow.assign(T.num_cells, -1);
    c.gain.assign(T.num_edges(), GainSpec{});

    for (int v : dilated_vertices) {
        if (v < 0 || v >= T.num_cells || !T.is_vertex[v])
            fail(Errc::unknown_vertex, "dilated vertex " + std::to_string(v) + " is not a vertex");
        c.vertex_dilated[v] = 1;
    }
    for (int e : dilated_edges) {
        if (e < 0 || e >= T.num_edges())
            fail(Errc::unknown_edge, "dilated edge " + std::to_string(e) + " out of range");
        c.edge_dilated[e] = 1;
    }
    for (auto [h, val] : flow_by_halfedge) {
        if (h < 0 || h >= T.num_cells || T.is_vertex[h])
            fail(Errc::unknown_edge, "flow on cell " + std::to_string(h) + " which is not a half-edge");
        c.flow[h] = mod_p(val, p);
    }
    // Complete flows along dilated edges where only one side was given.
    for (int e = 0; e < T.num_edges(); ++e) {
        if (!c.edge_dilated[e]) continue;
        const int a = T.edges[e].a, b = T.edges[e].b;
        if (c.flow[a] >= 0 && c.flow[b] < 0) c.flow[b] = (p - c.flow[a]) % p;
        if (c.flow[b] >= 0 && c.flow[a] < 0) c.flow[a] = (p - c.flow[b]) % p;
    }
    for (auto [e, gs] : gain_by_edge) {
        if (e < 0 || e >= T.num_edges())
            fail(Errc::unknown_edge, "gain on edge " + std::to_string(e) + " out of range");
        if (gs.tail != T.edges[e].a && gs.tail != T.edges[e].b)
            fail(Errc::invalid_cover, "gain tail is not a half-edge of edge " + std::to_string(e));
        // Normalize the stored orientation to the smaller half-edge.
        GainSpec norm;
        norm.tail = T.edges[e].a;
        norm.value = gs.tail == norm.tail ? mod_p(gs.value, p) : (p - mod_p(gs.value, p)) % p;
        c.gain[e] = norm;
    }
    // Free-free edges default to gain zero when none was given.
    for (int e = 0; e < T.num_edges(); ++e)
        if (c.gain[e].tail < 0 && c.edge_is_free_free(e)) c.gain[e] = GainSpec{T.edges[e].a, 0};
    return c;
}

int source_vertex_genus(const PCover& c, int dilated_vertex) {
    const auto& T = c.target;
    if (dilated_vertex < 0 || dilated_vertex >= T.num_cells || !T.is_vertex[dilated_vertex])
        fail(Errc::unknown_vertex, "no vertex " + std::to_string(dilated_vertex));
    if (!c.vertex_dilated[dilated_vertex])
        fail(Errc::invalid_cover, "vertex " + std::to_string(dilated_vertex) + " is not dilated");
    const int d = c.dilated_degree(dilated_vertex);
    return c.p * (T.genus[dilated_vertex] - 1) + 1 + d * (c.p - 1) / 2;
}

ValidationReport validate(const PCover& c) {
    ValidationReport rep;
    auto flag = [&rep](const std::string& clause, const std::string& msg) {
        rep.violations.push_back({clause, msg});
    };
    const auto& T = c.target;
    const int p = c.p;

    if (!is_prime(p)) flag("prime", "p = " + std::to_string(p) + " is not prime");
    if (!is_connected(T)) flag("target_connected", "target graph is disconnected");
    if (!is_stable(T)) flag("target_stable", "target graph is not stable");

    bool placement_ok = true;
    for (int e = 0; e < T.num_edges(); ++e) {
        if (!c.edge_dilated[e]) continue;
        auto [u, w] = T.endpoints(e);
        if (!c.vertex_dilated[u] || !c.vertex_dilated[w]) {
            flag("dilated_edge_endpoints",
                 "dilated edge " + std::to_string(e) + " has a free endpoint");
            placement_ok = false;
        }
    }
    for (int h = 0; h < T.num_cells; ++h) {
        if (T.is_vertex[h]) continue;
        const int e = T.edge_of[h];
        if (c.edge_dilated[e]) {
            if (c.flow[h] < 1 || c.flow[h] >= p) {
                flag("flow_range", "half-edge " + std::to_string(h) + " of a dilated edge has flow " +
                                       std::to_string(c.flow[h]) + ", expected a value in 1.." +
                                       std::to_string(p - 1));
                placement_ok = false;
            }
        } else if (c.flow[h] >= 0) {
            flag("flow_placement", "free half-edge " + std::to_string(h) + " carries a flow");
            placement_ok = false;
        }
    }
    for (int e = 0; e < T.num_edges(); ++e) {
        if (!c.edge_dilated[e]) continue;
        const int a = T.edges[e].a, b = T.edges[e].b;
        if (c.flow[a] >= 0 && c.flow[b] >= 0 && (c.flow[a] + c.flow[b]) % p != 0)
            flag("flow_antisymmetry", "flows " + std::to_string(c.flow[a]) + "," +
                                          std::to_string(c.flow[b]) + " on edge " + std::to_string(e) +
                                          " do not sum to 0 mod p");
    }
    for (int v : T.vertices) {
        if (!c.vertex_dilated[v]) continue;
        long long sum = 0;
        int d = 0;
        bool defined = true;
        for (int h = 0; h < T.num_cells; ++h) {
            if (h == v || T.root[h] != v || !c.edge_dilated[T.edge_of[h]]) continue;
            ++d;
            if (c.flow[h] < 0)
                defined = false;
            else
                sum += c.flow[h];
        }
        if (defined && sum % p != 0)
            flag("balance", "dilated half-edge flows at vertex " + std::to_string(v) + " sum to " +
                                std::to_string(sum % p) + " mod p (d(v) = " + std::to_string(d) +
                                (d == 1 ? "; a single dilated half-edge can never balance)" : ")"));
    }
    for (int e = 0; e < T.num_edges(); ++e) {
        const bool ff = c.edge_is_free_free(e);
        if (ff) {
            if (c.gain[e].tail < 0) {
                flag("gain_missing", "free-free edge " + std::to_string(e) + " has no gain");
                placement_ok = false;
            } else if (c.gain[e].value < 0 || c.gain[e].value >= p) {
                flag("gain_range", "gain on edge " + std::to_string(e) + " is outside 0..p-1");
                placement_ok = false;
            }
        } else if (c.gain[e].tail >= 0) {
            flag("gain_placement",
                 "edge " + std::to_string(e) + " with a dilated end carries a gain");
            placement_ok = false;
        }
    }
    for (int v : T.vertices) {
        if (!c.vertex_dilated[v]) continue;
        const int d = c.dilated_degree(v);
        const int sg = p * (T.genus[v] - 1) + 1 + d * (p - 1) / 2;
        if (sg < 0) {
            flag("source_vertex_genus", "source vertex over " + std::to_string(v) +
                                            " would have genus " + std::to_string(sg));
            placement_ok = false;
        }
    }
    if (placement_ok) {
        const SourceGraph src = build_source(c);
        if (!is_connected(src.graph)) flag("source_connected", "source graph is disconnected");
        if (!is_stable(src.graph)) flag("source_stable", "source graph is not stable");
    }
    return rep;
}

SourceGraph build_source(const PCover& c) {
    const auto& T = c.target;
    const int p = c.p;
    auto cell_dilated = [&](int x) {
        return T.is_vertex[x] ? c.vertex_dilated[x] != 0 : c.edge_dilated[T.edge_of[x]] != 0;
    };
    for (int e = 0; e < T.num_edges(); ++e) {
        auto [u, w] = T.endpoints(e);
        if (c.edge_dilated[e] && (!c.vertex_dilated[u] || !c.vertex_dilated[w]))
            fail(Errc::invalid_cover, "dilated edge " + std::to_string(e) + " has a free endpoint");
    }

    SourceGraph out;
    std::vector<int> base(T.num_cells);
    int total = 0;
    for (int x = 0; x < T.num_cells; ++x) {
        base[x] = total;
        total += cell_dilated(x) ? 1 : p;
    }
    auto cell = [&](int x, int m) { return cell_dilated(x) ? base[x] : base[x] + m; };

    out.to_target.assign(total, -1);
    out.copy_index.assign(total, -1);
    out.fiber.assign(T.num_cells, {});
    for (int x = 0; x < T.num_cells; ++x) {
        const int k = cell_dilated(x) ? 1 : p;
        for (int m = 0; m < k; ++m) {
            out.to_target[base[x] + m] = x;
            out.copy_index[base[x] + m] = cell_dilated(x) ? -1 : m;
            out.fiber[x].push_back(base[x] + m);
        }
    }

    std::vector<int> inv(total, -1), root(total, -1);
    std::map<int, int> genus;
    for (int v : T.vertices) {
        if (cell_dilated(v)) {
            inv[cell(v, 0)] = cell(v, 0);
            root[cell(v, 0)] = cell(v, 0);
            genus[cell(v, 0)] = source_vertex_genus(c, v);
        } else {
            for (int m = 0; m < p; ++m) {
                inv[cell(v, m)] = cell(v, m);
                root[cell(v, m)] = cell(v, m);
                genus[cell(v, m)] = T.genus[v];
            }
        }
    }
    for (int e = 0; e < T.num_edges(); ++e) {
        const int a = T.edges[e].a, b = T.edges[e].b;
        if (c.edge_dilated[e]) {
            inv[cell(a, 0)] = cell(b, 0);
            inv[cell(b, 0)] = cell(a, 0);
        } else if (c.edge_is_free_free(e)) {
            const int t = c.gain[e].tail, x = c.gain[e].value;
            for (int m = 0; m < p; ++m) {
                inv[cell(t, m)] = cell(T.inv[t], (m + x) % p);
                inv[cell(T.inv[t], (m + x) % p)] = cell(t, m);
            }
        } else {
            for (int m = 0; m < p; ++m) {
                inv[cell(a, m)] = cell(b, m);
                inv[cell(b, m)] = cell(a, m);
            }
        }
    }
    for (int h = 0; h < T.num_cells; ++h) {
        if (T.is_vertex[h]) continue;
        const int v = T.root[h];
        if (cell_dilated(h)) {
            root[cell(h, 0)] = cell(v, 0);
        } else {
            for (int m = 0; m < p; ++m) root[cell(h, m)] = cell_dilated(v) ? cell(v, 0) : cell(v, m);
        }
    }
    out.graph = build_graph(inv, root, genus);

    out.action.assign(total, -1);
    for (int x = 0; x < T.num_cells; ++x) {
        if (cell_dilated(x)) {
            out.action[cell(x, 0)] = cell(x, 0);
        } else {
            for (int m = 0; m < p; ++m) out.action[cell(x, m)] = cell(x, (m + 1) % p);
        }
    }

    // Local degree identity at every source vertex, recomputed from the
    // constructed graph rather than trusted from the genus formula.
    for (int sv : out.graph.vertices) {
        const int v = out.to_target[sv];
        const int dv = cell_dilated(v) ? p : 1;
        long long rhs = static_cast<long long>(dv) * (2 * T.genus[v] - 2);
        for (int sh : tangent_halfedges(out.graph, sv))
            rhs += (cell_dilated(out.to_target[sh]) ? p : 1) - 1;
        if (2 * out.graph.genus[sv] - 2 != rhs)
            fail(Errc::internal, "local degree identity fails at source vertex " + std::to_string(sv));
    }
    return out;
}

PCover switch_gains(const PCover& c, int v, int amount) {
    const auto& T = c.target;
    if (v < 0 || v >= T.num_cells || !T.is_vertex[v])
        fail(Errc::unknown_vertex, "no vertex " + std::to_string(v));
    if (c.vertex_dilated[v])
        fail(Errc::dilated_vertex_switch, "cannot switch at dilated vertex " + std::to_string(v));
    PCover out = c;
    const int a = mod_p(amount, c.p);
    for (int e = 0; e < T.num_edges(); ++e) {
        if (out.gain[e].tail < 0) continue;
        const int u = T.root[out.gain[e].tail];
        const int w = T.root[T.inv[out.gain[e].tail]];
        int val = out.gain[e].value;
        if (u == v) val -= a;
        if (w == v) val += a;
        out.gain[e].value = mod_p(val, c.p);
    }
    return out;
}

int cycle_ascent(const PCover& c, const std::vector<int>& walk) {
    const auto& T = c.target;
    if (walk.empty()) fail(Errc::invalid_cover, "empty walk");
    long long total = 0;
    for (std::size_t i = 0; i < walk.size(); ++i) {
        const int h = walk[i];
        if (h < 0 || h >= T.num_cells || T.is_vertex[h])
            fail(Errc::unknown_edge, "walk entry " + std::to_string(h) + " is not a half-edge");
        const int e = T.edge_of[h];
        if (c.edge_dilated[e] || c.vertex_dilated[T.root[h]] || c.vertex_dilated[T.root[T.inv[h]]])
            fail(Errc::walk_through_dilated_cell, "walk passes through a dilated cell");
        const int next = walk[(i + 1) % walk.size()];
        if (T.root[T.inv[h]] != T.root[next])
            fail(Errc::invalid_cover, "walk is not a contiguous closed walk");
        total += c.oriented_gain(h);
    }
    return mod_p(total, c.p);
}

namespace {

// Colors encoding every decoration except gains: vertices by dilation,
// half-edges by their edge's dilation and flow.
std::vector<std::int64_t> structural_colors(const PCover& c) {
    std::vector<std::int64_t> col(c.target.num_cells, 0);
    for (int x = 0; x < c.target.num_cells; ++x) {
        if (c.target.is_vertex[x])
            col[x] = c.vertex_dilated[x] ? 1 : 0;
        else
            col[x] = c.edge_dilated[c.target.edge_of[x]] ? 2 + c.flow[x] : 1;
    }
    return col;
}

// Zeroes the gains along a spanning forest of the free-free subgraph by one
// simultaneous switching; deterministic for a fixed labeling.
PCover forest_gauge_fix(const PCover& c) {
    const auto& T = c.target;
    UnionFind uf(T.num_cells);
    std::vector<std::vector<std::pair<int, int>>> adj(T.num_cells); // vertex -> (edge, other end)
    for (int e = 0; e < T.num_edges(); ++e) {
        if (!c.edge_is_free_free(e)) continue;
        auto [u, w] = T.endpoints(e);
        if (u != w && uf.unite(u, w)) {
            adj[u].push_back({e, w});
            adj[w].push_back({e, u});
        }
    }
    std::vector<int> s(T.num_cells, -1);
    for (int v : T.vertices) {
        if (c.vertex_dilated[v] || s[v] >= 0) continue;
        s[v] = 0;
        std::deque<int> queue{v};
        while (!queue.empty()) {
            const int u = queue.front();
            queue.pop_front();
            for (auto [e, w] : adj[u]) {
                if (s[w] >= 0) continue;
                // Want the new gain of e, oriented from its tail, to be 0.
                const int tail_root = T.root[c.gain[e].tail];
                const int x = c.gain[e].value;
                s[w] = tail_root == u ? mod_p(s[u] - x, c.p) : mod_p(s[u] + x, c.p);
                queue.push_back(w);
            }
        }
    }
    PCover out = c;
    for (int e = 0; e < T.num_edges(); ++e) {
        if (out.gain[e].tail < 0) continue;
        const int u = T.root[out.gain[e].tail];
        const int w = T.root[T.inv[out.gain[e].tail]];
        out.gain[e].value = mod_p(out.gain[e].value - s[u] + s[w], c.p);
    }
    return out;
}

std::vector<std::int64_t> gauge_fixed_gain_bytes(const PCover& relabeled) {
    const PCover fixed = forest_gauge_fix(relabeled);
    std::vector<std::int64_t> bytes;
    for (int e = 0; e < fixed.target.num_edges(); ++e)
        if (fixed.gain[e].tail >= 0) bytes.push_back(fixed.gain[e].value);
    return bytes;
}

} // namespace

PCover apply_cover_permutation(const PCover& c, const std::vector<int>& perm) {
    const auto& T = c.target;
    WeightedGraph nt = apply_permutation(T, perm);
    std::vector<int> dv, de;
    std::vector<std::pair<int, int>> flows;
    std::vector<std::pair<int, GainSpec>> gains;
    for (int v : T.vertices)
        if (c.vertex_dilated[v]) dv.push_back(perm[v]);
    for (int e = 0; e < T.num_edges(); ++e) {
        const int ne = nt.edge_of[perm[T.edges[e].a]];
        if (c.edge_dilated[e]) de.push_back(ne);
        if (c.gain[e].tail >= 0) gains.push_back({ne, GainSpec{perm[c.gain[e].tail], c.gain[e].value}});
    }
    for (int h = 0; h < T.num_cells; ++h)
        if (!T.is_vertex[h] && c.flow[h] >= 0) flows.push_back({perm[h], c.flow[h]});
    return make_cover(std::move(nt), c.p, dv, de, flows, gains);
}

CoverCanon canonical_form(const PCover& c) {
    const auto canon = canonical_labeling(c.target, structural_colors(c));
    CoverCanon best;
    bool have = false;
    for (const auto& perm : canon.min_perms) {
        const PCover relabeled = apply_cover_permutation(c, perm);
        CanonKey full = canon.key;
        full.v.push_back(-1); // separator between structure and gain data
        const auto gains = gauge_fixed_gain_bytes(relabeled);
        full.v.insert(full.v.end(), gains.begin(), gains.end());
        if (!have || full < best.key) {
            best.key = std::move(full);
            best.perm = perm;
            have = true;
        }
    }
    return best;
}

PCover canonical_cover(const PCover& c) {
    const auto canon = canonical_form(c);
    return forest_gauge_fix(apply_cover_permutation(c, canon.perm));
}

bool isomorphic(const PCover& a, const PCover& b) {
    if (a.p != b.p)
        fail(Errc::prime_mismatch, "covers have different group orders " + std::to_string(a.p) +
                                       " and " + std::to_string(b.p));
    return canonical_form(a).key == canonical_form(b).key;
}

EdgeAutGroup automorphism_edge_group(const PCover& c) {
    const auto& T = c.target;
    const auto canon = canonical_labeling(T, structural_colors(c));
    // Keep the labelings whose gauge-fixed gains realize the minimum: those
    // form the coset of cover automorphisms over the structural coset.
    std::vector<std::vector<std::int64_t>> gain_bytes;
    gain_bytes.reserve(canon.min_perms.size());
    for (const auto& perm : canon.min_perms)
        gain_bytes.push_back(gauge_fixed_gain_bytes(apply_cover_permutation(c, perm)));
    const auto min_gain = *std::min_element(gain_bytes.begin(), gain_bytes.end());

    EdgeAutGroup out;
    std::vector<std::vector<int>> winners;
    for (std::size_t i = 0; i < canon.min_perms.size(); ++i)
        if (gain_bytes[i] == min_gain) winners.push_back(canon.min_perms[i]);
    out.target_iso_count = static_cast<long long>(winners.size());

    const auto base_inv = invert_perm(winners.front());
    std::vector<std::vector<int>> edge_perms;
    for (const auto& w : winners) {
        const auto f = compose_perm(base_inv, w);
        std::vector<int> ep(T.num_edges());
        for (int e = 0; e < T.num_edges(); ++e) ep[e] = T.edge_of[f[T.edges[e].a]];
        edge_perms.push_back(ep);
    }
    std::sort(edge_perms.begin(), edge_perms.end());
    edge_perms.erase(std::unique(edge_perms.begin(), edge_perms.end()), edge_perms.end());
    out.edge_perms = std::move(edge_perms);

    UnionFind uf(T.num_cells);
    auto cell_free = [&](int x) {
        return T.is_vertex[x] ? !c.vertex_dilated[x] : !c.edge_dilated[T.edge_of[x]];
    };
    for (int x = 0; x < T.num_cells; ++x) {
        if (!cell_free(x)) continue;
        if (cell_free(T.inv[x])) uf.unite(x, T.inv[x]);
        if (cell_free(T.root[x])) uf.unite(x, T.root[x]);
    }
    std::vector<int> roots;
    for (int x = 0; x < T.num_cells; ++x)
        if (cell_free(x)) roots.push_back(uf.find(x));
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    out.free_component_count = static_cast<int>(roots.size());

    out.total_order = out.target_iso_count;
    for (int i = 0; i < out.free_component_count; ++i) out.total_order *= c.p;
    return out;
}

CoverContraction contract(const PCover& c0, int e) {
    const auto& T0 = c0.target;
    if (e < 0 || e >= T0.num_edges()) fail(Errc::unknown_edge, "no edge " + std::to_string(e));
    PCover c = c0;
    const int a = T0.edges[e].a, b = T0.edges[e].b;
    const int va = T0.root[a], vb = T0.root[b];
    const bool loop = va == vb;

    bool merged_dilated;
    if (c.edge_dilated[e]) {
        merged_dilated = true;
    } else if (!loop) {
        if (!c.vertex_dilated[va] && !c.vertex_dilated[vb]) {
            // Re-gauge so the contracted edge has gain zero; this transports
            // the gains of every other edge at the far endpoint coherently.
            const int w = T0.root[T0.inv[c.gain[e].tail]];
            const int x = c.gain[e].value;
            if (x != 0) c = switch_gains(c, w, -x);
            merged_dilated = false;
        } else {
            merged_dilated = true;
        }
    } else {
        merged_dilated = c.vertex_dilated[va] || c.gain[e].value != 0;
    }

    const Contraction ct = contract_edge(c.target, e);
    std::vector<int> dv, de;
    std::vector<std::pair<int, int>> flows;
    std::vector<std::pair<int, GainSpec>> gains;
    std::vector<char> new_vertex_dilated(ct.graph.num_cells, 0);
    for (int v : c.target.vertices) {
        const int nv = ct.cell_map[v];
        if (nv < 0) continue;
        const bool dil = nv == ct.merged_vertex ? merged_dilated : c.vertex_dilated[v] != 0;
        if (dil) {
            dv.push_back(nv);
            new_vertex_dilated[nv] = 1;
        }
    }
    for (int f = 0; f < c.target.num_edges(); ++f) {
        if (f == e) continue;
        const int nf = ct.edge_map[f];
        if (c.edge_dilated[f]) de.push_back(nf);
        if (c.gain[f].tail >= 0) {
            // Keep the gain only if the edge still has two free endpoints.
            const int u = ct.graph.root[ct.graph.edges[nf].a];
            const int w = ct.graph.root[ct.graph.edges[nf].b];
            if (!c.edge_dilated[f] && !new_vertex_dilated[u] && !new_vertex_dilated[w])
                gains.push_back({nf, GainSpec{ct.cell_map[c.gain[f].tail], c.gain[f].value}});
        }
    }
    for (int h = 0; h < c.target.num_cells; ++h) {
        if (c.target.is_vertex[h] || c.flow[h] < 0) continue;
        if (ct.cell_map[h] >= 0 && c.target.edge_of[h] != e) flows.push_back({ct.cell_map[h], c.flow[h]});
    }

    CoverContraction out;
    out.cover = make_cover(ct.graph, c.p, dv, de, flows, gains);
    out.cell_map = ct.cell_map;
    out.edge_map = ct.edge_map;
    out.merged_vertex = ct.merged_vertex;
    return out;
}

} // namespace tcov
