// Census enumeration: stable weighted graphs by genus and edge count, the
// valid p-covers of each target (dilated subsets, balanced flows, gauge-fixed
// gains), and the per-dimension cell lists, all deduplicated by canonical
// form.
#include "tcov/census.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace tcov {

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[a] = b;
        return true;
    }
};

// Minimal genus a vertex of the given valence needs for stability.
int min_genus_for_valence(int val) { return val >= 3 ? 0 : 1; }

void count_candidate(long long& used, long long cap) {
    if (++used > cap) fail(Errc::resource_budget_exceeded, "enumeration candidate cap exceeded");
}

// Enumerates multisets of k edges over the unordered vertex pairs of [V]
// (loops included) and, for the connected stable-capable ones, all genus
// assignments summing to total_genus; collects deduplicated graphs.
struct GraphEnum {
    int V, k, total_genus;
    long long cap;
    long long used = 0;
    std::vector<std::pair<int, int>> pairs; // all unordered pairs, loops first per vertex
    std::vector<int> chosen;                // indices into pairs, non-decreasing
    std::map<CanonKey, WeightedGraph>& out;

    void run() {
        pairs.clear();
        for (int i = 0; i < V; ++i)
            for (int j = i; j < V; ++j) pairs.push_back({i, j});
        chosen.assign(k, 0);
        pick(0, 0);
    }

    void pick(int slot, int min_pair) {
        if (slot == k) {
            finish();
            return;
        }
        for (int pr = min_pair; pr < static_cast<int>(pairs.size()); ++pr) {
            chosen[slot] = pr;
            pick(slot + 1, pr);
        }
    }

    void finish() {
        count_candidate(used, cap);
        std::vector<int> valence(V, 0);
        UnionFind uf(V);
        for (int pr : chosen) {
            auto [a, b] = pairs[pr];
            if (a == b) {
                valence[a] += 2;
            } else {
                valence[a] += 1;
                valence[b] += 1;
                uf.unite(a, b);
            }
        }
        int components = 0;
        for (int v = 0; v < V; ++v)
            if (uf.find(v) == v) ++components;
        if (components != 1) return;
        int min_total = 0;
        for (int v = 0; v < V; ++v) {
            if (valence[v] == 0) return; // isolated vertex (V > 1 here)
            min_total += min_genus_for_valence(valence[v]);
        }
        if (min_total > total_genus) return;
        std::vector<int> genus(V, 0);
        assign_genus(0, total_genus, genus, valence);
    }

    void assign_genus(int v, int remaining, std::vector<int>& genus,
                      const std::vector<int>& valence) {
        if (v == V) {
            if (remaining == 0) emit(genus);
            return;
        }
        int tail_min = 0;
        for (int w = v + 1; w < V; ++w) tail_min += min_genus_for_valence(valence[w]);
        for (int gv = min_genus_for_valence(valence[v]); gv <= remaining - tail_min; ++gv) {
            genus[v] = gv;
            assign_genus(v + 1, remaining - gv, genus, valence);
        }
    }

    void emit(const std::vector<int>& genus) {
        GraphBuilder b;
        for (int v = 0; v < V; ++v) b.add_vertex(genus[v]);
        for (int pr : chosen) b.add_edge(pairs[pr].first, pairs[pr].second);
        WeightedGraph g = b.build();
        CanonKey key = canonical_labeling(g).key;
        out.emplace(std::move(key), std::move(g));
    }
};

std::uint64_t fnv1a(const CanonKey& key) {
    std::uint64_t h = 1469598103934665603ull;
    for (std::int64_t v : key.v) {
        for (int byte = 0; byte < 8; ++byte) {
            h ^= static_cast<std::uint64_t>(v >> (8 * byte)) & 0xff;
            h *= 1099511628211ull;
        }
    }
    return h;
}

std::string shape_tag(const WeightedGraph& g) {
    const int V = g.num_vertices(), E = g.num_edges();
    if (V == 1) {
        if (E == 0) return "vertex";
        if (E == 1) return "loop";
        if (E == 2) return "figure-eight";
        return "rose" + std::to_string(E);
    }
    if (V == 2) {
        int loops0 = 0, loops1 = 0, par = 0;
        for (int e = 0; e < E; ++e) {
            auto [u, w] = g.endpoints(e);
            if (u == w)
                (u == g.vertices[0] ? loops0 : loops1) += 1;
            else
                ++par;
        }
        const int lo = std::min(loops0, loops1), hi = std::max(loops0, loops1);
        if (E == 1 && par == 1) return "bridge";
        if (par == 1 && hi == 1 && lo == 0) return "lollipop";
        if (par == 1 && hi == 1 && lo == 1) return "dumbbell";
        if (par == 2 && hi == 0) return "banana";
        if (par == 3 && hi == 0) return "theta";
    }
    // Generic fallback: hash of the genus-blind canonical shape.
    WeightedGraph bare = g;
    for (int v : bare.vertices) bare.genus[v] = 0;
    std::ostringstream os;
    os << "v" << V << "e" << E << "x" << std::hex << (fnv1a(canonical_labeling(bare).key) & 0xffffff);
    return os.str();
}

} // namespace

std::string target_name(const WeightedGraph& g) {
    // Genera listed in canonical vertex order, so isomorphic targets agree.
    const auto canon = canonical_labeling(g);
    std::vector<std::pair<int, int>> labeled; // (canonical label, genus)
    for (int v : g.vertices) labeled.push_back({canon.perm[v], g.genus[v]});
    std::sort(labeled.begin(), labeled.end());
    std::string name = shape_tag(g) + "[";
    for (std::size_t i = 0; i < labeled.size(); ++i) {
        if (i) name += ",";
        name += std::to_string(labeled[i].second);
    }
    return name + "]";
}

std::vector<WeightedGraph> stable_weighted_graphs(int g, int k, const CensusBudget& budget) {
    if (g < 2) fail(Errc::invalid_cover, "genus must be at least 2");
    if (k < 1) fail(Errc::unknown_edge, "edge count must be at least 1");
    std::map<CanonKey, WeightedGraph> found;
    long long used = 0;
    for (int V = 1; V <= k + 1; ++V) {
        const int b1 = k - V + 1;
        if (b1 < 0 || b1 > g) continue;
        GraphEnum en{V, k, g - b1, budget.max_graph_candidates, used, {}, {}, found};
        en.run();
        used = en.used;
    }
    std::vector<WeightedGraph> out;
    out.reserve(found.size());
    for (auto& [key, graph] : found)
        if (is_stable(graph)) out.push_back(std::move(graph));
    return out;
}

namespace {

// Enumerates all valid covers of one target for fixed dilated sets, flows
// assigned edge-by-edge with balance pruning, then gauge-fixed gains.
struct CoverEnum {
    const WeightedGraph& T;
    int p;
    long long cap;
    long long& used;
    std::map<CanonKey, PCover>& out;

    std::vector<char> vdil;       // per cell
    std::vector<int> dil_edges;   // edge indices
    std::vector<int> flow_val;    // per dilated edge (parallel to dil_edges), value on .a
    std::vector<int> gain_slots;  // free-free edges that are not forest edges
    std::vector<char> forest_edge;

    void run_dilated_choice(const std::vector<int>& dv_list) {
        vdil.assign(T.num_cells, 0);
        for (int v : dv_list) vdil[v] = 1;
        // A dilated vertex with exactly one dilated half-edge can never
        // balance; with zero it needs source genus >= 0 (validate decides).
        std::vector<int> eligible;
        for (int e = 0; e < T.num_edges(); ++e) {
            auto [u, w] = T.endpoints(e);
            if (vdil[u] && vdil[w]) eligible.push_back(e);
        }
        const int m = static_cast<int>(eligible.size());
        for (int mask = 0; mask < (1 << m); ++mask) {
            dil_edges.clear();
            for (int i = 0; i < m; ++i)
                if (mask & (1 << i)) dil_edges.push_back(eligible[i]);
            if (!dilated_degrees_plausible()) continue;
            flow_val.assign(dil_edges.size(), 0);
            assign_flow(0);
        }
    }

    bool dilated_degrees_plausible() const {
        for (int v : T.vertices) {
            if (!vdil[v]) continue;
            int d = 0;
            for (int h : tangent_halfedges(T, v))
                if (std::find(dil_edges.begin(), dil_edges.end(), T.edge_of[h]) != dil_edges.end())
                    ++d;
            if (d == 1) return false; // a single nowhere-zero flow cannot balance
            if (static_cast<long long>(p) * (T.genus[v] - 1) + 1 +
                    static_cast<long long>(d) * (p - 1) / 2 <
                0)
                return false; // source vertex genus would be negative
        }
        return true;
    }

    bool edge_is_dilated(int e) const {
        return std::find(dil_edges.begin(), dil_edges.end(), e) != dil_edges.end();
    }

    // True when every dilated half-edge at v lies on an edge already assigned
    // (index < upto in dil_edges).
    bool vertex_complete(int v, int upto) const {
        for (int h : tangent_halfedges(T, v)) {
            const int e = T.edge_of[h];
            if (!edge_is_dilated(e)) continue;
            const auto it = std::find(dil_edges.begin(), dil_edges.end(), e);
            if (static_cast<int>(it - dil_edges.begin()) >= upto) return false;
        }
        return true;
    }

    long long balance_sum(int v, int upto) const {
        long long sum = 0;
        for (int i = 0; i < upto; ++i) {
            const int e = dil_edges[i];
            const int a = T.edges[e].a, b = T.edges[e].b;
            if (T.root[a] == v) sum += flow_val[i];
            if (T.root[b] == v) sum += p - flow_val[i];
        }
        return sum;
    }

    void assign_flow(std::size_t i) {
        if (i == dil_edges.size()) {
            enumerate_gains();
            return;
        }
        for (int f = 1; f < p; ++f) {
            flow_val[i] = f;
            bool ok = true;
            // Check balance at any vertex whose dilated star is now fully
            // assigned (both endpoints of edge i are candidates).
            const int e = dil_edges[i];
            for (int v : {T.root[T.edges[e].a], T.root[T.edges[e].b]}) {
                if (vertex_complete(v, static_cast<int>(i) + 1) &&
                    balance_sum(v, static_cast<int>(i) + 1) % p != 0) {
                    ok = false;
                    break;
                }
            }
            if (ok) assign_flow(i + 1);
        }
    }

    void enumerate_gains() {
        // Spanning forest of the free-free subgraph gets gain 0; every other
        // free-free edge ranges over 0..p-1.
        UnionFind uf(T.num_cells);
        gain_slots.clear();
        forest_edge.assign(T.num_edges(), 0);
        for (int e = 0; e < T.num_edges(); ++e) {
            if (edge_is_dilated(e)) continue;
            auto [u, w] = T.endpoints(e);
            if (vdil[u] || vdil[w]) continue;
            if (u != w && uf.unite(u, w))
                forest_edge[e] = 1;
            else
                gain_slots.push_back(e);
        }
        std::vector<int> gains(gain_slots.size(), 0);
        assign_gain(0, gains);
    }

    void assign_gain(std::size_t i, std::vector<int>& gains) {
        if (i == gain_slots.size()) {
            finish(gains);
            return;
        }
        for (int x = 0; x < p; ++x) {
            gains[i] = x;
            assign_gain(i + 1, gains);
        }
    }

    void finish(const std::vector<int>& gains) {
        count_candidate(used, cap);
        std::vector<int> dv;
        for (int v : T.vertices)
            if (vdil[v]) dv.push_back(v);
        std::vector<std::pair<int, int>> flows;
        for (std::size_t i = 0; i < dil_edges.size(); ++i)
            flows.push_back({T.edges[dil_edges[i]].a, flow_val[i]});
        std::vector<std::pair<int, GainSpec>> gainspecs;
        for (int e = 0; e < T.num_edges(); ++e)
            if (forest_edge[e]) gainspecs.push_back({e, GainSpec{T.edges[e].a, 0}});
        for (std::size_t i = 0; i < gain_slots.size(); ++i)
            gainspecs.push_back({gain_slots[i], GainSpec{T.edges[gain_slots[i]].a, gains[i]}});
        PCover c = make_cover(T, p, dv, dil_edges, flows, gainspecs);
        if (!validate(c).ok()) return;
        CoverCanon canon = canonical_form(c);
        if (out.count(canon.key)) return;
        out.emplace(std::move(canon.key), canonical_cover(c));
    }
};

} // namespace

std::vector<PCover> covers_of(const WeightedGraph& target, int p, const CensusBudget& budget) {
    if (!is_prime(p)) fail(Errc::not_prime, "p = " + std::to_string(p) + " is not prime");
    if (!is_connected(target)) fail(Errc::disconnected_graph, "target graph is disconnected");
    if (!is_stable(target)) fail(Errc::invalid_cover, "target graph is not stable");
    std::map<CanonKey, PCover> found;
    long long used = 0;
    const int V = target.num_vertices();
    for (int mask = 0; mask < (1 << V); ++mask) {
        std::vector<int> dv;
        for (int i = 0; i < V; ++i)
            if (mask & (1 << i)) dv.push_back(target.vertices[i]);
        CoverEnum en{target, p, budget.max_cover_candidates, used, found, {}, {}, {}, {}, {}};
        en.run_dilated_choice(dv);
    }
    std::vector<PCover> out;
    out.reserve(found.size());
    for (auto& [key, cover] : found) out.push_back(std::move(cover));
    return out;
}

CensusLevel census_level(int g, int p, int n, const CensusBudget& budget) {
    if (n < 0 || n > 3 * g - 4) fail(Errc::unknown_cell, "dimension out of range for this genus");
    CensusLevel level;
    level.genus = g;
    level.p = p;
    level.n = n;
    std::map<CanonKey, std::pair<PCover, std::string>> merged;
    for (const WeightedGraph& target : stable_weighted_graphs(g, n + 1, budget)) {
        const std::string name = target_name(target);
        for (PCover& c : covers_of(target, p, budget)) {
            CanonKey key = canonical_form(c).key;
            merged.emplace(std::move(key), std::make_pair(std::move(c), name));
        }
    }
    for (auto& [key, entry] : merged) {
        level.orbit_reps.push_back(std::move(entry.first));
        level.counts_by_target[entry.second] += 1;
    }
    return level;
}

std::vector<CensusLevel> all_cells(int g, int p, const CensusBudget& budget) {
    std::vector<CensusLevel> out;
    for (int n = 0; n <= 3 * g - 4; ++n) out.push_back(census_level(g, p, n, budget));
    return out;
}

} // namespace tcov
