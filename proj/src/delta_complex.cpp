// Complex assembly: orbit cells with their label stabilizers, face maps by
// single-edge contraction with aligning permutations and signs, the rational
// chain model over alternating orbits, Betti numbers, and downward closures.
#include "tcov/delta_complex.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace tcov {

long long DeltaComplex::cell_count() const {
    long long total = 0;
    for (const auto& level : levels) total += static_cast<long long>(level.size());
    return total;
}

bool DeltaComplex::empty() const { return cell_count() == 0; }

PCover relabel_edges(const PCover& c, const std::vector<int>& order) {
    const auto& T = c.target;
    const int E = T.num_edges();
    if (static_cast<int>(order.size()) != E)
        fail(Errc::not_injective, "edge order has wrong length");
    std::vector<char> seen(E, 0);
    for (int e : order) {
        if (e < 0 || e >= E || seen[e]) fail(Errc::not_injective, "edge order is not a bijection");
        seen[e] = 1;
    }
    // New layout: vertices first (current relative order), then the half-edge
    // pair of old edge order[j] at positions V+2j, V+2j+1.
    std::vector<int> perm(T.num_cells, -1);
    int next = 0;
    for (int v : T.vertices) perm[v] = next++;
    for (int j = 0; j < E; ++j) {
        const Edge& e = T.edges[order[j]];
        perm[e.a] = next++;
        perm[e.b] = next++;
    }
    return apply_cover_permutation(c, perm);
}

PCover face(const PCover& cell, const std::vector<int>& theta) {
    const int E = cell.target.num_edges();
    std::vector<char> keep(E, 0);
    for (int e : theta) {
        if (e < 0 || e >= E || keep[e]) fail(Errc::not_injective, "face injection is invalid");
        keep[e] = 1;
    }
    // Contract the complementary edges one by one, tracking where the
    // surviving old labels go.
    PCover current = cell;
    std::vector<int> where(E); // old edge -> current index, -1 once contracted
    for (int e = 0; e < E; ++e) where[e] = e;
    for (int e = 0; e < E; ++e) {
        if (keep[e]) continue;
        CoverContraction step = contract(current, where[e]);
        for (int f = 0; f < E; ++f)
            if (where[f] >= 0) where[f] = step.edge_map[where[f]];
        current = std::move(step.cover);
    }
    std::vector<int> order(theta.size());
    for (std::size_t j = 0; j < theta.size(); ++j) order[j] = where[theta[j]];
    return relabel_edges(current, order);
}

namespace {

// Edge bijection induced by an isomorphism `from` -> `to` routed through the
// shared canonical labeling: `to_canonical` takes cells of `from` onto the
// canonical cover, `from_canonical` takes canonical cells onto `to`.  Edge j
// of `from` is edge out[j] of `to`.
std::vector<int> induced_edge_map(const PCover& from, const std::vector<int>& to_canonical,
                                  const std::vector<int>& from_canonical, const PCover& to) {
    std::vector<int> out(from.target.num_edges(), -1);
    for (int j = 0; j < from.target.num_edges(); ++j)
        out[j] = to.target.edge_of[from_canonical[to_canonical[from.target.edges[j].a]]];
    return out;
}

bool all_even(const std::vector<std::vector<int>>& perms) {
    for (const auto& p : perms)
        if (permutation_sign(p) < 0) return false;
    return true;
}

} // namespace

DeltaComplex assemble(const std::vector<CensusLevel>& census) {
    DeltaComplex X;
    if (census.empty()) return X;
    X.genus = census.front().genus;
    X.p = census.front().p;
    X.levels.resize(census.size());
    X.faces.resize(census.size());
    std::vector<std::map<CanonKey, int>> index(census.size());
    // Inverse of each representative's canonical witness relabeling, so faces
    // can be aligned with the representative as actually labeled.
    std::vector<std::vector<std::vector<int>>> from_canonical(census.size());
    for (std::size_t n = 0; n < census.size(); ++n) {
        if (census[n].n != static_cast<int>(n))
            fail(Errc::missing_face, "census levels must cover dimensions 0..top contiguously");
        for (const PCover& rep : census[n].orbit_reps) {
            OrbitCell cell;
            cell.dimension = static_cast<int>(n);
            cell.representative = rep;
            cell.edge_stabilizer = automorphism_edge_group(rep).edge_perms;
            cell.is_alternating = all_even(cell.edge_stabilizer);
            const CoverCanon canon = canonical_form(rep);
            index[n].emplace(canon.key, static_cast<int>(X.levels[n].size()));
            std::vector<int> inv(canon.perm.size(), -1);
            for (std::size_t c = 0; c < canon.perm.size(); ++c) inv[canon.perm[c]] = static_cast<int>(c);
            from_canonical[n].push_back(std::move(inv));
            X.levels[n].push_back(std::move(cell));
        }
    }
    for (std::size_t n = 1; n < X.levels.size(); ++n) {
        X.faces[n].resize(X.levels[n].size());
        for (std::size_t idx = 0; idx < X.levels[n].size(); ++idx) {
            const PCover& rep = X.levels[n][idx].representative;
            for (int i = 0; i <= static_cast<int>(n); ++i) {
                std::vector<int> theta;
                for (int j = 0; j <= static_cast<int>(n); ++j)
                    if (j != i) theta.push_back(j);
                PCover contracted = face(rep, theta);
                const CoverCanon canon = canonical_form(contracted);
                auto it = index[n - 1].find(canon.key);
                if (it == index[n - 1].end())
                    fail(Errc::missing_face, "contraction of a census cell is not in the census");
                FaceRef ref;
                ref.target = it->second;
                ref.align = induced_edge_map(contracted, canon.perm,
                                             from_canonical[n - 1][ref.target],
                                             X.levels[n - 1][ref.target].representative);
                ref.sign = permutation_sign(ref.align);
                X.faces[n][idx].push_back(std::move(ref));
            }
        }
    }
    if (!X.faces.empty()) X.faces[0].assign(X.levels[0].size(), {});
    return X;
}

namespace {

// Positions of alternating cells at one level, and the dense reindexing.
std::vector<int> alternating_positions(const DeltaComplex& X, int n) {
    std::vector<int> pos;
    if (n < 0 || n > X.dimension()) return pos;
    for (std::size_t i = 0; i < X.levels[n].size(); ++i)
        if (X.levels[n][i].is_alternating) pos.push_back(static_cast<int>(i));
    return pos;
}

} // namespace

IntMatrix boundary_matrix(const DeltaComplex& X, int n) {
    const std::vector<int> rows = alternating_positions(X, n - 1);
    const std::vector<int> cols = alternating_positions(X, n);
    std::vector<int> row_of(n >= 1 && n - 1 <= X.dimension() ? X.levels[n - 1].size() : 0, -1);
    for (std::size_t r = 0; r < rows.size(); ++r) row_of[rows[r]] = static_cast<int>(r);
    IntMatrix m(rows.size(), std::vector<std::int64_t>(cols.size(), 0));
    if (rows.empty() || cols.empty()) return m;
    for (std::size_t c = 0; c < cols.size(); ++c) {
        const auto& fs = X.faces[n][cols[c]];
        for (std::size_t i = 0; i < fs.size(); ++i) {
            const int r = row_of[fs[i].target];
            if (r < 0) continue; // face in a non-alternating orbit: zero in the chain model
            m[r][c] += (i % 2 == 0 ? 1 : -1) * fs[i].sign;
        }
    }
    return m;
}

BettiVector betti(const DeltaComplex& X) {
    BettiVector out;
    const int top = X.dimension();
    if (top < 0) return out;
    std::vector<int> dims(top + 1, 0), ranks(top + 2, 0);
    for (int n = 0; n <= top; ++n)
        dims[n] = static_cast<int>(alternating_positions(X, n).size());
    for (int n = 1; n <= top; ++n) ranks[n] = matrix_rank(boundary_matrix(X, n));
    out.chain_dims = dims;
    out.b.resize(top + 1);
    for (int n = 0; n <= top; ++n) out.b[n] = dims[n] - ranks[n] - ranks[n + 1];
    out.reduced = out.b;
    if (!X.empty() && !out.reduced.empty()) out.reduced[0] -= 1;
    return out;
}

DeltaComplex subcomplex_closure(const DeltaComplex& X,
                                const std::vector<std::pair<int, int>>& marked) {
    const int top = X.dimension();
    std::vector<std::set<int>> chosen(top + 1);
    std::vector<std::pair<int, int>> queue;
    for (auto [n, idx] : marked) {
        if (n < 0 || n > top || idx < 0 || idx >= static_cast<int>(X.levels[n].size()))
            fail(Errc::unknown_cell, "marked cell is outside the complex");
        if (chosen[n].insert(idx).second) queue.push_back({n, idx});
    }
    while (!queue.empty()) {
        auto [n, idx] = queue.back();
        queue.pop_back();
        if (n == 0) continue;
        for (const FaceRef& f : X.faces[n][idx])
            if (chosen[n - 1].insert(f.target).second) queue.push_back({n - 1, f.target});
    }
    DeltaComplex out;
    out.genus = X.genus;
    out.p = X.p;
    out.levels.resize(top + 1);
    out.faces.resize(top + 1);
    std::vector<std::vector<int>> new_index(top + 1);
    for (int n = 0; n <= top; ++n) {
        new_index[n].assign(X.levels[n].size(), -1);
        for (int idx : chosen[n]) {
            new_index[n][idx] = static_cast<int>(out.levels[n].size());
            out.levels[n].push_back(X.levels[n][idx]);
        }
    }
    for (int n = 0; n <= top; ++n) {
        out.faces[n].resize(out.levels[n].size());
        if (n == 0) continue;
        for (int idx : chosen[n]) {
            std::vector<FaceRef> fs = X.faces[n][idx];
            for (FaceRef& f : fs) f.target = new_index[n - 1][f.target];
            out.faces[n][new_index[n][idx]] = std::move(fs);
        }
    }
    // Downward closure can only leave trailing levels empty; drop them so the
    // reported dimension is honest.
    while (!out.levels.empty() && out.levels.back().empty()) {
        out.levels.pop_back();
        out.faces.pop_back();
    }
    return out;
}

long long euler_characteristic(const DeltaComplex& X) {
    const BettiVector bv = betti(X);
    long long chi_chain = 0, chi_betti = 0;
    for (std::size_t n = 0; n < bv.chain_dims.size(); ++n) {
        const long long sign = n % 2 == 0 ? 1 : -1;
        chi_chain += sign * bv.chain_dims[n];
        chi_betti += sign * bv.b[n];
    }
    if (chi_chain != chi_betti)
        fail(Errc::inconsistent_euler, "chain and Betti Euler characteristics disagree");
    return chi_chain;
}

} // namespace tcov
