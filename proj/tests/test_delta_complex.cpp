// Complex tests: assembly against frozen cell and alternating-basis counts,
// functoriality of face maps, chain-level identities (boundary squared zero,
// labeling invariance), Betti numbers, Euler characteristics and closures.
#include <algorithm>
#include <map>
#include <numeric>

#include "doctest.h"
#include "fixtures.hpp"
#include "tcov/delta_complex.hpp"

using namespace tcov;
using namespace fixtures;

namespace {

// True when some isomorphism a -> b maps edge j of a to edge j of b for all j.
bool labeled_isomorphic(const PCover& a, const PCover& b) {
    const CoverCanon ca = canonical_form(a);
    const CoverCanon cb = canonical_form(b);
    if (ca.key != cb.key) return false;
    const PCover canon = canonical_cover(a);
    const int ne = a.target.num_edges();
    std::vector<int> ea(ne), eb(ne), u(ne);
    for (int j = 0; j < ne; ++j) {
        ea[j] = canon.target.edge_of[ca.perm[a.target.edges[j].a]];
        eb[j] = canon.target.edge_of[cb.perm[b.target.edges[j].a]];
    }
    for (int j = 0; j < ne; ++j) u[ea[j]] = eb[j];
    const auto auts = automorphism_edge_group(canon).edge_perms;
    return std::find(auts.begin(), auts.end(), u) != auts.end();
}

std::vector<int> alternating_dims(const DeltaComplex& X) {
    std::vector<int> dims;
    for (const auto& level : X.levels) {
        int alt = 0;
        for (const auto& cell : level) alt += cell.is_alternating ? 1 : 0;
        dims.push_back(alt);
    }
    return dims;
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
    const std::size_t rows = a.size();
    const std::size_t inner = a.empty() ? 0 : a[0].size();
    const std::size_t cols = b.empty() ? 0 : b[0].size();
    REQUIRE(inner == b.size());
    IntMatrix out(rows, std::vector<std::int64_t>(cols, 0));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t k = 0; k < inner; ++k)
            for (std::size_t j = 0; j < cols; ++j) out[i][j] += a[i][k] * b[k][j];
    return out;
}

bool is_zero(const IntMatrix& m) {
    for (const auto& row : m)
        for (auto x : row)
            if (x != 0) return false;
    return true;
}

} // namespace

TEST_CASE("assembly of the genus-2 complexes") {
    struct Expect {
        int p;
        std::vector<int> cells;
        std::vector<int> alternating;
    };
    const std::vector<Expect> table = {
        {2, {5, 9, 7}, {5, 7, 3}},
        {3, {5, 9, 9}, {5, 7, 3}},
        {5, {7, 19, 22}, {7, 15, 10}},
        {7, {9, 31, 41}, {9, 25, 23}},
    };
    for (const auto& row : table) {
        CAPTURE(row.p);
        const DeltaComplex X = assemble(all_cells(2, row.p));
        REQUIRE(X.dimension() == 2);
        std::vector<int> cells;
        for (const auto& level : X.levels) cells.push_back(static_cast<int>(level.size()));
        CHECK(cells == row.cells);
        CHECK(alternating_dims(X) == row.alternating);
        // Every n-cell has n+1 faces, each a valid reference one level down.
        for (int n = 1; n <= 2; ++n) {
            for (const auto& fs : X.faces[n]) {
                REQUIRE(static_cast<int>(fs.size()) == n + 1);
                for (const auto& f : fs) {
                    CHECK(f.target >= 0);
                    CHECK(f.target < static_cast<int>(X.levels[n - 1].size()));
                    CHECK((f.sign == 1 || f.sign == -1));
                }
            }
        }
    }
}

TEST_CASE("face maps compose") {
    const DeltaComplex X = assemble(all_cells(2, 5));
    const std::vector<int> identity = {0, 1, 2};
    for (const auto& cell : X.levels[2]) {
        const PCover& rep = cell.representative;
        CHECK(labeled_isomorphic(face(rep, identity), rep));
        for (int i = 0; i <= 2; ++i) {
            std::vector<int> theta1;
            for (int j = 0; j <= 2; ++j)
                if (j != i) theta1.push_back(j);
            const PCover once = face(rep, theta1);
            for (int k = 0; k <= 1; ++k) {
                const std::vector<int> theta2 = {k};
                const std::vector<int> composite = {theta1[k]};
                CHECK(labeled_isomorphic(face(once, theta2), face(rep, composite)));
            }
        }
    }
}

TEST_CASE("boundary matrices square to zero") {
    for (int p : {2, 3, 5, 7}) {
        CAPTURE(p);
        const DeltaComplex X = assemble(all_cells(2, p));
        CHECK(is_zero(multiply(boundary_matrix(X, 1), boundary_matrix(X, 2))));
    }
}

TEST_CASE("Betti numbers of the genus-2 complexes") {
    struct Expect {
        int p;
        std::vector<int> b;
        long long chi;
    };
    const std::vector<Expect> table = {
        {2, {1, 0, 0}, 1},
        {3, {1, 0, 0}, 1},
        {5, {1, 0, 1}, 2},
        {7, {1, 0, 6}, 7},
    };
    for (const auto& row : table) {
        CAPTURE(row.p);
        const DeltaComplex X = assemble(all_cells(2, row.p));
        const BettiVector bv = betti(X);
        CHECK(bv.b == row.b);
        std::vector<int> expected_reduced = row.b;
        expected_reduced[0] -= 1;
        CHECK(bv.reduced == expected_reduced);
        CHECK(euler_characteristic(X) == row.chi);
    }
}

TEST_CASE("boundary ranks are invariant under representative relabeling") {
    auto census = all_cells(2, 5);
    // Re-present every top cell with a reversed edge order and every 1-cell
    // with swapped labels; classes (hence the complex) are unchanged.
    for (PCover& rep : census[2].orbit_reps) rep = relabel_edges(rep, {2, 1, 0});
    for (PCover& rep : census[1].orbit_reps) rep = relabel_edges(rep, {1, 0});
    const DeltaComplex X = assemble(census);
    CHECK(alternating_dims(X) == std::vector<int>{7, 15, 10});
    CHECK(is_zero(multiply(boundary_matrix(X, 1), boundary_matrix(X, 2))));
    CHECK(betti(X).b == std::vector<int>{1, 0, 1});
}

TEST_CASE("subcomplex closures") {
    const DeltaComplex X = assemble(all_cells(2, 5));

    CHECK(subcomplex_closure(X, {}).empty());

    std::vector<std::pair<int, int>> everything;
    for (int n = 0; n <= X.dimension(); ++n)
        for (int i = 0; i < static_cast<int>(X.levels[n].size()); ++i) everything.push_back({n, i});
    const DeltaComplex full = subcomplex_closure(X, everything);
    CHECK(full.cell_count() == X.cell_count());
    CHECK(betti(full).b == betti(X).b);

    const DeltaComplex point = subcomplex_closure(X, {{0, 0}});
    CHECK(point.cell_count() == 1);
    CHECK(point.dimension() == 0);
    CHECK(betti(point).b == std::vector<int>{1});
    CHECK(betti(point).reduced == std::vector<int>{0});

    // Closing over a single top cell keeps it downward closed: each face of a
    // kept cell is kept, with indices into the shrunken levels.
    const DeltaComplex one = subcomplex_closure(X, {{2, 0}});
    CHECK(one.levels[2].size() == 1);
    for (int n = 1; n <= one.dimension(); ++n)
        for (const auto& fs : one.faces[n])
            for (const auto& f : fs) {
                CHECK(f.target >= 0);
                CHECK(f.target < static_cast<int>(one.levels[n - 1].size()));
            }
    const BettiVector obv = betti(one);
    long long chi = 0;
    for (std::size_t n = 0; n < obv.b.size(); ++n) chi += (n % 2 == 0 ? 1 : -1) * obv.b[n];
    CHECK(euler_characteristic(one) == chi);

    CHECK_THROWS_AS(static_cast<void>(subcomplex_closure(X, {{5, 0}})), Error);
    CHECK_THROWS_AS(static_cast<void>(subcomplex_closure(X, {{0, 99}})), Error);
}
