// Locus machinery: weight criterion, equivariant loops/bridges, uncontraction
// counts, spiral edges and articulation points, and the five nested
// subcomplexes with their vanishing reduced homology at small primes.
#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "doctest.h"
#include "fixtures.hpp"
#include "tcov/census.hpp"
#include "tcov/delta_complex.hpp"
#include "tcov/loci.hpp"

using namespace tcov;
using namespace fixtures;

namespace {

// Genus-3 double cover: dilated vertex v (dilated loop, flow 1) joined to a
// free vertex by three free parallel edges.  The parallel piece is a
// trivial-preimage cut component of genus 2 at v.
PCover banana_theta_p2() {
    GraphBuilder b;
    const int v = b.add_vertex(0);
    const int x = b.add_vertex(0);
    b.add_edge(v, v);
    b.add_edge(v, x);
    b.add_edge(v, x);
    b.add_edge(v, x);
    const WeightedGraph t = b.build();
    return make_cover(t, 2, {v}, {0}, {{t.edges[0].a, 1}}, {});
}

// Free figure-eight cover with the given loop gains.
PCover free_fig8_cover(int p, int a, int b) {
    const WeightedGraph t = figure_eight_graph(0);
    return make_cover(t, p, {}, {}, {},
                      {{0, GainSpec{t.edges[0].a, a}}, {1, GainSpec{t.edges[1].a, b}}});
}

// Genus-3 cover: free genus-0 vertex with two gain-0 loops, anchored to a
// dilated genus-1 vertex so the source stays connected.
PCover double_loop_anchor(int p) {
    GraphBuilder b;
    const int v0 = b.add_vertex(0);
    const int v1 = b.add_vertex(1);
    b.add_edge(v0, v0);
    b.add_edge(v0, v0);
    b.add_edge(v0, v1);
    const WeightedGraph t = b.build();
    return make_cover(t, p, {v1}, {}, {},
                      {{0, GainSpec{t.edges[0].a, 0}}, {1, GainSpec{t.edges[1].a, 0}}});
}

int index_of(const std::vector<OrbitCell>& level, const PCover& c) {
    const CanonKey key = canonical_form(c).key;
    for (std::size_t i = 0; i < level.size(); ++i)
        if (canonical_form(level[i].representative).key == key) return static_cast<int>(i);
    return -1;
}

const DeltaComplex& complex_2_5() {
    static const DeltaComplex X = assemble(all_cells(2, 5));
    return X;
}

bool reduced_vanishes(const DeltaComplex& X) {
    const BettiVector bv = betti(X);
    return std::all_of(bv.reduced.begin(), bv.reduced.end(), [](int r) { return r == 0; });
}

} // namespace

TEST_CASE("weight locus criterion") {
    CHECK(in_weight_locus(ring_cover(5, 1)));
    CHECK(in_weight_locus(ring_cover(2, 1)));
    CHECK(in_weight_locus(spiral_cover(5, 2)));
    CHECK(in_weight_locus(bh_cover(5, 2, 1)));
    CHECK_FALSE(in_weight_locus(butterfly_cover(5)));
    CHECK_FALSE(in_weight_locus(p1_cover(5)));
    CHECK_FALSE(in_weight_locus(free_theta_cover(5, 0, 1, 2)));
    CHECK_FALSE(in_weight_locus(mixed_theta_cover(5, 2)));
    CHECK_FALSE(in_weight_locus(dilated_theta_cover(5, 1, 1, 3)));

    // The butterfly is the p = 2 corner case: one free loop on a dilated
    // vertex gives fiber genus p exactly when d(p-1) reaches 2(2p-1).
    CHECK_FALSE(in_weight_locus(butterfly_cover(2)));

    // The case-list route and the fiber-genus route are checked against each
    // other inside the call; sweep the censuses to exercise the comparison.
    for (int p : {2, 3, 5})
        for (const CensusLevel& level : all_cells(2, p))
            for (const PCover& c : level.orbit_reps) CHECK_NOTHROW(in_weight_locus(c));
}

TEST_CASE("equivariant loop edges") {
    CHECK(equivariant_loop_edges(butterfly_cover(5)) == std::vector<int>{0});
    CHECK(equivariant_loop_edges(spiral_cover(5, 1)).empty());
    CHECK(equivariant_loop_edges(ring_cover(5, 1)).empty());
    CHECK(equivariant_loop_edges(free_dumbbell_cover(5, 0, 1)) == std::vector<int>{0});
    CHECK(equivariant_loop_edges(double_loop_anchor(5)) == std::vector<int>{0, 1});
    CHECK(equivariant_loop_edges(mixed_theta_cover(5, 1)).empty());
}

TEST_CASE("equivariant h-bridges") {
    CHECK(equivariant_h_bridges(bh_cover(5, 2, 1)) == std::map<int, int>{{0, 1}});
    CHECK(equivariant_h_bridges(p1_cover(5)).empty());
    CHECK(equivariant_h_bridges(free_dumbbell_cover(5, 1, 2)).empty());
    CHECK(equivariant_h_bridges(free_dumbbell_cover(5, 0, 2)) == std::map<int, int>{{1, 1}});
    CHECK(equivariant_h_bridges(free_theta_cover(5, 0, 0, 1)).empty());
    CHECK(equivariant_h_bridges(mixed_theta_cover(5, 1)).empty());

    // Genus 3: a bridge onto a free genus-2 vertex is a 2-bridge.
    CHECK(equivariant_h_bridges(bh_cover(2, 3, 2)) == std::map<int, int>{{0, 2}});
    CHECK(equivariant_h_bridges(banana_theta_p2()).empty());
}

TEST_CASE("one-bridge uncontraction counts") {
    CHECK(max_1bridge_uncontractions(butterfly_cover(5), 0) == 1);
    CHECK(max_1bridge_uncontractions(ring_cover(5, 1), 0) == 1);
    CHECK(max_1bridge_uncontractions(spiral_cover(5, 1), 0) == 1);
    CHECK(max_1bridge_uncontractions(bh_cover(5, 2, 1), 0) == 0); // valence-1 dilated side
    CHECK(max_1bridge_uncontractions(bh_cover(5, 2, 1), 1) == 0); // valence-1 free side
    CHECK(max_1bridge_uncontractions(p1_cover(5), 0) == 0);
    CHECK(max_1bridge_uncontractions(p1_cover(5), 1) == 0);
    for (int v : {0, 1}) {
        CHECK(max_1bridge_uncontractions(free_theta_cover(5, 0, 0, 1), v) == 0);
        CHECK(max_1bridge_uncontractions(mixed_theta_cover(5, 1), v) == 0);
    }
    // A vertex of dilation-free genus 0 with loop and bridge sits exactly at
    // the stability edge 2g - 2 + val = 1, where no uncontraction fits.
    CHECK(max_1bridge_uncontractions(free_dumbbell_cover(5, 0, 1), 0) == 0);
    // Two equivariant loops at one vertex count once each when there is room.
    CHECK(max_1bridge_uncontractions(double_loop_anchor(5), 0) == 2);
    CHECK(max_1bridge_uncontractions(double_loop_anchor(5), 1) == 0);
    CHECK_THROWS_AS((void)max_1bridge_uncontractions(butterfly_cover(5), 1), Error);
}

TEST_CASE("bridge articulation points") {
    SUBCASE("genus-2 covers without lower bridge structure have none") {
        for (const PCover& c :
             {free_theta_cover(5, 0, 0, 1), free_theta_cover(5, 0, 1, 2), mixed_theta_cover(5, 1),
              dilated_theta_cover(5, 1, 1, 3)}) {
            const auto points = bridge_articulation_points(c, 2);
            for (const auto& [v, info] : points) {
                CHECK(info.max_uncontractions == 0);
                CHECK_FALSE(info.is_articulation);
            }
        }
    }
    SUBCASE("the guarding assumption is enforced") {
        CHECK_THROWS_AS((void)bridge_articulation_points(bh_cover(5, 2, 1), 2), Error);
        CHECK_THROWS_AS((void)bridge_articulation_points(butterfly_cover(5), 2), Error);
        CHECK_THROWS_AS((void)bridge_articulation_points(bh_cover(2, 3, 2), 2), Error);
        CHECK_THROWS_AS((void)bridge_articulation_points(free_theta_cover(5, 0, 0, 1), 1), Error);
        try {
            (void)bridge_articulation_points(butterfly_cover(5), 2);
            CHECK(false);
        } catch (const Error& e) {
            CHECK(e.code == Errc::assumption_violated);
        }
    }
    SUBCASE("a genus-2 trivial-preimage component is detected at genus 3") {
        const PCover c = banana_theta_p2();
        const auto points = bridge_articulation_points(c, 2);
        REQUIRE(points.size() == 2);
        CHECK(points.at(0).max_uncontractions == 1);
        CHECK(points.at(0).is_articulation);
        CHECK(points.at(1).max_uncontractions == 0);
        CHECK_FALSE(points.at(1).is_articulation);
    }
    SUBCASE("verdicts match the closure picture on the genus-2 complex") {
        // Genus 2 admits no 2-bridge cells at all, so every cover that
        // satisfies the assumption must get a negative verdict.
        for (int p : {2, 5})
            for (const CensusLevel& level : all_cells(2, p))
                for (const PCover& c : level.orbit_reps) {
                    try {
                        for (const auto& [v, info] : bridge_articulation_points(c, 2))
                            CHECK_FALSE(info.is_articulation);
                    } catch (const Error& e) {
                        CHECK(e.code == Errc::assumption_violated);
                    }
                }
    }
}

TEST_CASE("spiral edges") {
    CHECK(spiral_edges(spiral_cover(5, 2)) == std::map<int, int>{{0, 2}});
    CHECK(spiral_edges(spiral_cover(5, 3)) == std::map<int, int>{{0, 2}}); // 3 = -2 mod 5
    CHECK(spiral_edges(free_theta_cover(5, 0, 0, 1)) == std::map<int, int>{{2, 1}});
    CHECK(spiral_edges(free_theta_cover(5, 0, 1, 1)) == std::map<int, int>{{0, 1}});
    CHECK(spiral_edges(free_theta_cover(5, 0, 1, 2)).empty());
    CHECK(spiral_edges(free_theta_cover(7, 0, 1, 3)).empty());
    CHECK(spiral_edges(free_fig8_cover(5, 2, 0)) == std::map<int, int>{{0, 2}});
    CHECK(spiral_edges(ring_cover(5, 1)).empty());
    CHECK(spiral_edges(mixed_theta_cover(5, 1)).empty());
    CHECK(spiral_edges(bh_cover(5, 2, 1)).empty());

    // Covers with a spiral edge are always free.
    for (const CensusLevel& level : all_cells(2, 5))
        for (const PCover& c : level.orbit_reps)
            if (!spiral_edges(c).empty()) CHECK(c.is_free_cover());
}

TEST_CASE("spiral articulation points") {
    SpiralPoints sp = spiral_articulation_points(spiral_cover(5, 1));
    CHECK(sp.vertices == std::vector<int>{0});
    CHECK(sp.common_ascent == 1);
    sp = spiral_articulation_points(spiral_cover(5, 3));
    CHECK(sp.common_ascent == 2);

    sp = spiral_articulation_points(free_theta_cover(5, 0, 0, 2));
    CHECK(sp.vertices == std::vector<int>{0, 1});
    CHECK(sp.common_ascent == 2);
    sp = spiral_articulation_points(free_theta_cover(5, 0, 1, 1));
    CHECK(sp.vertices == std::vector<int>{0, 1});
    CHECK(sp.common_ascent == 1);

    CHECK(spiral_articulation_points(free_theta_cover(5, 0, 1, 2)).vertices.empty());
    CHECK(spiral_articulation_points(free_theta_cover(7, 0, 1, 3)).vertices.empty());
    CHECK(spiral_articulation_points(free_dumbbell_cover(5, 1, 2)).vertices.empty());
    CHECK(spiral_articulation_points(free_dumbbell_cover(5, 0, 1)).vertices.empty());
    // A gain-0 loop component only restores ascent-0 cycles, so it blocks the
    // vertex even though the other loop spirals.
    CHECK(spiral_articulation_points(free_fig8_cover(5, 2, 0)).vertices.empty());
    CHECK(spiral_articulation_points(free_fig8_cover(5, 2, 2)).vertices == std::vector<int>{0});
    CHECK(spiral_articulation_points(free_fig8_cover(5, 2, 3)).vertices == std::vector<int>{0});
    CHECK(spiral_articulation_points(free_fig8_cover(5, 1, 2)).vertices.empty());

    CHECK_THROWS_AS((void)spiral_articulation_points(ring_cover(5, 1)), Error);

    // The common-ascent law holds across every free cover in the census.
    for (int p : {2, 3, 5})
        for (const CensusLevel& level : all_cells(2, p))
            for (const PCover& c : level.orbit_reps)
                if (c.is_free_cover()) CHECK_NOTHROW((void)spiral_articulation_points(c));
}

TEST_CASE("spiral uncontraction is unique at odd primes") {
    // Contracting a non-loop spiral edge lands on a free cover whose merged
    // vertex is a spiral articulation point of the matching ascent; grouping
    // the sources by the landing site (cover + marked vertex) must give a
    // single isomorphism class per site.  Loop spiral edges dilate their
    // vertex under contraction and fall outside this statement.
    std::map<std::pair<CanonKey, CanonKey>, std::set<CanonKey>> groups;
    for (const CensusLevel& level : all_cells(2, 5)) {
        if (level.n == 0) continue;
        for (const PCover& c : level.orbit_reps)
            for (const auto& [e, a] : spiral_edges(c)) {
                const CoverContraction k = contract(c, e);
                if (!k.cover.is_free_cover()) continue;
                const SpiralPoints sp = spiral_articulation_points(k.cover);
                CHECK(std::count(sp.vertices.begin(), sp.vertices.end(), k.merged_vertex) == 1);
                CHECK(sp.common_ascent == a);
                PCover marked = k.cover;
                marked.target.genus[k.merged_vertex] += 7;
                groups[{canonical_form(k.cover).key, canonical_form(marked).key}].insert(
                    canonical_form(c).key);
            }
    }
    CHECK(!groups.empty());
    for (const auto& [site, classes] : groups) CHECK(classes.size() == 1);
}

TEST_CASE("locus generator witnesses") {
    CHECK(locus_generator_witness(ring_cover(5, 1), Locus::w) ==
          "fiber over vertex 0 has total genus 5");
    CHECK(locus_generator_witness(butterfly_cover(5), Locus::w).empty());
    CHECK(locus_generator_witness(butterfly_cover(5), Locus::lw) ==
          "equivariant loop at edge 0");
    CHECK(locus_generator_witness(free_dumbbell_cover(5, 0, 2), Locus::br) ==
          "equivariant loop at edge 0");
    CHECK(locus_generator_witness(p1_cover(5), Locus::par).empty());
    CHECK(locus_generator_witness(free_theta_cover(5, 0, 1, 2), Locus::par).empty());
    CHECK(locus_generator_witness(free_theta_cover(5, 0, 0, 1), Locus::br).empty());
    CHECK(locus_generator_witness(free_theta_cover(5, 0, 0, 1), Locus::scon) ==
          "component left by removing edge 2 has disconnected preimage");
    CHECK(locus_generator_witness(mixed_theta_cover(5, 1), Locus::par).empty());
    CHECK(!locus_generator_witness(free_theta_cover(5, 0, 0, 1), Locus::par).empty());
}

TEST_CASE("locus membership on the genus-2 complex at p = 5") {
    const DeltaComplex& X = complex_2_5();
    const auto member = locus_membership(X);
    const Locus order[] = {Locus::w, Locus::lw, Locus::br, Locus::scon, Locus::par};

    SUBCASE("membership is monotone along the locus chain") {
        for (int n = 0; n <= X.dimension(); ++n)
            for (const LocusMembership& m : member[n]) {
                CHECK((!m.w || m.lw));
                CHECK((!m.lw || m.br));
                CHECK((!m.br || m.scon));
                CHECK((!m.scon || m.par));
            }
    }
    SUBCASE("every locus is closed under faces") {
        for (int n = 1; n <= X.dimension(); ++n)
            for (std::size_t i = 0; i < X.levels[n].size(); ++i)
                for (const FaceRef& f : X.faces[n][i])
                    for (Locus l : order)
                        if (member[n][i].in(l)) CHECK(member[n - 1][f.target].in(l));
    }
    SUBCASE("the weight locus is its own generator set") {
        for (int n = 0; n <= X.dimension(); ++n)
            for (std::size_t i = 0; i < X.levels[n].size(); ++i)
                CHECK(member[n][i].w ==
                      !locus_generator_witness(X.levels[n][i].representative, Locus::w).empty());
    }
    SUBCASE("spot checks at dimension 0 and 2") {
        const int butterfly = index_of(X.levels[0], butterfly_cover(5));
        REQUIRE(butterfly >= 0);
        CHECK_FALSE(member[0][butterfly].w);
        CHECK(member[0][butterfly].lw);
        const int p1 = index_of(X.levels[0], p1_cover(5));
        REQUIRE(p1 >= 0);
        CHECK_FALSE(member[0][p1].par);
        int outside_par = 0;
        for (const LocusMembership& m : member[0])
            if (!m.par) ++outside_par;
        CHECK(outside_par == 1); // the parallel-lift bridge vertex is the only one

        const int distinct = index_of(X.levels[2], free_theta_cover(5, 0, 1, 2));
        REQUIRE(distinct >= 0);
        CHECK_FALSE(member[2][distinct].par);
        const int repeat = index_of(X.levels[2], free_theta_cover(5, 0, 0, 1));
        REQUIRE(repeat >= 0);
        CHECK_FALSE(member[2][repeat].br);
        CHECK(member[2][repeat].scon);
        CHECK(member[2][repeat].witness ==
              "component left by removing edge 2 has disconnected preimage");
        const int mixed = index_of(X.levels[2], mixed_theta_cover(5, 1));
        REQUIRE(mixed >= 0);
        CHECK_FALSE(member[2][mixed].par);
    }
    SUBCASE("subcomplex sizes grow along the chain") {
        int prev = -1;
        for (Locus l : order) {
            const int count = locus_subcomplex(X, l).cell_count();
            CHECK(count >= prev);
            prev = count;
        }
        CHECK(prev < X.cell_count());
    }
}

TEST_CASE("locus subcomplexes have vanishing reduced homology at small primes") {
    for (int p : {2, 3, 5}) {
        const DeltaComplex X = assemble(all_cells(2, p));
        for (Locus l : {Locus::w, Locus::lw, Locus::br}) {
            const DeltaComplex sub = locus_subcomplex(X, l);
            CHECK(!sub.empty());
            CHECK(reduced_vanishes(sub));
        }
        if (p == 2) continue; // loop-lift counting below needs an odd prime
        for (Locus l : {Locus::scon, Locus::par}) {
            const DeltaComplex sub = locus_subcomplex(X, l);
            CHECK(!sub.empty());
            CHECK(reduced_vanishes(sub));
        }
    }
}
