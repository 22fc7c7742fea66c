// Census tests: target-graph enumeration against hand-enumerated lists,
// cover enumeration against frozen class counts, downward closure, and
// determinism of the representatives.
#include <algorithm>
#include <set>

#include "doctest.h"
#include "fixtures.hpp"
#include "tcov/census.hpp"

using namespace tcov;
using namespace fixtures;

namespace {

std::set<std::string> names_of(const std::vector<WeightedGraph>& graphs) {
    std::set<std::string> out;
    for (const auto& g : graphs) out.insert(target_name(g));
    return out;
}

// Index of the class of c among reps, or -1.
int class_index(const std::vector<PCover>& reps, const PCover& c) {
    const CanonKey key = canonical_form(c).key;
    for (std::size_t i = 0; i < reps.size(); ++i)
        if (canonical_form(reps[i]).key == key) return static_cast<int>(i);
    return -1;
}

} // namespace

TEST_CASE("stable weighted graphs of genus 2") {
    CHECK(names_of(stable_weighted_graphs(2, 1)) ==
          std::set<std::string>{"loop[1]", "bridge[1,1]"});
    CHECK(names_of(stable_weighted_graphs(2, 2)) ==
          std::set<std::string>{"figure-eight[0]", "lollipop[0,1]"});
    CHECK(names_of(stable_weighted_graphs(2, 3)) ==
          std::set<std::string>{"theta[0,0]", "dumbbell[0,0]"});
    // Genus 2 admits nothing with more than 3 edges.
    CHECK(stable_weighted_graphs(2, 4).empty());
    for (const auto& g : stable_weighted_graphs(2, 3)) {
        CHECK(is_stable(g));
        CHECK(is_connected(g));
        CHECK(graph_genus(g) == 2);
    }
}

TEST_CASE("stable weighted graphs of genus 3") {
    CHECK(names_of(stable_weighted_graphs(3, 1)) ==
          std::set<std::string>{"loop[2]", "bridge[1,2]"});
    // The five trivalent genus-3 shapes, all with weightless vertices.
    const auto maximal = stable_weighted_graphs(3, 6);
    CHECK(maximal.size() == 5);
    for (const auto& g : maximal) {
        CHECK(g.num_vertices() == 4);
        CHECK(g.num_edges() == 6);
        for (int v : g.vertices) {
            CHECK(g.genus[v] == 0);
            CHECK(valence(g, v) == 3);
        }
    }
}

TEST_CASE("covers of the one-edge genus-2 targets at p = 5") {
    const auto loop_covers = covers_of(loop_graph(1), 5);
    CHECK(loop_covers.size() == 5);
    CHECK(class_index(loop_covers, ring_cover(5, 1)) >= 0);
    CHECK(class_index(loop_covers, ring_cover(5, 2)) >= 0);
    CHECK(class_index(loop_covers, spiral_cover(5, 1)) >= 0);
    CHECK(class_index(loop_covers, spiral_cover(5, 2)) >= 0);
    CHECK(class_index(loop_covers, butterfly_cover(5)) >= 0);

    const auto bridge_covers = covers_of(bridge_graph(1, 1), 5);
    CHECK(bridge_covers.size() == 2);
    CHECK(class_index(bridge_covers, bh_cover(5, 2, 1)) >= 0);
    CHECK(class_index(bridge_covers, p1_cover(5)) >= 0);
}

TEST_CASE("covers of the theta target") {
    // p = 5: two free classes with a repeated gain, two with distinct gains,
    // two with a dilated pair, two fully dilated.
    const auto covers5 = covers_of(theta_graph(), 5);
    REQUIRE(covers5.size() == 8);
    int free_repeat = 0, free_distinct = 0, mixed = 0, dilated = 0;
    for (const auto& c : covers5) {
        int dil_edges = 0;
        for (int e = 0; e < 3; ++e) dil_edges += c.edge_is_dilated(e) ? 1 : 0;
        if (dil_edges == 3) {
            ++dilated;
        } else if (dil_edges == 2) {
            ++mixed;
        } else {
            REQUIRE(dil_edges == 0);
            REQUIRE(c.is_free_cover());
            std::multiset<int> gains;
            for (int e = 0; e < 3; ++e) gains.insert(c.oriented_gain(c.target.edges[e].a));
            (gains.size() == std::set<int>(gains.begin(), gains.end()).size() ? free_distinct
                                                                              : free_repeat) += 1;
        }
    }
    CHECK(free_repeat == 2);
    CHECK(free_distinct == 2);
    CHECK(mixed == 2);
    CHECK(dilated == 2);
    CHECK(class_index(covers5, free_theta_cover(5, 0, 0, 1)) >= 0);
    CHECK(class_index(covers5, free_theta_cover(5, 0, 1, 2)) >= 0);
    CHECK(class_index(covers5, mixed_theta_cover(5, 1)) >= 0);
    CHECK(class_index(covers5, dilated_theta_cover(5, 1, 1, 3)) >= 0);

    // p = 7 gains the first fully dilated class with three distinct flows.
    const auto covers7 = covers_of(theta_graph(), 7);
    CHECK(covers7.size() == 14);
    CHECK(class_index(covers7, free_theta_cover(7, 0, 1, 3)) >= 0);
    CHECK(class_index(covers7, dilated_theta_cover(7, 1, 2, 4)) >= 0);
}

TEST_CASE("census levels match the frozen counts") {
    const auto check = [](int p, int n0, int n1, int n2) {
        const auto levels = all_cells(2, p);
        REQUIRE(levels.size() == 3);
        CHECK(static_cast<int>(levels[0].orbit_reps.size()) == n0);
        CHECK(static_cast<int>(levels[1].orbit_reps.size()) == n1);
        CHECK(static_cast<int>(levels[2].orbit_reps.size()) == n2);
    };
    check(2, 5, 9, 7);
    check(3, 5, 9, 9);
    check(5, 7, 19, 22);
    check(7, 9, 31, 41);
}

TEST_CASE("census representatives are canonical, valid and sorted") {
    for (int p : {2, 5}) {
        for (const auto& level : all_cells(2, p)) {
            CanonKey prev;
            bool first = true;
            for (const auto& rep : level.orbit_reps) {
                CHECK(validate(rep).ok());
                CHECK(rep.target.num_edges() == level.n + 1);
                const CanonKey key = canonical_form(rep).key;
                if (!first) CHECK(prev < key);
                prev = key;
                first = false;
            }
        }
    }
    // Per-target class counts at the maximal level of p = 5.
    const auto level = census_level(2, 5, 2);
    CHECK(level.counts_by_target.at("theta[0,0]") == 8);
    CHECK(level.counts_by_target.at("dumbbell[0,0]") == 14);
}

TEST_CASE("census is downward closed under contraction") {
    for (int p : {2, 5}) {
        const auto levels = all_cells(2, p);
        for (int n = 1; n <= 2; ++n) {
            for (const auto& rep : levels[n].orbit_reps) {
                for (int e = 0; e < rep.target.num_edges(); ++e) {
                    const PCover below = contract(rep, e).cover;
                    CHECK(class_index(levels[n - 1].orbit_reps, below) >= 0);
                }
            }
        }
    }
}
