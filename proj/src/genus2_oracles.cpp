// Closed-form genus-2 expectations: maximal-cell and wedge counts, the three
// independent counts of distinct-gain free theta covers (cycle index, direct
// orbit enumeration, representative list), the automorphism-class criterion,
// the fully dilated theta census and the family classifier for maximal cells.
#include "tcov/genus2_oracles.hpp"

#include <algorithm>
#include <set>

namespace tcov {

namespace {

void require_prime(int p, int at_least) {
    if (!is_prime(p)) fail(Errc::not_prime, "p = " + std::to_string(p) + " is not prime");
    if (p < at_least)
        fail(Errc::not_prime,
             "p = " + std::to_string(p) + " is below the smallest admissible prime " +
                 std::to_string(at_least));
}

} // namespace

long long expected_maximal_cells(int p) {
    require_prime(p, 2);
    if (p == 2) return 7;
    if (p == 3) return 9;
    return (4LL * p * p + 9 * p - 13) / 6;
}

long long expected_wedge_count(int p) {
    require_prime(p, 2);
    if (p == 2 || p == 3) return 0;
    return static_cast<long long>(p - 1) * (p - 5) / 6 +
           static_cast<long long>(p - 3) * (p - 3) / 4;
}

long long polya_free_theta_count(int p) {
    require_prime(p, 5);
    // Coefficient of t^3 in Z(1+t, 1+t^2, ..., 1+t^p) for the dihedral cycle
    // index Z = (z1^p + p z1 z2^{(p-1)/2} + (p-1) z_p) / 2p, computed with
    // exact truncated polynomial arithmetic.
    constexpr int deg = 3;
    using Poly = std::array<long long, deg + 1>;
    const auto mul = [](const Poly& a, const Poly& b) {
        Poly out{};
        for (int i = 0; i <= deg; ++i)
            for (int j = 0; i + j <= deg; ++j) out[i + j] += a[i] * b[j];
        return out;
    };
    const auto power = [&](Poly base, int n) {
        Poly out{};
        out[0] = 1;
        for (; n > 0; n /= 2, base = mul(base, base))
            if (n % 2) out = mul(out, base);
        return out;
    };
    const Poly z1 = {1, 1, 0, 0};
    const Poly z2 = {1, 0, 1, 0};
    const Poly zp{1, 0, 0, 0}; // 1 + t^p truncates to 1 for p > 3

    Poly sum = power(z1, p);
    const Poly mixed = mul(z1, power(z2, (p - 1) / 2));
    const Poly rotations = zp;
    for (int i = 0; i <= deg; ++i)
        sum[i] += static_cast<long long>(p) * mixed[i] + static_cast<long long>(p - 1) * rotations[i];
    const long long numerator = sum[deg];
    if (numerator % (2 * p) != 0) fail(Errc::internal, "cycle index sum is not divisible by 2p");
    const long long count = numerator / (2 * p);
    if (count != static_cast<long long>(p - 1) * (p + 1) / 12)
        fail(Errc::internal, "cycle index count disagrees with (p^2-1)/12");
    return count;
}

long long bracelet_free_theta_count(int p) {
    require_prime(p, 5);
    // Orbits of 3-subsets of Z/p under x -> x+1 and x -> -x, counted by
    // canonical (lexicographically smallest) orbit elements.
    std::set<std::array<int, 3>> canonical;
    for (int a = 0; a < p; ++a)
        for (int b = a + 1; b < p; ++b)
            for (int c = b + 1; c < p; ++c) {
                std::array<int, 3> best = {p, p, p};
                for (int sign : {1, -1})
                    for (int shift = 0; shift < p; ++shift) {
                        std::array<int, 3> image = {((a * sign + shift) % p + p) % p,
                                                    ((b * sign + shift) % p + p) % p,
                                                    ((c * sign + shift) % p + p) % p};
                        std::sort(image.begin(), image.end());
                        best = std::min(best, image);
                    }
                canonical.insert(best);
            }
    return static_cast<long long>(canonical.size());
}

std::vector<std::array<int, 3>> free_theta_representatives(int p) {
    require_prime(p, 5);
    std::vector<std::array<int, 3>> out;
    for (int i = 1; 3 * i < p + 1; ++i)
        for (int j = 2 * i; 2 * j <= p + i; ++j) out.push_back({0, i, j});
    return out;
}

ThetaAutClass theta_aut_class(int p, int i, int j, int k) {
    require_prime(p, 5);
    const auto r = [p](int x) { return (x % p + p) % p; };
    if (r(i) == r(j) || r(j) == r(k) || r(i) == r(k))
        fail(Errc::not_distinct, "gains must be pairwise distinct mod p");
    // i+j+k = 3k is the pairwise condition i+j = 2k, i.e. an arithmetic
    // progression: exactly then a reflection of Z/p preserves the gain set.
    const int sum = r(i + j + k);
    if (sum == r(3 * i) || sum == r(3 * j) || sum == r(3 * k)) return ThetaAutClass::dihedral;
    return ThetaAutClass::cyclic;
}

DilatedThetaCensus dilated_theta_census(int p) {
    require_prime(p, 5);
    DilatedThetaCensus out;
    const auto r = [p](int x) { return (x % p + p) % p; };
    std::set<std::array<int, 3>> distinct_orbits;
    std::set<int> reflection_orbits;
    for (int i = 1; i < p; ++i)
        for (int j = 1; j < p; ++j) {
            const int k = r(-i - j);
            if (k == 0) continue;
            if (i == j && j == k) continue;
            if (i == j || j == k || i == k) {
                // Shape (a, a, -2a) up to permutation; a and -a give one class.
                const int a = i == j ? i : (j == k ? j : i);
                reflection_orbits.insert(std::min(a, p - a));
                continue;
            }
            std::array<int, 3> best = {p, p, p};
            for (int sign : {1, -1}) {
                std::array<int, 3> image = {r(sign * i), r(sign * j), r(sign * k)};
                std::sort(image.begin(), image.end());
                best = std::min(best, image);
            }
            distinct_orbits.insert(best);
        }
    out.distinct_count = static_cast<long long>(distinct_orbits.size());
    out.reflection_count = static_cast<long long>(reflection_orbits.size());
    out.distinct_representatives.assign(distinct_orbits.begin(), distinct_orbits.end());
    if (out.distinct_count != static_cast<long long>(p - 1) * (p - 5) / 12)
        fail(Errc::internal, "dilated theta count disagrees with (p-1)(p-5)/12");
    if (out.reflection_count != (p - 1) / 2)
        fail(Errc::internal, "dilated theta reflection count disagrees with (p-1)/2");
    return out;
}

namespace {

const char* const kFamilies[] = {
    "dumbbell free, one gain zero",
    "dumbbell free, equal gains",
    "dumbbell free, distinct gains",
    "dumbbell one dilated loop, free gain zero",
    "dumbbell one dilated loop, free gain nonzero",
    "dumbbell dilated loops, equal flows",
    "dumbbell dilated loops, distinct flows",
    "theta free, repeated gain",
    "theta free, distinct gains, dihedral",
    "theta free, distinct gains, cyclic",
    "theta mixed dilated pair",
    "theta dilated, repeated flow",
    "theta dilated, distinct flows",
};

// Normalized loop decoration: gain or flow folded into 0..(p-1)/2.
int folded(int p, int value) { return value == 0 ? 0 : std::min(value, p - value); }

std::string classify_dumbbell(const PCover& c, const std::vector<int>& loops) {
    const int p = c.p;
    const auto loop_value = [&](int e) {
        const int h = c.target.edges[e].a;
        return c.edge_is_dilated(e) ? folded(p, c.flow.at(h)) : folded(p, c.oriented_gain(h));
    };
    const int dilated = static_cast<int>(c.edge_is_dilated(loops[0])) +
                        static_cast<int>(c.edge_is_dilated(loops[1]));
    int x = loop_value(loops[0]);
    int y = loop_value(loops[1]);
    if (dilated == 0) {
        if (x > y) std::swap(x, y);
        if (x == 0 && y == 0) fail(Errc::unclassifiable_cell, "free dumbbell with zero gains");
        if (x == 0) return kFamilies[0];
        return x == y ? kFamilies[1] : kFamilies[2];
    }
    if (dilated == 1) {
        const int free_gain = c.edge_is_dilated(loops[0]) ? y : x;
        return free_gain == 0 ? kFamilies[3] : kFamilies[4];
    }
    return x == y ? kFamilies[5] : kFamilies[6];
}

std::string classify_theta(const PCover& c) {
    const WeightedGraph& T = c.target;
    int dilated = 0;
    for (int e = 0; e < 3; ++e) dilated += c.edge_is_dilated(e);
    const int v0 = T.vertices[0];
    const auto half_at_v0 = [&](int e) {
        return T.root[T.edges[e].a] == v0 ? T.edges[e].a : T.edges[e].b;
    };
    if (dilated == 0) {
        const int x0 = c.oriented_gain(half_at_v0(0));
        const int x1 = c.oriented_gain(half_at_v0(1));
        const int x2 = c.oriented_gain(half_at_v0(2));
        if (x0 == x1 && x1 == x2) fail(Errc::unclassifiable_cell, "free theta with equal gains");
        if (x0 == x1 || x1 == x2 || x0 == x2) return kFamilies[7];
        return theta_aut_class(c.p, x0, x1, x2) == ThetaAutClass::dihedral ? kFamilies[8]
                                                                           : kFamilies[9];
    }
    if (dilated == 2) return kFamilies[10];
    if (dilated == 3) {
        const int f0 = c.flow.at(half_at_v0(0));
        const int f1 = c.flow.at(half_at_v0(1));
        const int f2 = c.flow.at(half_at_v0(2));
        if (f0 == f1 && f1 == f2) fail(Errc::unclassifiable_cell, "theta with three equal flows");
        return (f0 == f1 || f1 == f2 || f0 == f2) ? kFamilies[11] : kFamilies[12];
    }
    fail(Errc::unclassifiable_cell, "theta with a single dilated edge");
}

} // namespace

FamilyReport maximal_family_census_check(int p, const CensusLevel& maximal) {
    require_prime(p, 5);
    if (maximal.p != p) fail(Errc::prime_mismatch, "census level has a different prime");
    if (maximal.n != 2) fail(Errc::internal, "family classification needs the three-edge level");

    FamilyReport report;
    for (const char* name : kFamilies) report.family_order.push_back(name);

    const long long m = (p - 1) / 2;
    const long long pairs = static_cast<long long>(p - 1) * (p - 3) / 8;
    const long long sparse = static_cast<long long>(p - 1) * (p - 5) / 12;
    report.expected = {
        {kFamilies[0], m},  {kFamilies[1], m},      {kFamilies[2], pairs},
        {kFamilies[3], m},  {kFamilies[4], m * m},  {kFamilies[5], m},
        {kFamilies[6], pairs}, {kFamilies[7], m},   {kFamilies[8], m},
        {kFamilies[9], sparse}, {kFamilies[10], m}, {kFamilies[11], m},
        {kFamilies[12], sparse},
    };

    for (const std::string& name : report.family_order) report.counted[name] = 0;
    for (const PCover& c : maximal.orbit_reps) {
        std::vector<int> loops;
        for (int e = 0; e < c.target.num_edges(); ++e)
            if (c.target.is_loop(e)) loops.push_back(e);
        std::string family;
        if (c.target.num_edges() != 3) {
            fail(Errc::unclassifiable_cell, "not a three-edge cover");
        } else if (loops.size() == 2) {
            family = classify_dumbbell(c, loops);
        } else if (loops.empty() && c.target.num_vertices() == 2) {
            family = classify_theta(c);
        } else {
            fail(Errc::unclassifiable_cell, "target is neither dumbbell nor theta");
        }
        ++report.counted[family];
        ++report.total;
    }

    report.ok = report.counted == report.expected && report.total == expected_maximal_cells(p);
    return report;
}

} // namespace tcov
