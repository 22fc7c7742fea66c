// Shared error type, canonical-key type and small numeric helpers used
// throughout the library.
#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace tcov {

// Every recoverable failure carries one of these codes so callers (and the
// CLI) can map failures to exit codes without parsing messages.
enum class Errc {
    invalid_involution,
    invalid_root,
    fixed_point_mismatch,
    negative_genus,
    disconnected_graph,
    unknown_edge,
    unknown_vertex,
    unknown_cell,
    invalid_cover,
    prime_mismatch,
    not_prime,
    dilated_vertex_switch,
    walk_through_dilated_cell,
    dilated_cover,
    not_injective,
    missing_face,
    not_distinct,
    unclassifiable_cell,
    assumption_violated,
    resource_budget_exceeded,
    inconsistent_euler,
    internal,
};

struct Error : std::runtime_error {
    Errc code;
    Error(Errc c, const std::string& msg) : std::runtime_error(msg), code(c) {}
};

[[noreturn]] inline void fail(Errc c, const std::string& msg) { throw Error(c, msg); }

inline const char* errc_name(Errc c) {
    switch (c) {
    case Errc::invalid_involution: return "invalid_involution";
    case Errc::invalid_root: return "invalid_root";
    case Errc::fixed_point_mismatch: return "fixed_point_mismatch";
    case Errc::negative_genus: return "negative_genus";
    case Errc::disconnected_graph: return "disconnected_graph";
    case Errc::unknown_edge: return "unknown_edge";
    case Errc::unknown_vertex: return "unknown_vertex";
    case Errc::unknown_cell: return "unknown_cell";
    case Errc::invalid_cover: return "invalid_cover";
    case Errc::prime_mismatch: return "prime_mismatch";
    case Errc::not_prime: return "not_prime";
    case Errc::dilated_vertex_switch: return "dilated_vertex_switch";
    case Errc::walk_through_dilated_cell: return "walk_through_dilated_cell";
    case Errc::dilated_cover: return "dilated_cover";
    case Errc::not_injective: return "not_injective";
    case Errc::missing_face: return "missing_face";
    case Errc::not_distinct: return "not_distinct";
    case Errc::unclassifiable_cell: return "unclassifiable_cell";
    case Errc::assumption_violated: return "assumption_violated";
    case Errc::resource_budget_exceeded: return "resource_budget_exceeded";
    case Errc::inconsistent_euler: return "inconsistent_euler";
    case Errc::internal: return "internal";
    }
    return "unknown";
}

// Canonical form of a graph or cover, encoded as a flat integer vector with a
// total lexicographic order.  Two objects are isomorphic exactly when their
// keys compare equal, so keys double as dictionary keys for deduplication.
struct CanonKey {
    std::vector<std::int64_t> v;
    auto operator<=>(const CanonKey&) const = default;
    bool operator==(const CanonKey&) const = default;
};

struct CanonKeyHash {
    std::size_t operator()(const CanonKey& k) const {
        std::size_t h = 1469598103934665603ull;
        for (std::int64_t x : k.v) {
            h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        }
        return h;
    }
};

inline bool is_prime(int n) {
    if (n < 2) return false;
    for (int d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline int mod_p(long long x, int p) {
    long long r = x % p;
    if (r < 0) r += p;
    return static_cast<int>(r);
}

// Sign of a permutation given in one-line notation (image of i at index i).
inline int permutation_sign(const std::vector<int>& perm) {
    std::vector<char> seen(perm.size(), 0);
    int sign = 1;
    for (std::size_t i = 0; i < perm.size(); ++i) {
        if (seen[i]) continue;
        std::size_t j = i, len = 0;
        while (!seen[j]) {
            seen[j] = 1;
            j = static_cast<std::size_t>(perm[j]);
            ++len;
        }
        if (len % 2 == 0) sign = -sign;
    }
    return sign;
}

} // namespace tcov
