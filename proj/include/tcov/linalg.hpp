// Exact rank computation for integer matrices (rank over the rationals),
// via fraction-free Gaussian elimination on arbitrary-precision integers.
#pragma once

#include <cstdint>
#include <vector>

namespace tcov {

// Dense row-major integer matrix; rows may be empty (rank 0).
using IntMatrix = std::vector<std::vector<std::int64_t>>;

// Rank of m over Q.  Exact: entries are promoted to arbitrary precision
// internally, so there is no overflow for any input.
int matrix_rank(const IntMatrix& m);

} // namespace tcov
