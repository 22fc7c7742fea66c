// Fraction-free (Bareiss) elimination over arbitrary-precision integers.
#include "tcov/linalg.hpp"

#include <boost/multiprecision/cpp_int.hpp>

namespace tcov {

using BigInt = boost::multiprecision::cpp_int;

int matrix_rank(const IntMatrix& m) {
    const std::size_t rows = m.size();
    if (rows == 0) return 0;
    const std::size_t cols = m.front().size();
    std::vector<std::vector<BigInt>> a(rows, std::vector<BigInt>(cols));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) a[i][j] = m[i][j];

    int rank = 0;
    BigInt prev = 1; // previous pivot; divisions below are exact (Bareiss)
    for (std::size_t col = 0; col < cols && rank < static_cast<int>(rows); ++col) {
        std::size_t pivot = rows;
        for (std::size_t i = rank; i < rows; ++i)
            if (a[i][col] != 0) {
                pivot = i;
                break;
            }
        if (pivot == rows) continue;
        std::swap(a[rank], a[pivot]);
        const BigInt piv = a[rank][col];
        for (std::size_t i = rank + 1; i < rows; ++i) {
            for (std::size_t j = col + 1; j < cols; ++j)
                a[i][j] = (piv * a[i][j] - a[i][col] * a[rank][j]) / prev;
            a[i][col] = 0;
        }
        prev = piv;
        ++rank;
    }
    return rank;
}

} // namespace tcov
