#pragma once

// Test-only reference implementations over plain 0/1 integer matrices.
// These stay deliberately naive and independent of the bit-packed code
// paths they are used to check.

#include <cstddef>
#include <vector>

#include "hgpopt/bit_matrix.hpp"
#include "hgpopt/rng.hpp"

namespace hgpopt::testsupport {

using IntMatrix = std::vector<std::vector<int>>;

inline IntMatrix to_int_matrix(const BitMatrix& m) {
    IntMatrix out(m.rows(), std::vector<int>(m.cols(), 0));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m.get(i, j) ? 1 : 0;
    return out;
}

inline std::size_t naive_rank(IntMatrix a) {
    const std::size_t rows = a.size();
    const std::size_t cols = rows ? a[0].size() : 0;
    std::size_t r = 0;
    for (std::size_t col = 0; col < cols && r < rows; ++col) {
        std::size_t pivot = r;
        while (pivot < rows && a[pivot][col] % 2 == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(a[r], a[pivot]);
        for (std::size_t i = r + 1; i < rows; ++i)
            if (a[i][col] % 2 == 1)
                for (std::size_t j = col; j < cols; ++j) a[i][j] = (a[i][j] + a[r][j]) % 2;
        ++r;
    }
    return r;
}

inline IntMatrix naive_mul(const IntMatrix& a, const IntMatrix& b) {
    const std::size_t n = a.size(), m = b.empty() ? 0 : b[0].size(), k = b.size();
    IntMatrix c(n, std::vector<int>(m, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t l = 0; l < k; ++l)
            if (a[i][l] % 2 == 1)
                for (std::size_t j = 0; j < m; ++j) c[i][j] = (c[i][j] + b[l][j]) % 2;
    return c;
}

inline IntMatrix naive_kron(const IntMatrix& a, const IntMatrix& b) {
    const std::size_t ar = a.size(), ac = ar ? a[0].size() : 0;
    const std::size_t br = b.size(), bc = br ? b[0].size() : 0;
    IntMatrix k(ar * br, std::vector<int>(ac * bc, 0));
    for (std::size_t i1 = 0; i1 < ar; ++i1)
        for (std::size_t j1 = 0; j1 < ac; ++j1)
            for (std::size_t i2 = 0; i2 < br; ++i2)
                for (std::size_t j2 = 0; j2 < bc; ++j2)
                    k[i1 * br + i2][j1 * bc + j2] = (a[i1][j1] * b[i2][j2]) % 2;
    return k;
}

inline BitMatrix random_bit_matrix(std::size_t rows, std::size_t cols, double density, Rng& rng) {
    BitMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            if (rng.bernoulli(density)) m.set(i, j, true);
    return m;
}

}  // namespace hgpopt::testsupport
