#pragma once

#include <cstdint>
#include <stdexcept>
#include <utility>

#include "hgpopt/bit_matrix.hpp"

namespace hgpopt {

/// CSS code produced by the hypergraph product of a classical parity-check
/// matrix with itself. Immutable after construction.
struct HgpCode {
    std::int32_t n = 0;  // classical code length
    std::int32_t m = 0;  // classical check count
    BitMatrix hx;        // (m*n) x (n^2 + m^2)
    BitMatrix hz;        // (n*m) x (n^2 + m^2)
    std::int32_t num_qubits = 0;
    std::int32_t num_logical = 0;
    std::int32_t rank_hx = 0;
    std::int32_t rank_hz = 0;
};

/// Builds the product code of h with itself:
///   hx = [h (x) 1_n | 1_m (x) h^T],  hz = [1_n (x) h | h^T (x) 1_m].
/// The orthogonality of the two row spaces is verified at construction;
/// a failure indicates a programming error, not bad input.
inline HgpCode build_hgp(const BitMatrix& h) {
    if (h.rows() == 0 || h.cols() == 0)
        throw std::invalid_argument("build_hgp: parity-check matrix must be nonempty");

    const std::size_t m = h.rows(), n = h.cols();
    const BitMatrix ht = h.transpose();
    const BitMatrix eye_n = BitMatrix::identity(n);
    const BitMatrix eye_m = BitMatrix::identity(m);

    HgpCode code;
    code.n = static_cast<std::int32_t>(n);
    code.m = static_cast<std::int32_t>(m);
    code.hx = hstack(kron(h, eye_n), kron(eye_m, ht));
    code.hz = hstack(kron(eye_n, h), kron(ht, eye_m));
    code.num_qubits = static_cast<std::int32_t>(n * n + m * m);
    code.rank_hx = static_cast<std::int32_t>(rank(code.hx));
    code.rank_hz = static_cast<std::int32_t>(rank(code.hz));
    code.num_logical = code.num_qubits - code.rank_hx - code.rank_hz;

    if (!mul(code.hx, code.hz.transpose()).is_zero())
        throw std::logic_error("build_hgp: CSS orthogonality check failed");
    return code;
}

/// (N, K): physical and logical qubit counts.
inline std::pair<std::int32_t, std::int32_t> code_parameters(const HgpCode& c) {
    return {c.num_qubits, c.num_logical};
}

}  // namespace hgpopt
