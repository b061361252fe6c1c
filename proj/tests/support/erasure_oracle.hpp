#pragma once

// Exhaustive-enumeration helpers shared by the erasure tests and the
// acceptance suite. Only usable for small codes (walks all 2^N erasures).

#include <cmath>
#include <cstdint>
#include <functional>
#include <vector>

#include "hgpopt/erasure.hpp"
#include "hgpopt/hgp.hpp"

namespace hgpopt::testsupport {

inline Erasure erasure_from_mask(std::uint64_t mask, std::int32_t num_qubits) {
    Erasure e;
    for (std::int32_t q = 0; q < num_qubits; ++q)
        if ((mask >> q) & 1u) e.support.push_back(q);
    return e;
}

/// Exact failure probability at erasure rate p: sum of p^|E| (1-p)^(N-|E|)
/// over every uncorrectable erasure pattern E, using the given predicate.
inline double exact_failure_probability(
    const HgpCode& code, double p,
    const std::function<bool(const HgpCode&, const Erasure&)>& correctable) {
    const std::int32_t n = code.num_qubits;
    double total = 0.0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        const auto e = erasure_from_mask(mask, n);
        if (!correctable(code, e)) {
            const auto w = static_cast<double>(e.support.size());
            total += std::pow(p, w) * std::pow(1.0 - p, static_cast<double>(n) - w);
        }
    }
    return total;
}

}  // namespace hgpopt::testsupport
