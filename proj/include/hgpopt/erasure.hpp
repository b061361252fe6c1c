#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <thread>
#include <vector>

#include "hgpopt/bit_matrix.hpp"
#include "hgpopt/hgp.hpp"
#include "hgpopt/rng.hpp"

namespace hgpopt {

/// Support of an erasure pattern: sorted, duplicate-free qubit indices.
struct Erasure {
    std::vector<std::int32_t> support;
};

/// Monte Carlo failure-rate estimate.
struct CostEstimate {
    std::int64_t failures = 0;
    std::int64_t trials = 0;
    double rate = 0.0;
    double std_error = 0.0;
    double erasure_prob = 0.0;
};

/// Each qubit is erased independently with probability p. Consumes exactly
/// one uniform draw per qubit, in index order.
inline Erasure sample_erasure(std::int32_t num_qubits, double p, Rng& rng) {
    if (p < 0.0 || p > 1.0) throw std::invalid_argument("sample_erasure: p outside [0, 1]");
    Erasure e;
    for (std::int32_t i = 0; i < num_qubits; ++i)
        if (rng.unit_double() < p) e.support.push_back(i);
    return e;
}

/// Maximum-likelihood correctability of an erasure. The erasure fails iff
/// some vector supported on it lies in ker Hx \ rowspace(Hz) or in
/// ker Hz \ rowspace(Hx); since rowspace(Hz) restricted to the erasure is a
/// subspace of ker Hx restricted to it (and vice versa), failure is a strict
/// dimension gap, computable from four ranks:
///   dim ker(H|E)                 = |E| - rank(H restricted to E)
///   dim of row-space vectors
///   supported on E               = rank(H) - rank(H restricted to E-complement)
/// This is the reference implementation; the Monte Carlo loop uses
/// ErasureChecker, which computes the same four ranks from transposed
/// matrices.
inline bool is_correctable(const HgpCode& code, const Erasure& erasure) {
    const std::size_t n = static_cast<std::size_t>(code.num_qubits);
    std::vector<std::size_t> erased;
    erased.reserve(erasure.support.size());
    for (const auto q : erasure.support) {
        if (q < 0 || static_cast<std::size_t>(q) >= n)
            throw std::out_of_range("is_correctable: erased index out of range");
        erased.push_back(static_cast<std::size_t>(q));
    }
    std::vector<std::size_t> intact;
    intact.reserve(n - erased.size());
    for (std::size_t q = 0, k = 0; q < n; ++q) {
        if (k < erased.size() && erased[k] == q)
            ++k;
        else
            intact.push_back(q);
    }

    const auto weight = static_cast<std::int64_t>(erased.size());
    const std::int64_t ker_x = weight - static_cast<std::int64_t>(rank(select_columns(code.hx, erased)));
    const std::int64_t im_z =
        code.rank_hz - static_cast<std::int64_t>(rank(select_columns(code.hz, intact)));
    if (ker_x != im_z) return false;

    const std::int64_t ker_z = weight - static_cast<std::int64_t>(rank(select_columns(code.hz, erased)));
    const std::int64_t im_x =
        code.rank_hx - static_cast<std::int64_t>(rank(select_columns(code.hx, intact)));
    return ker_z == im_x;
}

/// Enumeration oracle for the same criterion: walks all 2^|E| vectors
/// supported on the erasure and looks for one in ker Hx \ rowspace(Hz) or
/// ker Hz \ rowspace(Hx). Row-space membership is a rank comparison of the
/// stacked matrix, done incrementally against an echelon basis.
inline bool is_correctable_bruteforce(const HgpCode& code, const Erasure& erasure,
                                      std::size_t enumeration_limit = 20) {
    const std::size_t w = erasure.support.size();
    if (w > enumeration_limit)
        throw std::invalid_argument("is_correctable_bruteforce: erasure weight " +
                                    std::to_string(w) + " exceeds limit " +
                                    std::to_string(enumeration_limit));
    for (const auto q : erasure.support)
        if (q < 0 || q >= code.num_qubits)
            throw std::out_of_range("is_correctable_bruteforce: erased index out of range");

    const BitMatrix hxt = code.hx.transpose();
    const BitMatrix hzt = code.hz.transpose();

    GaussEliminator rowspace_x, rowspace_z;
    rowspace_x.reset(code.hx.cols());
    for (std::size_t i = 0; i < code.hx.rows(); ++i) rowspace_x.insert(code.hx.row(i));
    rowspace_z.reset(code.hz.cols());
    for (std::size_t i = 0; i < code.hz.rows(); ++i) rowspace_z.insert(code.hz.row(i));

    // Gray-code walk: vector k and k+1 differ in one support position, so the
    // candidate vector and both syndromes update with single XORs.
    const std::size_t words_v = BitMatrix::words_for(code.num_qubits);
    std::vector<std::uint64_t> v(words_v, 0);
    std::vector<std::uint64_t> syn_x(hxt.words_per_row(), 0);
    std::vector<std::uint64_t> syn_z(hzt.words_per_row(), 0);
    const auto is_zero = [](const std::vector<std::uint64_t>& words) {
        for (const auto x : words)
            if (x) return false;
        return true;
    };

    for (std::uint64_t counter = 1; counter < (std::uint64_t{1} << w); ++counter) {
        const std::size_t flip = static_cast<std::size_t>(std::countr_zero(counter));
        const std::size_t qubit = static_cast<std::size_t>(erasure.support[flip]);
        v[qubit >> 6] ^= std::uint64_t{1} << (qubit & 63);
        const auto rx = hxt.row(qubit);
        for (std::size_t i = 0; i < syn_x.size(); ++i) syn_x[i] ^= rx[i];
        const auto rz = hzt.row(qubit);
        for (std::size_t i = 0; i < syn_z.size(); ++i) syn_z[i] ^= rz[i];

        if (is_zero(syn_x) && !rowspace_z.reduces_to_zero(v)) return false;
        if (is_zero(syn_z) && !rowspace_x.reduces_to_zero(v)) return false;
    }
    return true;
}

/// Rank-based correctability specialized for the Monte Carlo loop: works on
/// transposed parity-check matrices so that restricting to a qubit subset is
/// a row selection, and reuses elimination scratch across trials.
class ErasureChecker {
  public:
    explicit ErasureChecker(const HgpCode& code)
        : num_qubits_(code.num_qubits),
          rank_hx_(code.rank_hx),
          rank_hz_(code.rank_hz),
          hxt_(code.hx.transpose()),
          hzt_(code.hz.transpose()) {}

    struct Scratch {
        GaussEliminator elim_a;
        GaussEliminator elim_b;
        std::vector<std::uint8_t> erased;
    };

    std::int32_t num_qubits() const { return num_qubits_; }

    /// erased[q] != 0 marks qubit q as erased; weight is the number of marks.
    bool is_correctable(const std::vector<std::uint8_t>& erased, std::int64_t weight,
                        Scratch& scratch) const {
        // Kernel dimensions restricted to the erasure (cheap side: |E| rows).
        GaussEliminator& ex = scratch.elim_a;
        GaussEliminator& ez = scratch.elim_b;
        ex.reset(hxt_.cols());
        ez.reset(hzt_.cols());
        for (std::int32_t q = 0; q < num_qubits_; ++q) {
            if (!erased[q]) continue;
            ex.insert(hxt_.row(q));
            ez.insert(hzt_.row(q));
        }
        const std::int64_t ker_x = weight - static_cast<std::int64_t>(ex.rank());
        const std::int64_t ker_z = weight - static_cast<std::int64_t>(ez.rank());
        if (ker_x == 0 && ker_z == 0) return true;  // both gaps are bounded by the kernels

        if (ker_x > 0 &&
            !complement_rank_matches(hzt_, erased, rank_hz_ - ker_x, scratch.elim_a))
            return false;
        if (ker_z > 0 &&
            !complement_rank_matches(hxt_, erased, rank_hx_ - ker_z, scratch.elim_a))
            return false;
        return true;
    }

  private:
    /// Feeds the non-erased rows of `mt` into an eliminator and reports
    /// whether their rank equals `target`. Once the rank passes the target it
    /// can only keep growing, so the first insertion beyond it settles the
    /// answer early.
    bool complement_rank_matches(const BitMatrix& mt, const std::vector<std::uint8_t>& erased,
                                 std::int64_t target, GaussEliminator& elim) const {
        elim.reset(mt.cols());
        std::int64_t r = 0;
        for (std::int32_t q = 0; q < num_qubits_; ++q) {
            if (erased[q]) continue;
            if (elim.insert(mt.row(q))) {
                if (++r > target) return false;
            }
        }
        return r == target;
    }

    std::int32_t num_qubits_;
    std::int32_t rank_hx_;
    std::int32_t rank_hz_;
    BitMatrix hxt_;
    BitMatrix hzt_;
};

namespace detail {

/// Failure count over trials [first, last); trial t draws its own generator
/// seeded from (master_seed, t), so any partition over workers gives the
/// same total.
inline std::int64_t count_failures(const ErasureChecker& checker, double p, std::int64_t first,
                                   std::int64_t last, std::uint64_t master_seed) {
    ErasureChecker::Scratch scratch;
    scratch.erased.assign(checker.num_qubits(), 0);
    std::int64_t failures = 0;
    for (std::int64_t t = first; t < last; ++t) {
        Rng rng(mix_seed(master_seed, static_cast<std::uint64_t>(t)));
        std::int64_t weight = 0;
        for (std::int32_t q = 0; q < checker.num_qubits(); ++q) {
            const bool hit = rng.unit_double() < p;
            scratch.erased[q] = hit;
            weight += hit;
        }
        if (!checker.is_correctable(scratch.erased, weight, scratch)) ++failures;
    }
    return failures;
}

}  // namespace detail

inline CostEstimate make_cost_estimate(std::int64_t failures, std::int64_t trials, double p) {
    CostEstimate est;
    est.failures = failures;
    est.trials = trials;
    est.rate = static_cast<double>(failures) / static_cast<double>(trials);
    est.std_error = std::sqrt(est.rate * (1.0 - est.rate) / static_cast<double>(trials));
    est.erasure_prob = p;
    return est;
}

/// Monte Carlo estimate of the logical failure rate under independent
/// erasure with probability p. Bit-identical for a fixed (code, p, trials,
/// master_seed) regardless of the worker count.
inline CostEstimate estimate_failure_rate(const HgpCode& code, double p, std::int64_t trials,
                                          std::uint64_t master_seed, int num_threads = 1) {
    if (trials < 1) throw std::invalid_argument("estimate_failure_rate: trials must be >= 1");
    if (p < 0.0 || p > 1.0) throw std::invalid_argument("estimate_failure_rate: p outside [0, 1]");
    const ErasureChecker checker(code);

    std::int64_t failures = 0;
    if (num_threads <= 1) {
        failures = detail::count_failures(checker, p, 0, trials, master_seed);
    } else {
        const std::int64_t workers = std::min<std::int64_t>(num_threads, trials);
        std::vector<std::int64_t> counts(workers, 0);
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (std::int64_t w = 0; w < workers; ++w) {
            const std::int64_t first = trials * w / workers;
            const std::int64_t last = trials * (w + 1) / workers;
            pool.emplace_back([&, w, first, last] {
                counts[w] = detail::count_failures(checker, p, first, last, master_seed);
            });
        }
        for (auto& th : pool) th.join();
        for (const auto c : counts) failures += c;
    }
    return make_cost_estimate(failures, trials, p);
}

/// One estimate per grid point, each with an independently derived seed.
inline std::vector<CostEstimate> sweep_curve(const HgpCode& code, const std::vector<double>& p_grid,
                                             std::int64_t trials, std::uint64_t master_seed,
                                             int num_threads = 1) {
    if (p_grid.empty()) throw std::invalid_argument("sweep_curve: empty grid");
    std::vector<CostEstimate> curve;
    curve.reserve(p_grid.size());
    for (std::size_t i = 0; i < p_grid.size(); ++i)
        curve.push_back(estimate_failure_rate(code, p_grid[i], trials,
                                              mix_seed(master_seed, 0x5beeb ^ i), num_threads));
    return curve;
}

}  // namespace hgpopt
