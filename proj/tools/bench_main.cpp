// Timing harness for the Monte Carlo correctability kernel. Not a test;
// used to size trial budgets for the optimizer presets.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>

#include "hgpopt/erasure.hpp"
#include "hgpopt/hgp.hpp"
#include "hgpopt/tanner.hpp"

using namespace hgpopt;

namespace {

TannerState full_rank_state(std::int32_t m, std::int32_t n, std::uint64_t seed0) {
    for (std::uint64_t seed = seed0;; ++seed) {
        const auto s = random_regular(m, n, 3, 4, seed);
        const auto h = binary_matrix(s);
        if (h.popcount() == s.slot_count() && rank(h) == static_cast<std::size_t>(m)) return s;
    }
}

void bench_family(std::int32_t m, std::int32_t n, double p, std::int64_t trials) {
    const auto state = full_rank_state(m, n, 1);
    const auto t0 = std::chrono::steady_clock::now();
    const auto code = build_hgp(binary_matrix(state));
    const auto t1 = std::chrono::steady_clock::now();
    const auto est = estimate_failure_rate(code, p, trials, 0xbe7c);
    const auto t2 = std::chrono::steady_clock::now();

    const double build_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    const double mc_ms = std::chrono::duration<double, std::milli>(t2 - t1).count();
    std::printf("[[%d,%d]]  p=%.5f  trials=%lld  rate=%.4f  build=%.2f ms  mc=%.1f ms  (%.1f us/trial)\n",
                code.num_qubits, code.num_logical, p, static_cast<long long>(trials), est.rate,
                build_ms, mc_ms, mc_ms * 1000.0 / static_cast<double>(trials));
}

}  // namespace

int main(int argc, char** argv) {
    std::int64_t trials = argc > 1 ? std::atoll(argv[1]) : 2000;
    bench_family(15, 20, 9.0 / 32.0, trials);
    if (argc > 2 && std::string(argv[2]) == "all") {
        bench_family(24, 32, 9.0 / 32.0, trials);
        bench_family(27, 36, 12.0 / 32.0, trials);
    }
    return 0;
}
