#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "voigtice/sinc_expansion.hpp"

// Throughput comparison of the two engines on large input arrays. The point
// set is generated from a fixed seed with an explicit bit-level mapping, so
// the numerical outputs (checksums) are reproducible across runs and
// platforms; only the timings vary.

namespace voigtice {

/// Deterministic upper-half-plane points: x uniform in (0, 15), y
/// log-uniform in (1e-4, 15), from a seeded mt19937_64 with an explicit
/// 53-bit mantissa mapping.
std::vector<std::complex<double>> bench_points(std::size_t count, std::uint64_t seed);

struct BenchResult {
    std::string engine;
    double best_seconds = 0.0;
    double points_per_second = 0.0;
    // Neumaier sums over Re and Im of all outputs; deterministic
    double checksum_re = 0.0;
    double checksum_im = 0.0;
};

struct BenchReport {
    std::size_t size = 0;
    std::uint64_t seed = 0;
    int repetitions = 0;
    double points_checksum_x = 0.0;
    double points_checksum_y = 0.0;
    std::vector<BenchResult> results;
    // ICE points/s divided by Weideman points/s, when both engines ran
    double throughput_ratio = 0.0;

    std::string text() const;
};

BenchReport run_bench(std::size_t count, std::uint64_t seed, int repetitions,
                      const ExpansionParams& params, int weideman_terms = 16,
                      bool run_ice = true, bool run_weideman = true);

} // namespace voigtice
