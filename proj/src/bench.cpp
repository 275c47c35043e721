#include "voigtice/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <sstream>
#include <stdexcept>

#include "voigtice/dd.hpp"
#include "voigtice/faddeeva.hpp"
#include "voigtice/weideman.hpp"

namespace voigtice {

namespace {

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

double unit_from_bits(std::uint64_t u) {
    // top 53 bits -> [0, 1); identical on every platform
    return static_cast<double>(u >> 11) * 0x1p-53;
}

} // namespace

std::vector<std::complex<double>> bench_points(std::size_t count, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<std::complex<double>> pts;
    pts.reserve(count);
    const double ly0 = std::log10(1e-4), ly1 = std::log10(15.0);
    for (std::size_t i = 0; i < count; ++i) {
        double x = 15.0 * unit_from_bits(rng());
        double y = std::pow(10.0, ly0 + (ly1 - ly0) * unit_from_bits(rng()));
        pts.emplace_back(x, y);
    }
    return pts;
}

std::string BenchReport::text() const {
    std::ostringstream out;
    out << "bench: size=" << size << " seed=" << seed << " reps=" << repetitions << '\n';
    out << "points checksum: x=" << fmt17(points_checksum_x) << " y=" << fmt17(points_checksum_y)
        << '\n';
    for (const auto& r : results) {
        out << "engine " << r.engine << ": best=" << fmt17(r.best_seconds)
            << " s, points/s=" << fmt17(r.points_per_second)
            << ", checksum re=" << fmt17(r.checksum_re) << " im=" << fmt17(r.checksum_im) << '\n';
    }
    if (throughput_ratio > 0.0)
        out << "throughput ratio ice:weideman = " << fmt17(throughput_ratio) << '\n';
    return out.str();
}

BenchReport run_bench(std::size_t count, std::uint64_t seed, int repetitions,
                      const ExpansionParams& params, int weideman_terms, bool run_ice,
                      bool run_weideman) {
    if (count < 1) throw std::invalid_argument("run_bench: count must be positive");
    if (repetitions < 1) throw std::invalid_argument("run_bench: repetitions must be positive");

    BenchReport report;
    report.size = count;
    report.seed = seed;
    report.repetitions = repetitions;

    const auto pts = bench_points(count, seed);
    {
        NeumaierSum sx, sy;
        for (const auto& z : pts) {
            sx.add(z.real());
            sy.add(z.imag());
        }
        report.points_checksum_x = sx.value();
        report.points_checksum_y = sy.value();
    }

    std::vector<std::complex<double>> out(count);
    using clock = std::chrono::steady_clock;

    auto time_engine = [&](const char* name, auto&& evaluate) {
        BenchResult r;
        r.engine = name;
        double best = HUGE_VAL;
        for (int rep = 0; rep < repetitions; ++rep) {
            auto t0 = clock::now();
            evaluate();
            auto t1 = clock::now();
            best = std::min(best, std::chrono::duration<double>(t1 - t0).count());
        }
        r.best_seconds = best;
        r.points_per_second = best > 0.0 ? static_cast<double>(count) / best : HUGE_VAL;
        NeumaierSum sre, sim;
        for (const auto& v : out) {
            sre.add(v.real());
            sim.add(v.imag());
        }
        r.checksum_re = sre.value();
        r.checksum_im = sim.value();
        report.results.push_back(r);
        return r.points_per_second;
    };

    double ice_pps = 0.0, weid_pps = 0.0;
    if (run_ice) {
        const CoefficientSet coeffs(params);
        ice_pps = time_engine("ice", [&] { eval_batch(pts, out, coeffs); });
    }
    if (run_weideman) {
        const WeidemanCoefficients wc = build_weideman(weideman_terms);
        weid_pps = time_engine("weideman", [&] { eval_batch_weideman(pts, out, wc); });
    }
    if (ice_pps > 0.0 && weid_pps > 0.0 && std::isfinite(ice_pps) && std::isfinite(weid_pps))
        report.throughput_ratio = ice_pps / weid_pps;
    return report;
}

} // namespace voigtice
