#include "voigtice/sinc_expansion.hpp"

#include <cmath>

#include "voigtice/dd.hpp"

namespace voigtice {

namespace {

constexpr double kTwoPi = 6.283185307179586;

// Fractional part of t/period in [-1/2, 1/2]. The subtraction is exact;
// the division is exact whenever period is a power of two, which makes all
// expansion evaluations bit-exactly periodic for such parameter sets.
double reduced_phase(double t, double period) {
    double u = t / period;
    return u - std::nearbyint(u);
}

void check(bool ok, const char* msg) {
    if (!ok) throw std::invalid_argument(msg);
}

} // namespace

ExpansionParams::ExpansionParams(double step_, int half_count_, int depth_, double sigma_shift_)
    : step(step_), half_count(half_count_), depth(depth_), sigma_shift(sigma_shift_) {
    check(std::isfinite(step) && step > 0.0, "ExpansionParams: step h must be positive");
    check(half_count >= 0, "ExpansionParams: half_count N must be non-negative");
    check(depth >= 1 && depth <= 26, "ExpansionParams: depth M must be in [1, 26]");
    check(std::isfinite(sigma_shift) && sigma_shift >= 0.0,
          "ExpansionParams: sigma_shift must be non-negative");
}

double ExpansionParams::period() const { return std::ldexp(step, depth + 1); }

ExpansionParams ExpansionParams::defaults() { return {0.25, 23, 5, 2.75}; }

GeneralExpansionParams::GeneralExpansionParams(int term_count_, double step_)
    : term_count(term_count_), step(step_) {
    check(term_count >= 1, "GeneralExpansionParams: term_count L must be positive");
    check(std::isfinite(step) && step > 0.0, "GeneralExpansionParams: step h must be positive");
}

double GeneralExpansionParams::period() const { return (4.0 * term_count) * step; }

PoissonExpansionParams::PoissonExpansionParams(double period_) : period(period_) {
    check(std::isfinite(period) && period > 0.0, "PoissonExpansionParams: period must be positive");
}

long PoissonExpansionParams::max_index() const { return static_cast<long>(std::floor(period / kTwoPi)); }

double sinc(double t) {
    // Taylor fallback below 1e-4; both branches agree to < 1 ulp at the seam.
    double a = std::abs(t);
    if (a < 1e-4) {
        double t2 = t * t;
        return 1.0 - t2 / 6.0 * (1.0 - t2 / 20.0 * (1.0 - t2 / 42.0));
    }
    return std::sin(t) / t;
}

double vieta_product(double t, int depth) {
    check(depth >= 1, "vieta_product: depth M must be positive");
    double prod = 1.0;
    for (int m = 1; m <= depth; ++m)
        prod *= std::cos(std::ldexp(t, -m));
    return prod;
}

double cosine_sum(double t, int depth) {
    check(depth >= 1 && depth <= 26, "cosine_sum: depth M must be in [1, 26]");
    const double u = std::ldexp(t, -depth); // exact
    const int terms = 1 << (depth - 1);
    NeumaierSum acc;
    for (int m = 1; m <= terms; ++m)
        acc.add(std::cos((2 * m - 1) * u));
    return std::ldexp(acc.value(), 1 - depth);
}

double incomplete_cosine_sinc(double t, const ExpansionParams& params) {
    const double r = reduced_phase(t, params.period());
    const int terms = params.term_count();
    NeumaierSum acc;
    for (int m = 1; m <= terms; ++m)
        acc.add(std::cos(kTwoPi * ((2 * m - 1) * r)));
    return std::ldexp(acc.value(), 1 - params.depth);
}

double general_cosine_sinc(double t, const GeneralExpansionParams& params) {
    const double r = reduced_phase(t, params.period());
    NeumaierSum acc;
    for (int l = 1; l <= params.term_count; ++l)
        acc.add(std::cos(kTwoPi * ((2 * l - 1) * r)));
    return acc.value() / params.term_count;
}

double poisson_cosine_sinc(double t, const PoissonExpansionParams& params) {
    const long pmax = params.max_index();
    const double u = t / params.period;
    NeumaierSum acc;
    for (long p = -pmax; p <= pmax; ++p)
        acc.add(std::cos(kTwoPi * (p * u)));
    return consts::pi_dd.hi / params.period * acc.value();
}

double periodized_sinc_sum(double t, double period, long max_index) {
    check(max_index >= 1, "periodized_sinc_sum: max_index P must be positive");
    NeumaierSum acc;
    for (long p = -max_index; p <= max_index; ++p)
        acc.add(sinc(t + p * period));
    return acc.value();
}

double sampled_gaussian(double t, const ExpansionParams& params) {
    const double h = params.step;
    const double T = params.period();
    const int terms = params.term_count();
    NeumaierSum acc;
    for (int n = -params.half_count; n <= params.half_count; ++n) {
        const double tn = n * h;
        const double weight = std::exp(-tn * tn);
        const double r = reduced_phase(t - tn, T);
        for (int m = 1; m <= terms; ++m)
            acc.add(weight * std::cos(kTwoPi * ((2 * m - 1) * r)));
    }
    return std::ldexp(acc.value(), 1 - params.depth);
}

double damped_shifted_gaussian(double t, const ExpansionParams& params) {
    const double h = params.step;
    const double T = params.period();
    const double shift = params.sigma_shift / 2.0; // exact
    const int terms = params.term_count();
    NeumaierSum acc;
    for (int n = -params.half_count; n <= params.half_count; ++n) {
        const double tn = n * h;
        const double weight = std::exp(-tn * tn);
        const double r = reduced_phase(t - tn - shift, T);
        for (int m = 1; m <= terms; ++m)
            acc.add(weight * std::cos(kTwoPi * ((2 * m - 1) * r)));
    }
    return std::exp(-params.sigma_shift * t) * std::ldexp(acc.value(), 1 - params.depth);
}

} // namespace voigtice
