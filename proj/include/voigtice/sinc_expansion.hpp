#pragma once

#include <stdexcept>

// Incomplete cosine expansions of the sinc function and the sampled
// Gaussian constructions built on them. All functions here are pure and
// thread-safe.

namespace voigtice {

// Parameter set for the dyadic expansion: sampling step h, 2N+1 sampling
// points, 2^{M-1} cosine terms and the damping/shift constant.
struct ExpansionParams {
    double step;        // h > 0
    int half_count;     // N >= 0, sampling points n = -N..N
    int depth;          // M >= 1, term count 2^{M-1}
    double sigma_shift; // >= 0; values below ~2 leave periodic peaks undamped

    ExpansionParams(double step_, int half_count_, int depth_, double sigma_shift_);

    int term_count() const { return 1 << (depth - 1); }

    // Period of the expansion, 2^{M+1} h. Exact when h is a power of two.
    double period() const;

    // Non-fatal validity note: damping only suppresses the periodic peaks
    // effectively for sigma_shift >= ~2.
    bool shift_below_recommended() const { return sigma_shift < 2.0; }

    static ExpansionParams defaults(); // (0.25, 23, 5, 2.75)
};

// Expansion with an arbitrary term count L instead of 2^{M-1}; period 4 L h.
struct GeneralExpansionParams {
    int term_count; // L >= 1
    double step;    // h > 0

    GeneralExpansionParams(int term_count_, double step_);
    double period() const;
};

// Poisson-summation form; term index runs over |p| <= floor(period / 2 pi).
struct PoissonExpansionParams {
    double period; // > 0

    explicit PoissonExpansionParams(double period_);
    long max_index() const;
};

/// sin(t)/t with the removable singularity filled in (1 at t = 0).
double sinc(double t);

/// Truncated Vieta product  prod_{m=1..M} cos(t / 2^m).
double vieta_product(double t, int depth);

/// Product-to-sum form  2^{1-M} sum_{m=1..2^{M-1}} cos((2m-1) t / 2^M);
/// identical to vieta_product up to rounding.
double cosine_sum(double t, int depth);

/// 2^{1-M} sum_m cos(pi (2m-1) t / (2^M h)); periodic approximation of
/// sinc(pi t / h) valid on [-T/4, T/4].
double incomplete_cosine_sinc(double t, const ExpansionParams& params);

/// (1/L) sum_l cos(pi (l - 1/2) t / (L h)); reduces to
/// incomplete_cosine_sinc when L = 2^{M-1}.
double general_cosine_sinc(double t, const GeneralExpansionParams& params);

/// (pi/T) sum_{|p| <= floor(T/2pi)} cos(2 pi p t / T); approximates sinc(t)
/// on [-T/2, T/2]. Collapses to the constant pi/T for T < 2 pi.
double poisson_cosine_sinc(double t, const PoissonExpansionParams& params);

/// Symmetric partial sum  sum_{p=-P..P} sinc(t + p T).
/// For 0 < T < 2 pi it converges to pi/T as P grows.
double periodized_sinc_sum(double t, double period, long max_index);

/// Double cosine sum reconstructing exp(-t^2) from samples exp(-(nh)^2);
/// periodic, with spurious peaks at t = +-T/2, +-T, ... (demo surface).
double sampled_gaussian(double t, const ExpansionParams& params);

/// exp(-sigma t) times the shifted reconstruction of exp(-(t-sigma/2)^2);
/// the damping suppresses the periodic peaks for sigma_shift >~ 2.
double damped_shifted_gaussian(double t, const ExpansionParams& params);

} // namespace voigtice
