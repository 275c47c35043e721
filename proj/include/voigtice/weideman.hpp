#pragma once

#include <complex>
#include <span>
#include <vector>

// Weideman's rational approximation of the Faddeeva function,
//   w(z) ~ (1/sqrt(pi))/(L - iz) + 2/(L - iz)^2 sum_{n=0}^{N-1} gamma_{n+1} Z^n,
//   Z = (L + iz)/(L - iz),  L = 2^{-1/4} sqrt(N),
// with coefficients gamma_n obtained as Fourier coefficients of the Gaussian
// mapped onto the unit circle. Serves as the accuracy/speed baseline.

namespace voigtice {

struct WeidemanCoefficients {
    int term_count;            // N, default 16
    double moebius_scale;      // L = 2^{-1/4} sqrt(N)
    std::vector<double> gamma; // gamma_1 .. gamma_N
};

/// Builds the coefficient set via a direct real DFT of
/// f(theta) = (L^2 + t^2) exp(-t^2) sampled under t = L tan(theta/2).
WeidemanCoefficients build_weideman(int term_count = 16);

/// Evaluates the approximation; the polynomial in the Moebius variable is
/// evaluated by Horner recurrence. Requires Im[z] > 0.
std::complex<double> w_weideman(std::complex<double> z, const WeidemanCoefficients& coeffs);

/// Pointwise batch form of w_weideman.
void eval_batch_weideman(std::span<const std::complex<double>> zs,
                         std::span<std::complex<double>> out,
                         const WeidemanCoefficients& coeffs);

} // namespace voigtice
