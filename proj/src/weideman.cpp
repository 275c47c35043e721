#include "voigtice/weideman.hpp"

#include <cmath>
#include <stdexcept>

#include "voigtice/dd.hpp"

namespace voigtice {

WeidemanCoefficients build_weideman(int term_count) {
    if (term_count < 1)
        throw std::invalid_argument("build_weideman: term_count must be positive");
    const int N = term_count;
    const int M = 2 * N;
    const double L = std::exp2(-0.25) * std::sqrt(static_cast<double>(N));

    // theta_k = k pi / M on (-pi, pi); the theta = -pi sample vanishes.
    // gamma_n = (1/2M) sum_k f(theta_k) cos(n theta_k). A naive DFT is fine
    // here; coefficient setup is not on any hot path.
    std::vector<double> f(2 * M, 0.0), theta(2 * M, 0.0);
    for (int k = -M + 1; k < M; ++k) {
        double th = k * M_PI / M;
        double t = L * std::tan(th / 2);
        theta[k + M] = th;
        f[k + M] = std::exp(-t * t) * (L * L + t * t);
    }

    WeidemanCoefficients out{N, L, std::vector<double>(N)};
    for (int n = 1; n <= N; ++n) {
        NeumaierSum s;
        for (int k = -M + 1; k < M; ++k)
            s.add(f[k + M] * std::cos(n * theta[k + M]));
        out.gamma[n - 1] = s.value() / (2.0 * M);
    }
    return out;
}

std::complex<double> w_weideman(std::complex<double> z, const WeidemanCoefficients& coeffs) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
        throw std::invalid_argument("w_weideman: argument must be finite");
    if (!(z.imag() > 0.0))
        throw std::domain_error("w_weideman: Im[z] > 0 required");
    const double L = coeffs.moebius_scale;
    const std::complex<double> iz(-z.imag(), z.real());
    const std::complex<double> recip = 1.0 / (L - iz);
    const std::complex<double> Z = (L + iz) * recip;
    std::complex<double> p = 0.0;
    for (int n = coeffs.term_count - 1; n >= 0; --n)
        p = p * Z + coeffs.gamma[n];
    const double inv_sqrt_pi = 0.5641895835477563;
    return (2.0 * p * recip + inv_sqrt_pi) * recip;
}

void eval_batch_weideman(std::span<const std::complex<double>> zs,
                         std::span<std::complex<double>> out,
                         const WeidemanCoefficients& coeffs) {
    if (zs.size() != out.size())
        throw std::invalid_argument("eval_batch_weideman: spans must have equal size");
    for (std::size_t i = 0; i < zs.size(); ++i)
        out[i] = w_weideman(zs[i], coeffs);
}

} // namespace voigtice
