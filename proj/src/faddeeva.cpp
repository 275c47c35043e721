#include "voigtice/faddeeva.hpp"

#include <cmath>
#include <stdexcept>

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#ifndef NDEBUG
#include <boost/math/quadrature/gauss_kronrod.hpp>
#endif

namespace voigtice {

namespace {

using mpf = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<60>>;

dd to_dd(const mpf& v) {
    double hi = v.convert_to<double>();
    double lo = (v - hi).convert_to<double>();
    return {hi, lo};
}

void require_finite(std::complex<double> z, const char* who) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
        throw std::invalid_argument(std::string(who) + ": argument must be finite");
}

std::complex<double> exp_minus_sq(std::complex<double> z, const char* who) {
    // exp(-z^2); Re[-z^2] = y^2 - x^2 overflows past ~709
    double re = (z.imag() - z.real()) * (z.imag() + z.real());
    if (re > 709.0)
        throw std::overflow_error(std::string(who) +
                                  ": exp(-z^2) overflows; requires Im[z]^2 - Re[z]^2 <= 709");
    return std::exp(std::complex<double>(re, -2.0 * z.real() * z.imag()));
}

} // namespace

CoefficientSet::CoefficientSet(const ExpansionParams& params) : params_(params) {
    const int K = params.term_count();
    const int M = params.depth;
    const mpf pi = boost::math::constants::pi<mpf>();
    const mpf h = params.step;
    const mpf sig = params.sigma_shift;
    const mpf sqrt_pi = sqrt(pi);
    const mpf pow_m = ldexp(mpf(1), M) * h;        // 2^M h
    const mpf damp = exp(sig * sig / 4);

    // sample weights e^{sigma^2/4 - (nh)^2}
    const int N = params.half_count;
    std::vector<mpf> weight(2 * N + 1);
    for (int n = -N; n <= N; ++n)
        weight[n + N] = damp * exp(-mpf(n) * mpf(n) * h * h);

    c_.reserve(K); a_.reserve(K); b_.reserve(K); c_sq_.reserve(K);
    for (int m = 1; m <= K; ++m) {
        const int odd = 2 * m - 1;
        mpf sum_sin = 0, sum_cos = 0;
        for (int n = -N; n <= N; ++n) {
            mpf arg = pi * odd * (mpf(n) * h + sig / 2) / pow_m;
            sum_sin += weight[n + N] * sin(arg);
            sum_cos += weight[n + N] * cos(arg);
        }
        mpf C = pi * odd / (ldexp(mpf(1), M + 1) * h);
        mpf A = sqrt_pi * odd / (ldexp(mpf(1), 2 * M) * h) * sum_sin;
        mpf b = sum_cos / (ldexp(mpf(1), M - 1) * sqrt_pi);
        c_.push_back(to_dd(C));
        c_sq_.push_back(to_dd(C * C));
        a_.push_back(to_dd(A));
        b_.push_back(to_dd(b));
    }
}

const CoefficientSet& default_coefficients() {
    static const CoefficientSet cs(ExpansionParams::defaults());
    return cs;
}

namespace detail {

cdd psi_dd(const cdd& s, const CoefficientSet& coeffs) {
    const auto& a = coeffs.a_dd();
    const auto& b = coeffs.b_dd();
    const auto& c_sq = coeffs.c_sq_dd();
    const cdd s2 = s * s;
    cdd acc;
    for (std::size_t m = 0; m < a.size(); ++m) {
        // A_m + s B_m with B_m = -i b_m
        cdd num{a[m] + b[m] * s.im, -(b[m] * s.re)};
        cdd den{c_sq[m] - s2.re, -s2.im};
        if (den.re.is_zero() && den.im.is_zero())
            throw std::domain_error("psi: argument coincides with a pole +-C_m");
        acc = acc + num / den;
    }
    return acc;
}

} // namespace detail

std::complex<double> psi(std::complex<double> s, const CoefficientSet& coeffs) {
    require_finite(s, "psi");
    return detail::psi_dd(cdd(s), coeffs).to_complex();
}

EvalResult w_detailed(std::complex<double> z, const CoefficientSet& coeffs,
                      const EvalOptions& opts) {
    require_finite(z, "w");
    const double y = z.imag();
    if (y < 0.0) {
        if (opts.lower_half_policy == LowerHalfPolicy::reject)
            throw std::domain_error("w: Im[z] > 0 required (lower_half_policy = reject)");
        // standard reflection w(z) = 2 exp(-z^2) - w(-z); -z is in the upper half
        std::complex<double> upper = w_detailed(-z, coeffs, opts).value;
        return {2.0 * exp_minus_sq(z, "w") - upper, true};
    }
    // exact shift: sigma/2 halving is exact, the add is a two_sum
    cdd s{dd(z.real()), ddops::two_sum(y, coeffs.params().sigma_shift / 2.0)};
    EvalResult r;
    r.value = detail::psi_dd(s, coeffs).to_complex();
    r.reduced_accuracy = y < opts.accuracy_note_threshold;
    return r;
}

std::complex<double> w(std::complex<double> z, const CoefficientSet& coeffs,
                       const EvalOptions& opts) {
    return w_detailed(z, coeffs, opts).value;
}

double voigt_k(double x, double y, const CoefficientSet& coeffs, const EvalOptions& opts) {
    return w({x, y}, coeffs, opts).real();
}

double voigt_l(double x, double y, const CoefficientSet& coeffs, const EvalOptions& opts) {
    return w({x, y}, coeffs, opts).imag();
}

std::complex<double> plasma_dispersion(std::complex<double> z, const CoefficientSet& coeffs,
                                       const EvalOptions& opts) {
    return std::complex<double>(0.0, std::sqrt(M_PI)) * w(z, coeffs, opts);
}

std::complex<double> cerf(std::complex<double> z, const CoefficientSet& coeffs,
                          const EvalOptions& opts) {
    require_finite(z, "cerf");
    std::complex<double> iz(-z.imag(), z.real());
    return 1.0 - exp_minus_sq(z, "cerf") * w(iz, coeffs, opts);
}

std::complex<double> normal_phi(std::complex<double> z, const CoefficientSet& coeffs,
                                const EvalOptions& opts) {
    require_finite(z, "normal_phi");
    const double inv_sqrt2 = 0.7071067811865476;
    std::complex<double> zh = z * inv_sqrt2;
    std::complex<double> izh(-zh.imag(), zh.real());
    return 0.5 * (1.0 - exp_minus_sq(zh, "normal_phi") * w(izh, coeffs, opts));
}

double voigt_integrated(double x1, double x2, double y, const CoefficientSet& coeffs,
                        const EvalOptions& opts) {
    (void)opts;
    if (!std::isfinite(x1) || !std::isfinite(x2) || !std::isfinite(y))
        throw std::invalid_argument("voigt_integrated: arguments must be finite");
    if (!(y > 0.0))
        throw std::domain_error("voigt_integrated: y > 0 required");
    if (x1 == x2) return 0.0;

    const double v = y + coeffs.params().sigma_shift / 2.0;
    std::complex<double> total = 0.0;
    for (int m = 0; m < coeffs.size(); ++m) {
        const double c = coeffs.c(m);
        const std::complex<double> B(0.0, -coeffs.b(m));
        const std::complex<double> P = 0.5 * (coeffs.a(m) / c + B);
        const std::complex<double> Q = 0.5 * (coeffs.a(m) / c - B);
        const std::complex<double> s1(x1, v), s2(x2, v);
        // Im(c - s) = -v < 0 and Im(c + s) = v > 0 throughout, so the
        // principal logs never cross the branch cut along the path.
        total += -P * (std::log(c - s2) - std::log(c - s1)) +
                 Q * (std::log(c + s2) - std::log(c + s1));
    }
    double result = total.real();

#ifndef NDEBUG
    // cross-check the antiderivative against quadrature of K
    if (std::abs(x2 - x1) < 1e6) {
        auto k = [&](double x) { return voigt_k(x, y, coeffs); };
        double q = boost::math::quadrature::gauss_kronrod<double, 31>::integrate(
            k, x1, x2, 10, 1e-9);
        double scale = std::max({std::abs(result), std::abs(q), 1e-30});
        if (std::abs(result - q) > 1e-6 * scale)
            throw std::logic_error("voigt_integrated: antiderivative disagrees with quadrature");
    }
#endif
    return result;
}

void eval_batch(std::span<const std::complex<double>> zs, std::span<std::complex<double>> out,
                const CoefficientSet& coeffs, const EvalOptions& opts) {
    if (zs.size() != out.size())
        throw std::invalid_argument("eval_batch: input and output spans must have equal size");
    for (std::size_t i = 0; i < zs.size(); ++i)
        out[i] = w(zs[i], coeffs, opts);
}

} // namespace voigtice
