#include "voigtice/oracle.hpp"

#include <cmath>
#include <string>

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include "voigtice/dd.hpp"

namespace voigtice {

namespace {

using mpf = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<100>>;

struct mpc {
    mpf re, im;
};

mpc operator+(const mpc& a, const mpc& b) { return {a.re + b.re, a.im + b.im}; }
mpc operator*(const mpc& a, const mpc& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
mpc operator*(const mpc& a, const mpf& s) { return {a.re * s, a.im * s}; }

// |re| + |im|: cheap magnitude proxy for the stopping test
mpf mag1(const mpc& v) { return abs(v.re) + abs(v.im); }

constexpr int kSeriesMaxTerms = 4000;
constexpr int kCfracMaxDepth = 2048;

} // namespace

std::complex<double> w_series(std::complex<double> z) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
        throw std::invalid_argument("w_series: argument must be finite");
    const double r = std::hypot(z.real(), z.imag());
    if (r > 12.0)
        throw std::range_error("w_series: |z| <= 12 required by the precision budget");

    const mpc zz{mpf(z.real()), mpf(z.imag())};
    const mpc u{zz.im * zz.im - zz.re * zz.re, mpf(-2) * zz.re * zz.im}; // -z^2

    // S = sum_k u^k / Gamma(k + 3/2); term_k = term_{k-1} * u / (k + 1/2)
    const mpf sqrt_pi = sqrt(boost::math::constants::pi<mpf>());
    mpc term{mpf(2) / sqrt_pi, mpf(0)};
    mpc s = term;
    const mpf tol("1e-85");
    const int hump = static_cast<int>(r * r) + 8;
    int k = 1;
    for (; k <= kSeriesMaxTerms; ++k) {
        term = term * u;
        mpf scale = mpf(2) / (2 * k + 1);
        term.re *= scale;
        term.im *= scale;
        s = s + term;
        if (k >= hump && mag1(term) < tol * mag1(s)) break;
    }
    if (k > kSeriesMaxTerms)
        throw ConvergenceError("w_series: series failed to converge");

    // w = exp(u) + i z S
    mpf e = exp(u.re);
    mpc w{e * cos(u.im) - (zz.re * s.im + zz.im * s.re),
          e * sin(u.im) + (zz.re * s.re - zz.im * s.im)};
    return {w.re.convert_to<double>(), w.im.convert_to<double>()};
}

std::complex<double> w_cfrac(std::complex<double> z, int depth) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
        throw std::invalid_argument("w_cfrac: argument must be finite");
    if (!(z.imag() > 0.0))
        throw std::domain_error("w_cfrac: Im[z] > 0 required");
    if (depth < 1)
        throw std::invalid_argument("w_cfrac: depth must be positive");

    const cdd zc{dd(z.real()), dd(z.imag())};
    cdd t = zc;
    for (int k = depth; k >= 1; --k) {
        // t <- z - (k/2) / t
        cdd q = cdd{dd(k * 0.5), dd(0.0)} / t;
        t = zc - q;
    }
    cdd w = cdd{dd(0.0), consts::inv_sqrt_pi_dd} / t;
    return w.to_complex();
}

std::complex<double> w_cfrac_adaptive(std::complex<double> z, double* agreement_out) {
    std::complex<double> prev = w_cfrac(z, 8);
    double best_agree = HUGE_VAL;
    std::complex<double> best_value = prev;
    for (int depth = 16; depth <= kCfracMaxDepth; depth *= 2) {
        std::complex<double> cur = w_cfrac(z, depth);
        double agree = std::abs(cur - prev) / std::abs(cur);
        if (agree < best_agree) {
            best_agree = agree;
            best_value = cur;
        }
        if (agree <= 1e-15) {
            if (agreement_out) *agreement_out = agree;
            return cur;
        }
        prev = cur;
    }
    // near-axis plateau: accept if the self-agreement is at least as tight
    // as the integrity bound
    if (best_agree <= kOracleAgreementBound) {
        if (agreement_out) *agreement_out = best_agree;
        return best_value;
    }
    throw ConvergenceError("w_cfrac_adaptive: continued fraction did not converge");
}

OracleValue w_ref(std::complex<double> z) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
        throw std::invalid_argument("w_ref: argument must be finite");
    if (z.imag() < 0.0)
        throw std::domain_error("w_ref: Im[z] >= 0 required");

    const double r = std::hypot(z.real(), z.imag());
    if (r < kOracleSeriesRadius)
        return {w_series(z), 0.0, OracleMethod::series};

    if (z.imag() == 0.0) {
        // the continued fraction requires Im[z] > 0; serve the series region only
        return {w_series(z), 0.0, OracleMethod::series};
    }

    if (r > kOracleCfracRadius) {
        OracleValue v;
        v.value = w_cfrac_adaptive(z, &v.method_agreement);
        v.method_used = OracleMethod::continued_fraction;
        return v;
    }

    // overlap band: evaluate both, enforce agreement, return the series value
    // (per-part accuracy near the real axis is set by the series).
    std::complex<double> ws = w_series(z);
    std::complex<double> wc = w_cfrac_adaptive(z);
    double agreement = std::abs(ws - wc) / std::abs(ws);
    if (!(agreement <= kOracleAgreementBound))
        throw OracleIntegrityError("w_ref: dual-method agreement " + std::to_string(agreement) +
                                   " exceeds bound in the overlap band");
    return {ws, agreement, OracleMethod::both};
}

} // namespace voigtice
