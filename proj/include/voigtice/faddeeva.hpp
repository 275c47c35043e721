#pragma once

#include <complex>
#include <span>
#include <vector>

#include "voigtice/dd.hpp"
#include "voigtice/sinc_expansion.hpp"

// Rational approximation of the Faddeeva function
//   w(z) = exp(-z^2) erfc(-i z),  Im[z] >= 0,
// as the 2^{M-1}-term sum  w(z) ~ psi(z + i sigma/2),
//   psi(s) = sum_m (A_m + s B_m) / (C_m^2 - s^2),
// with coefficients generated from the damped-shifted Gaussian sampling
// construction. The sum is accumulated in double-double arithmetic so the
// returned values carry the method's own error, not the rounding floor of
// a plain double partial-fraction sum.

namespace voigtice {

enum class LowerHalfPolicy {
    reject,                 // Im[z] < 0 is a domain error (default)
    continue_by_reflection, // w(z) = 2 exp(-z^2) - w(-z)
};

struct EvalOptions {
    LowerHalfPolicy lower_half_policy = LowerHalfPolicy::reject;
    // below this Im[z], results carry a reduced-accuracy note
    double accuracy_note_threshold = 1e-4;
};

// Immutable coefficient tables {C_m, A_m, b_m} for one parameter set.
// A_m is real and B_m = -i b_m purely imaginary, so real storage is
// lossless. Entries are kept as double-double pairs; construction runs in
// extended precision because the n-sums span ~15 orders of magnitude and
// cancel heavily at large m.
class CoefficientSet {
  public:
    explicit CoefficientSet(const ExpansionParams& params);

    const ExpansionParams& params() const { return params_; }
    int size() const { return params_.term_count(); }

    double c(int m) const { return c_[m].to_double(); }    // C_{m+1} > 0, increasing
    double a(int m) const { return a_[m].to_double(); }    // A_{m+1}
    double b(int m) const { return b_[m].to_double(); }    // b_{m+1}, B = -i b

    const std::vector<dd>& c_dd() const { return c_; }
    const std::vector<dd>& a_dd() const { return a_; }
    const std::vector<dd>& b_dd() const { return b_; }
    const std::vector<dd>& c_sq_dd() const { return c_sq_; }

  private:
    ExpansionParams params_;
    std::vector<dd> c_, a_, b_, c_sq_;
};

inline CoefficientSet build_coefficients(const ExpansionParams& params) {
    return CoefficientSet(params);
}

/// Coefficients for the default parameter set (0.25, 23, 5, 2.75),
/// built once and shared.
const CoefficientSet& default_coefficients();

/// The pure rational sum  sum_m (A_m + s B_m)/(C_m^2 - s^2).
/// Throws std::domain_error on an exact pole hit (real s equal to some C_m).
std::complex<double> psi(std::complex<double> s, const CoefficientSet& coeffs);

namespace detail {
cdd psi_dd(const cdd& s, const CoefficientSet& coeffs);
}

struct EvalResult {
    std::complex<double> value;
    // set when Im[z] is below the accuracy note threshold or the value was
    // produced by the lower-half reflection
    bool reduced_accuracy = false;
};

/// w(z) = psi(z + i sigma/2) for Im[z] >= 0. Behaviour for Im[z] < 0 is
/// set by the policy: reject (domain error) or reflection continuation.
std::complex<double> w(std::complex<double> z, const CoefficientSet& coeffs,
                       const EvalOptions& opts = {});
EvalResult w_detailed(std::complex<double> z, const CoefficientSet& coeffs,
                      const EvalOptions& opts = {});

/// Voigt function K(x,y) = Re[w(x+iy)].
double voigt_k(double x, double y, const CoefficientSet& coeffs, const EvalOptions& opts = {});
/// L(x,y) = Im[w(x+iy)].
double voigt_l(double x, double y, const CoefficientSet& coeffs, const EvalOptions& opts = {});

/// Plasma dispersion function Z(z) = i sqrt(pi) w(z).
std::complex<double> plasma_dispersion(std::complex<double> z, const CoefficientSet& coeffs,
                                       const EvalOptions& opts = {});

/// erf(z) = 1 - exp(-z^2) w(iz). The internally evaluated argument iz must
/// satisfy the lower-half policy; exp overflow is reported.
std::complex<double> cerf(std::complex<double> z, const CoefficientSet& coeffs,
                          const EvalOptions& opts = {});

/// Normal integral Phi(z) = (1/sqrt(2 pi)) int_0^z exp(-x^2/2) dx
///               = (1 - exp(-z^2/2) w(iz/sqrt 2)) / 2.
std::complex<double> normal_phi(std::complex<double> z, const CoefficientSet& coeffs,
                                const EvalOptions& opts = {});

/// Frequency-integrated Voigt function  int_{x1}^{x2} K(x,y) dx, evaluated
/// term by term from the closed-form antiderivative of the rational sum.
/// The i sigma/2 shift keeps every log argument in a fixed half-plane, so
/// the principal branch is continuous along the real-x path.
double voigt_integrated(double x1, double x2, double y, const CoefficientSet& coeffs,
                        const EvalOptions& opts = {});

/// Pointwise batch evaluation; out[i] = w(zs[i]). Results are identical to
/// scalar calls, independent of any partitioning.
void eval_batch(std::span<const std::complex<double>> zs, std::span<std::complex<double>> out,
                const CoefficientSet& coeffs, const EvalOptions& opts = {});

} // namespace voigtice
