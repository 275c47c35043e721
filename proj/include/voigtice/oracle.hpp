#pragma once

#include <complex>
#include <stdexcept>

// High-accuracy reference values w_ref(z) for error maps, built from two
// independent classical methods that are cross-validated against each other:
//  - the Maclaurin series  w(z) = exp(-z^2) + i z sum_k (-z^2)^k / Gamma(k+3/2),
//    summed in 100-digit floats (the terms cancel by ~e^{|z|^2}), and
//  - the Laplace continued fraction, evaluated bottom-up in double-double.
// Where both apply their relative discrepancy is enforced; an oracle bug
// announces itself instead of silently validating the code under test.

namespace voigtice {

class OracleIntegrityError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class ConvergenceError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

enum class OracleMethod { series, continued_fraction, both };

struct OracleValue {
    std::complex<double> value;
    // relative discrepancy between the two methods where both apply
    // (the overlap band); 0 outside it
    double method_agreement = 0.0;
    OracleMethod method_used = OracleMethod::series;
};

// Region boundaries: series alone below the inner radius, continued
// fraction alone above the outer one, both (with the agreement check)
// in between.
inline constexpr double kOracleSeriesRadius = 6.0;
inline constexpr double kOracleCfracRadius = 8.0;
inline constexpr double kOracleAgreementBound = 1e-13;

/// Maclaurin-series evaluation, valid for |z| <= 12 (the extended-precision
/// budget); throws std::range_error beyond.
std::complex<double> w_series(std::complex<double> z);

/// Laplace continued fraction at a fixed depth, bottom-up. Requires Im[z] > 0.
std::complex<double> w_cfrac(std::complex<double> z, int depth);

/// Continued fraction with the depth chosen by doubling until two successive
/// depths agree to 1e-15 (or the best plateau is accepted if it is at least
/// as tight as the integrity bound). Throws ConvergenceError otherwise.
/// If agreement_out is non-null it receives the achieved self-agreement.
std::complex<double> w_cfrac_adaptive(std::complex<double> z, double* agreement_out = nullptr);

/// Reference value with method routing by |z| and the enforced dual-method
/// agreement in the overlap band. Requires Im[z] >= 0. On the real axis the
/// continued fraction is outside its domain, so only the series region
/// |z| <= 12 is served there.
OracleValue w_ref(std::complex<double> z);

} // namespace voigtice
