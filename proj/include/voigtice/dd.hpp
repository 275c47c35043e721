#pragma once

#include <cmath>
#include <complex>

// Double-double arithmetic (Dekker/Knuth error-free transforms).
// A dd holds an unevaluated sum hi + lo with |lo| <= ulp(hi)/2, giving
// roughly 31 significant decimal digits. Used where the rational-sum
// evaluation must stay well below the double rounding floor.

namespace voigtice {

struct dd {
    double hi = 0.0;
    double lo = 0.0;

    constexpr dd() = default;
    constexpr dd(double h) : hi(h) {}
    constexpr dd(double h, double l) : hi(h), lo(l) {}

    double to_double() const { return hi + lo; }
    bool is_zero() const { return hi == 0.0 && lo == 0.0; }
};

namespace ddops {

inline dd two_sum(double a, double b) {
    double s = a + b;
    double bb = s - a;
    return {s, (a - (s - bb)) + (b - bb)};
}

// requires |a| >= |b| (or a == 0)
inline dd quick_two_sum(double a, double b) {
    double s = a + b;
    return {s, b - (s - a)};
}

inline dd two_prod(double a, double b) {
    double p = a * b;
    return {p, std::fma(a, b, -p)};
}

} // namespace ddops

inline dd operator+(dd a, dd b) {
    using namespace ddops;
    dd s = two_sum(a.hi, b.hi);
    dd t = two_sum(a.lo, b.lo);
    s.lo += t.hi;
    s = quick_two_sum(s.hi, s.lo);
    s.lo += t.lo;
    return quick_two_sum(s.hi, s.lo);
}

inline dd operator-(dd a) { return {-a.hi, -a.lo}; }
inline dd operator-(dd a, dd b) { return a + (-b); }

inline dd operator*(dd a, dd b) {
    using namespace ddops;
    dd p = two_prod(a.hi, b.hi);
    p.lo += a.hi * b.lo + a.lo * b.hi;
    return quick_two_sum(p.hi, p.lo);
}

inline dd operator/(dd a, dd b) {
    using namespace ddops;
    double q1 = a.hi / b.hi;
    dd r = a - b * dd(q1);
    double q2 = r.hi / b.hi;
    r = r - b * dd(q2);
    double q3 = r.hi / b.hi;
    dd q = quick_two_sum(q1, q2);
    return q + dd(q3);
}

inline bool operator==(dd a, dd b) { return a.hi == b.hi && a.lo == b.lo; }

// Complex value with double-double components.
struct cdd {
    dd re;
    dd im;

    constexpr cdd() = default;
    constexpr cdd(dd r, dd i) : re(r), im(i) {}
    explicit cdd(std::complex<double> z) : re(z.real()), im(z.imag()) {}

    std::complex<double> to_complex() const {
        return {re.to_double(), im.to_double()};
    }
};

inline cdd operator+(const cdd& a, const cdd& b) { return {a.re + b.re, a.im + b.im}; }
inline cdd operator-(const cdd& a, const cdd& b) { return {a.re - b.re, a.im - b.im}; }

inline cdd operator*(const cdd& a, const cdd& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

inline cdd operator/(const cdd& a, const cdd& b) {
    dd n = b.re * b.re + b.im * b.im;
    return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
}

namespace consts {
// hi/lo pairs of the closest double and the residual
inline constexpr dd pi_dd{3.141592653589793, 1.2246467991473532e-16};
inline constexpr dd two_pi_dd{6.283185307179586, 2.4492935982947064e-16};
inline constexpr dd sqrt_pi_dd{1.772453850905516, -7.666586499825799e-17};
inline constexpr dd inv_sqrt_pi_dd{0.5641895835477563, 7.66772980658294e-18};
} // namespace consts

// Neumaier variant of compensated summation; error stays O(eps) relative
// to the true sum independent of cancellation among the inputs.
class NeumaierSum {
  public:
    void add(double x) {
        double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x))
            comp_ += (sum_ - t) + x;
        else
            comp_ += (x - t) + sum_;
        sum_ = t;
    }
    double value() const { return sum_ + comp_; }

  private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

} // namespace voigtice
