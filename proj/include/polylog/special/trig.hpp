#pragma once

#include <cmath>
#include <complex>
#include <numbers>

// Trigonometric functions of pi*x with exact argument reduction, so that
// sin_pi(n) is exactly zero at integers and cot_pi/tan_pi keep full relative
// accuracy next to their poles and zeros.
namespace polylog::special {

[[nodiscard]] inline double sin_pi(double x)
{
    const double r = x - 2.0 * std::round(0.5 * x); // r in [-1, 1], exact
    if (r == 0.0 || std::fabs(r) == 1.0) {
        return 0.0 * r;
    }
    if (r > 0.5) {
        return std::sin(std::numbers::pi * (1.0 - r));
    }
    if (r < -0.5) {
        return -std::sin(std::numbers::pi * (1.0 + r));
    }
    return std::sin(std::numbers::pi * r);
}

[[nodiscard]] inline double cos_pi(double x)
{
    return sin_pi(x + 0.5);
}

// cot(pi x) and tan(pi x). The reduced argument r lies in [-1/2, 1/2]; past
// |r| = 1/4 the quarter-period shift r -+ 1/2 (exact) keeps the pole side accurate.
[[nodiscard]] inline double cot_pi(double x)
{
    const double r = x - std::round(x);
    if (std::fabs(r) <= 0.25) {
        return 1.0 / std::tan(std::numbers::pi * r);
    }
    return -std::tan(std::numbers::pi * (r - std::copysign(0.5, r)));
}

[[nodiscard]] inline double tan_pi(double x)
{
    const double r = x - std::round(x);
    if (std::fabs(r) <= 0.25) {
        return std::tan(std::numbers::pi * r);
    }
    return -1.0 / std::tan(std::numbers::pi * (r - std::copysign(0.5, r)));
}

[[nodiscard]] inline std::complex<double> sin_pi(std::complex<double> w)
{
    const double shift = 2.0 * std::round(0.5 * w.real());
    const std::complex<double> r(w.real() - shift, w.imag());
    if (r.imag() == 0.0) {
        return {sin_pi(r.real()), 0.0};
    }
    return std::sin(std::numbers::pi * r);
}

[[nodiscard]] inline std::complex<double> cos_pi(std::complex<double> w)
{
    return sin_pi(w + 0.5);
}

} // namespace polylog::special
