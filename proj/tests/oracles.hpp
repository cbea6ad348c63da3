#pragma once

// Independent reference implementations used only by the tests. They are
// deliberately simple (brute-force sums, textbook expansions) and share no
// code with the library beyond the Complex alias.

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <vector>

namespace oracle {

using Complex = std::complex<double>;
using Rational = boost::multiprecision::cpp_rational;
using boost::multiprecision::cpp_int;

inline constexpr double kPi = 3.14159265358979323846;

inline double ulp_distance(double a, double b)
{
    const double m = std::max(std::fabs(a), std::fabs(b));
    if (m == 0.0) {
        return 0.0;
    }
    return std::fabs(a - b) / (std::nextafter(m, INFINITY) - m);
}

inline double rel_err(Complex got, Complex want)
{
    const double scale = std::abs(want);
    return scale == 0.0 ? std::abs(got) : std::abs(got - want) / scale;
}

// B_n = sum_k 1/(k+1) sum_j (-1)^j C(k, j) j^n, exact.
inline Rational bernoulli_explicit(unsigned n)
{
    Rational total = 0;
    for (unsigned k = 0; k <= n; ++k) {
        cpp_int inner = 0;
        cpp_int binom = 1;
        for (unsigned j = 0; j <= k; ++j) {
            cpp_int power = (j == 0 && n == 0) ? cpp_int(1) : boost::multiprecision::pow(cpp_int(j), n);
            inner += (j % 2 == 0 ? 1 : -1) * binom * power;
            binom = binom * (k - j) / (j + 1);
        }
        total += Rational(inner, k + 1);
    }
    return total;
}

inline double to_double(const Rational& r)
{
    return boost::multiprecision::numerator(r).convert_to<double>()
        / boost::multiprecision::denominator(r).convert_to<double>();
}

// Brute-force ζ(s), Re s > 1: N terms plus the first Euler-Maclaurin corrections.
inline Complex zeta_brute(Complex s, int n_terms = 2000)
{
    Complex sum = 0.0;
    for (int k = n_terms - 1; k >= 1; --k) {
        sum += std::pow(static_cast<double>(k), -s);
    }
    const double n = n_terms;
    const Complex np = std::pow(n, -s);
    sum += n * np / (s - 1.0) + 0.5 * np + s * np / (12.0 * n)
        - s * (s + 1.0) * (s + 2.0) * np / (720.0 * n * n * n);
    return sum;
}

// Γ(s) by upward recurrence to Re s >= 20 followed by Stirling's series.
inline Complex gamma_stirling(Complex s)
{
    if (s.real() < 0.5) {
        return kPi / (std::sin(kPi * s) * gamma_stirling(1.0 - s));
    }
    Complex shift = 1.0;
    while (s.real() < 20.0) {
        shift *= s;
        s += 1.0;
    }
    const Complex inv = 1.0 / s;
    const Complex inv2 = inv * inv;
    const Complex series
        = inv * (1.0 / 12.0 + inv2 * (-1.0 / 360.0 + inv2 * (1.0 / 1260.0 + inv2 * (-1.0 / 1680.0 + inv2 / 1188.0))));
    const Complex log_gamma = (s - 0.5) * std::log(s) - s + 0.5 * std::log(2.0 * kPi) + series;
    return std::exp(log_gamma) / shift;
}

// Partial sums of sum sin(kx)/k^s and cos(kx)/k^s with the Dirichlet tail bound
// (1 + |s|/σ) K^(-σ) / |sin(x/2)|.
struct ClausenBrute {
    Complex sin_part;
    Complex cos_part;
    double tail_bound;
};

inline ClausenBrute clausen_brute(Complex s, double x, std::uint64_t terms)
{
    Complex sp = 0.0;
    Complex cp = 0.0;
    for (std::uint64_t k = terms; k >= 1; --k) {
        const double kd = static_cast<double>(k);
        const Complex w = s.imag() == 0.0 ? Complex(std::pow(kd, -s.real())) : std::pow(kd, -s);
        sp += std::sin(kd * x) * w;
        cp += std::cos(kd * x) * w;
    }
    const double sigma = s.real();
    const double bound
        = (1.0 + std::abs(s) / sigma) * std::pow(static_cast<double>(terms), -sigma) / std::fabs(std::sin(0.5 * x));
    return {sp, cp, bound};
}

// Defining series of Li_s(z), |z| < 1, summed until the terms are negligible.
inline Complex polylog_brute(Complex s, Complex z)
{
    Complex sum = 0.0;
    Complex power = 1.0;
    for (int k = 1; k < 200000; ++k) {
        power *= z;
        const Complex term = power * std::pow(static_cast<double>(k), -s);
        sum += term;
        if (std::abs(power) < 1e-22) {
            break;
        }
    }
    return sum;
}

} // namespace oracle
