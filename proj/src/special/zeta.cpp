#include "polylog/special/zeta.hpp"

#include "polylog/errors.hpp"
#include "polylog/special/bernoulli.hpp"
#include "polylog/special/gamma.hpp"
#include "polylog/special/trig.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace polylog::special {

namespace {

using C = std::complex<double>;

constexpr double kLn2 = std::numbers::ln2;

bool is_one(C s)
{
    return s.real() == 1.0 && s.imag() == 0.0;
}

// Cohen-Villegas-Zagier acceleration of sum_{k>=0} (-1)^k (k+1)^(-s).
// Returns false when the required order would overflow the weights.
bool eta_accelerated(C s, C& out)
{
    const double t = std::fabs(s.imag());
    const double target = std::log(1e17) + 0.5 * std::numbers::pi * t + std::log1p(2.0 * t);
    const double order = std::ceil(target / std::log(3.0 + std::sqrt(8.0)));
    if (order > 380.0) {
        return false;
    }
    const int n = std::max(20, static_cast<int>(order));
    double d = std::pow(3.0 + std::sqrt(8.0), n);
    d = 0.5 * (d + 1.0 / d);
    double b = -1.0;
    double c = -d;
    C sum = 0.0;
    for (int k = 0; k < n; ++k) {
        c = b - c;
        sum += c * std::exp(-s * std::log(static_cast<double>(k + 1)));
        b = (k + n) * static_cast<double>(k - n) * b / ((k + 0.5) * (k + 1));
    }
    out = sum / d;
    return true;
}

C zeta_right(C s)
{
    // 1 - 2^(1-s) vanishes at s = 1 + 2 pi i k / ln 2; eta vanishes there too.
    const C denom = -expm1_complex((1.0 - s) * kLn2);
    C eta;
    if (std::abs(denom) > 0.1 || std::abs(s - 1.0) < 0.5) {
        if (eta_accelerated(s, eta)) {
            return eta / denom;
        }
    }
    return hurwitz_zeta(s, 1.0);
}

} // namespace

C expm1_complex(C w)
{
    const double x = w.real();
    const double y = w.imag();
    if (std::abs(w) > 0.5) {
        return std::exp(w) - 1.0;
    }
    const double half_sin = std::sin(0.5 * y);
    const double re = std::expm1(x) * std::cos(y) - 2.0 * half_sin * half_sin;
    const double im = std::exp(x) * std::sin(y);
    return {re, im};
}

C riemann_zeta(C s)
{
    if (is_one(s)) {
        throw PoleError("riemann_zeta: pole at s = 1");
    }
    if (s.real() > 0.0) {
        C value = zeta_right(s);
        if (s.imag() == 0.0) {
            value.imag(0.0);
        }
        return value;
    }
    if (s.imag() == 0.0 && s.real() == std::round(s.real())) {
        const auto m = static_cast<unsigned>(-s.real());
        const double b = bernoulli_number(m + 1);
        return ((m % 2 == 0) ? 1.0 : -1.0) * b / static_cast<double>(m + 1);
    }
    // zeta(s) = 2^s pi^(s-1) sin(pi s / 2) Gamma(1-s) zeta(1-s)
    const C log_factor = s * kLn2 + (s - 1.0) * std::log(std::numbers::pi) + log_gamma_complex(1.0 - s);
    C value = std::exp(log_factor) * sin_pi(0.5 * s) * zeta_right(1.0 - s);
    if (s.imag() == 0.0) {
        value.imag(0.0);
    }
    return value;
}

C hurwitz_zeta(C s, C a, const HurwitzOptions& options)
{
    if (is_one(s)) {
        throw PoleError("hurwitz_zeta: pole at s = 1");
    }
    if (a.imag() == 0.0 && a.real() <= 0.0 && a.real() == std::round(a.real())) {
        throw DomainError("hurwitz_zeta: a must not be 0, -1, -2, ...");
    }
    if (a.real() <= 0.0) {
        throw DomainError("hurwitz_zeta: continuation requires Re a > 0");
    }

    if (s.imag() == 0.0 && s.real() <= 0.0 && s.real() == std::round(s.real()) && s.real() > -255.0) {
        const auto m = static_cast<unsigned>(-s.real());
        return -bernoulli_poly(m + 1, a) / static_cast<double>(m + 1);
    }

    // Extended precision absorbs the cancellation between the direct sum and
    // the tail when Re s < 0.
    using X = std::complex<long double>;
    const X sx(s.real(), s.imag());
    const X ax(a.real(), a.imag());
    // Left of the imaginary axis the direct terms grow like k^(-Re s) and cancel
    // against the tail, so a short shift with more correction terms wins.
    const bool left = s.real() < 0.0;
    unsigned shift = options.shift;
    if (shift == 0) {
        shift = left ? 4u + static_cast<unsigned>(std::ceil(0.6 * std::fabs(s.imag())))
                     : std::max(10u, static_cast<unsigned>(std::ceil(std::abs(s))) + 10u);
    }
    const unsigned depth = options.depth != 0 ? options.depth : (left ? 20u : 12u);
    const BernoulliTable& table = shared_bernoulli_table(2 * depth);

    X direct = 0.0L;
    for (unsigned k = 0; k < shift; ++k) {
        direct += std::exp(-sx * std::log(static_cast<long double>(k) + ax));
    }

    const X base = static_cast<long double>(shift) + ax;
    const X power = std::exp(-sx * std::log(base)); // base^(-s)
    X tail = base * power / (sx - 1.0L) + 0.5L * power;

    // sum_j B_2j / (2j)! * s (s+1) ... (s+2j-2) * base^(-s-2j+1)
    X rising = sx;                  // s (s+1) ... (s+2j-2)
    X base_power = power / base;    // base^(-s-2j+1)
    long double factorial = 2.0L;   // (2j)!
    const X inv_base_sq = 1.0L / (base * base);
    for (unsigned j = 1; j <= depth; ++j) {
        tail += table.extended(2 * j) / factorial * rising * base_power;
        rising *= (sx + static_cast<long double>(2 * j - 1)) * (sx + static_cast<long double>(2 * j));
        base_power *= inv_base_sq;
        factorial *= static_cast<long double>(2 * j + 1) * static_cast<long double>(2 * j + 2);
    }
    const X total = direct + tail;
    return {static_cast<double>(total.real()), static_cast<double>(total.imag())};
}

} // namespace polylog::special
