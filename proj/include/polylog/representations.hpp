#pragma once

#include "polylog/errors.hpp"
#include "polylog/kernels.hpp"
#include "polylog/quadrature.hpp"

#include <optional>
#include <string_view>

namespace polylog {

/// Every evaluation route for Li_s(z). `Auto` only appears in requests.
enum class Route {
    Auto,
    Series,       // sum z^k / k^s
    ClassicalExp, // z/Γ(s) ∫_0^∞ t^(s-1) / (e^t - z) dt
    ClassicalLog, // z/Γ(s) ∫_0^1 log^(s-1)(1/t) / (1 - z t) dt
    Theorem6a,    // (1/δ) ∫_0^δ S_s(2πt) Sin(z, t) dt
    Theorem6b,    // (1/δ) ∫_0^δ C_s(2πt) Cos(z, t) dt
    Theorem6c,    // (1/δ) ∫_0^δ C_s(2πt) Alt(z, t) dt
    Bernoulli7a,  // odd integer order through B_(2n-1)(t)
    Bernoulli7b,  // even integer order through B_(2n)(t), Cos kernel
    Bernoulli7c,  // even integer order through B_(2n)(t), Alt kernel
    InversionInt, // integer order, |z| > 1
};

[[nodiscard]] std::string_view route_name(Route route) noexcept;
/// Inverse of route_name; also accepts "auto". Empty on unknown names.
[[nodiscard]] std::optional<Route> parse_route(std::string_view name) noexcept;

/// Upper integration limit δ of the Poisson-kernel representations.
enum class Delta { One, Half };

[[nodiscard]] constexpr double delta_value(Delta d) noexcept
{
    return d == Delta::One ? 1.0 : 0.5;
}

struct PolylogRequest {
    Complex s;
    Complex z;
    Route representation = Route::Auto;
    Delta delta = Delta::One;
    double tol = 1e-10; // absolute
};

struct PolylogResult {
    Complex value;
    double error_estimate = 0.0;
    Route route = Route::Series;
    bool converged = true;
    std::optional<quad::QuadratureResult> quadrature;
};

// Where the Theorem routes take S_s / C_s from.
enum class ClausenSource {
    Auto,      // Bernoulli closed form when the order allows it, else the log expansion
    Expansion, // always the log expansion (keeps Theorem and Bernoulli routes independent)
};

/// Defining series, |z| < 1, any s. Truncated once the tail bound
/// |z|^(K+1) (K+1)^(-Re s) / (1 - r) drops below tol, where r bounds the
/// ratio of consecutive terms past K. Throws DomainError for |z| >= 1 and
/// ResourceError past 5e7 terms.
[[nodiscard]] PolylogResult li_series(Complex s, Complex z, double tol = 1e-10);

enum class ClassicalForm { Exp, Log };

/// Classical integrals (Re s > 0). The exponential form accepts any z off
/// the cut (1, ∞); the logarithmic form requires |z| < 1.
[[nodiscard]] PolylogResult li_integral_classical(Complex s, Complex z, double tol = 1e-10,
                                                  ClassicalForm form = ClassicalForm::Exp);

/// Sine-kernel representation; Re s > 1, |z| < 1.
[[nodiscard]] PolylogResult li_theorem_sin(Complex s, Complex z, Delta delta, double tol = 1e-10,
                                           ClausenSource source = ClausenSource::Auto);

enum class CosVariant { CosKernel, AltKernel };

/// Cosine-kernel representations; Re s > 1, |z| < 1. CosKernel integrates against
/// (1 - z²)/D, AltKernel against 2z(cos θ - z)/D.
[[nodiscard]] PolylogResult li_theorem_cos(Complex s, Complex z, Delta delta, CosVariant variant,
                                           double tol = 1e-10,
                                           ClausenSource source = ClausenSource::Auto);

/// Li_(2n-1)(z) = (-1)^n (1/δ) (2π)^(2n-1) / (2 (2n-1)!) ∫_0^δ B_(2n-1)(t) Sin(z, t) dt.
[[nodiscard]] PolylogResult li_bernoulli_odd(unsigned n, Complex z, Delta delta, double tol = 1e-10);

enum class EvenVariant { CosKernel, AltKernel };

/// Li_(2n)(z) = (-1)^(n-1) (1/δ) (2π)^(2n) / (2 (2n)!) ∫_0^δ B_(2n)(t) {Cos | Alt}(z, t) dt.
[[nodiscard]] PolylogResult li_bernoulli_even(unsigned n, Complex z, Delta delta, EvenVariant variant,
                                              double tol = 1e-10);

struct ZetaOddResult {
    double value = 0.0;
    double error_estimate = 0.0;
    bool converged = false;
    std::size_t evaluations = 0;
};

/// ζ(2n+1) = (-1)^(n-1) (1/δ) (2π)^(2n+1) / (2 (2n+1)!) ∫_0^δ B_(2n+1)(t) cot(πt) dt.
[[nodiscard]] ZetaOddResult zeta_odd_cot(unsigned n, Delta delta, double tol = 1e-10,
                                         double switch_radius = 1e-7);

/// ζ(2n+1) = (-1)^(n-1) 2^(2n)/(2^(2n) - 1) (1/δ) (2π)^(2n+1) / (2 (2n+1)!) ∫_0^δ B_(2n+1)(t) tan(πt) dt.
[[nodiscard]] ZetaOddResult zeta_odd_tan(unsigned n, Delta delta, double tol = 1e-10,
                                         double switch_radius = 1e-7);

enum class TrigChannel { Cos, Sin };

/// ∫_0^δ {cos | sin}(2πnt) K(z, t) dt for K in {Sin, Cos}; n >= 1, |z| < 1.
[[nodiscard]] quad::QuadratureResult lemma_integral(TrigChannel channel, KernelKind kind, unsigned n,
                                                    Complex z, Delta delta, double tol = 1e-12);
/// Same with a caller-supplied kernel in place of kernel_unchecked.
[[nodiscard]] quad::QuadratureResult lemma_integral(TrigChannel channel, KernelKind kind, unsigned n,
                                                    Complex z, Delta delta, double tol,
                                                    const KernelFunction& kernel_fn);

/// Closed-form value of lemma_integral: δ z^n on the (Sin kernel, sin) and
/// (Cos kernel, cos) pairings, zero on the other two.
[[nodiscard]] Complex lemma_expected(TrigChannel channel, KernelKind kind, unsigned n, Complex z,
                                     Delta delta);

/// Li_n(z) = (-1)^(n-1) Li_n(1/z) - (2πi)^n / n! B_n(log z / 2πi) for |z| > 1,
/// z off the cut [1, ∞), with arg z taken in (0, 2π]: the principal log for
/// Im z >= 0 (Im log z = π on the negative axis), shifted by 2πi below the axis.
[[nodiscard]] PolylogResult li_inversion_integer(unsigned n, Complex z, double tol = 1e-10);

/// Dispatcher. Auto picks Series for |z| <= 0.5, ClassicalExp for
/// 0.5 < |z| < 1 (Series when Re s <= 0) and InversionInt for |z| > 1 at
/// integer s >= 0. Explicit routes enforce their own preconditions.
/// Throws UnsupportedError for combinations no route covers.
[[nodiscard]] PolylogResult li_eval(const PolylogRequest& request);

} // namespace polylog
