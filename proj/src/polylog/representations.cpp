#include "polylog/representations.hpp"

#include "polylog/detail/summation.hpp"
#include "polylog/singular_integrands.hpp"
#include "polylog/special/bernoulli.hpp"
#include "polylog/special/clausen.hpp"
#include "polylog/special/gamma.hpp"
#include "polylog/special/trig.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace polylog {

namespace {

using special::ClausenChannel;
using special::ClausenExpansion;

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kMinQuadTol = 1e-14;
constexpr std::uint64_t kSeriesTermCap = 50'000'000;

constexpr std::array<std::pair<Route, std::string_view>, 11> kRouteNames = {{
    {Route::Auto, "auto"},
    {Route::Series, "series"},
    {Route::ClassicalExp, "classical-exp"},
    {Route::ClassicalLog, "classical-log"},
    {Route::Theorem6a, "theorem6a"},
    {Route::Theorem6b, "theorem6b"},
    {Route::Theorem6c, "theorem6c"},
    {Route::Bernoulli7a, "bernoulli7a"},
    {Route::Bernoulli7b, "bernoulli7b"},
    {Route::Bernoulli7c, "bernoulli7c"},
    {Route::InversionInt, "inversion-int"},
}};

double quad_tol(double tol)
{
    return std::max(tol, kMinQuadTol);
}

void require_tol(double tol)
{
    if (!(tol > 0.0) || !std::isfinite(tol)) {
        throw DomainError("tolerance must be positive");
    }
}

void require_disc(Complex z, const char* who)
{
    if (!is_finite(z) || !(std::abs(z) < 1.0)) {
        throw DomainError(std::string(who) + ": requires |z| < 1");
    }
}

void require_theorem_order(Complex s, const char* who)
{
    if (!is_finite(s) || !(s.real() > 1.0)) {
        throw DomainError(std::string(who) + ": requires Re s > 1");
    }
}

// (2π)^m / (2 m!)
double fourier_prefactor(unsigned m)
{
    double value = 0.5;
    for (unsigned j = 1; j <= m; ++j) {
        value *= kTwoPi / static_cast<double>(j);
    }
    return value;
}

double sign_power(unsigned k)
{
    return k % 2 == 0 ? 1.0 : -1.0;
}

bool integer_order(Complex s, unsigned& n)
{
    if (s.imag() != 0.0 || s.real() < 0.0 || s.real() != std::round(s.real()) || s.real() > 1e6) {
        return false;
    }
    n = static_cast<unsigned>(s.real());
    return true;
}

// (1/δ) ∫_0^δ weight(t) K(z, t) dt, scaled by `scale`, to absolute tolerance tol.
template <class Weight>
PolylogResult kernel_route(Route route, Weight&& weight, KernelKind kind, Complex z, Delta delta,
                           double scale, double tol, double integrand_error)
{
    const double upper = delta_value(delta);
    const double factor = std::fabs(scale) / upper;
    quad::QuadratureOptions options;
    options.breakpoints = kernel_peaks(z, upper);
    const quad::PatchedIntegrand integrand(
        [&weight, kind, z](double t) { return weight(t) * kernel_unchecked(kind, z, t); });
    const quad::QuadratureResult q
        = quad::integrate_adaptive(integrand, 0.0, upper, quad_tol(0.5 * tol / factor), options);

    PolylogResult out;
    out.value = scale / upper * q.value;
    out.error_estimate = factor * q.error_estimate + integrand_error;
    out.route = route;
    out.converged = q.converged && out.error_estimate <= tol;
    out.quadrature = q;
    return out;
}

bool use_closed_form(ClausenSource source, Complex s, ClausenChannel channel, unsigned& n)
{
    if (source != ClausenSource::Auto || !integer_order(s, n) || n < 2) {
        return false;
    }
    return channel == ClausenChannel::Sin ? n % 2 == 1 : n % 2 == 0;
}

// Upper bound of ∫_T^∞ t^(σ-1) e^(-t) dt.
double upper_gamma_bound(double sigma, double cutoff)
{
    const double lead = std::pow(cutoff, sigma - 1.0) * std::exp(-cutoff);
    if (sigma <= 1.0) {
        return lead;
    }
    return lead / (1.0 - (sigma - 1.0) / cutoff);
}

Complex principal_log(Complex z)
{
    if (z.imag() == 0.0 && z.real() < 0.0) {
        return {std::log(-z.real()), kPi};
    }
    return std::log(z);
}

} // namespace

std::string_view route_name(Route route) noexcept
{
    for (const auto& [r, name] : kRouteNames) {
        if (r == route) {
            return name;
        }
    }
    return "unknown";
}

std::optional<Route> parse_route(std::string_view name) noexcept
{
    for (const auto& [r, n] : kRouteNames) {
        if (n == name) {
            return r;
        }
    }
    return std::nullopt;
}

PolylogResult li_series(Complex s, Complex z, double tol)
{
    require_tol(tol);
    require_disc(z, "li_series");
    if (!is_finite(s)) {
        throw DomainError("li_series: s must be finite");
    }
    PolylogResult out;
    out.route = Route::Series;
    if (z == Complex(0.0)) {
        out.value = 0.0;
        return out;
    }

    const double radius = std::abs(z);
    const double sigma = s.real();
    const bool real_order = s.imag() == 0.0;
    const double target = 1e-3 * tol;
    detail::CompensatedComplexSum sum;
    Complex power = 1.0;
    for (std::uint64_t k = 1;; ++k) {
        if (k > kSeriesTermCap) {
            throw ResourceError("li_series: more than 5e7 terms needed; |z| is too close to 1");
        }
        power *= z;
        const auto kd = static_cast<double>(k);
        const Complex weight = real_order ? Complex(std::pow(kd, -sigma)) : std::exp(-s * std::log(kd));
        sum.add(power * weight);

        // Terms past k shrink at least by ratio r once r < 1.
        const double next = kd + 1.0;
        const double ratio = radius * std::max(1.0, std::pow(next / (next + 1.0), sigma));
        if (ratio < 1.0) {
            const double bound = std::exp((kd + 1.0) * std::log(radius) - sigma * std::log(next)) / (1.0 - ratio);
            if (bound <= target) {
                out.error_estimate = bound;
                break;
            }
        }
    }
    out.value = sum.value();
    if (real_order && z.imag() == 0.0) {
        out.value.imag(0.0);
    }
    return out;
}

PolylogResult li_integral_classical(Complex s, Complex z, double tol, ClassicalForm form)
{
    require_tol(tol);
    if (!is_finite(s) || !(s.real() > 0.0)) {
        throw DomainError("li_integral_classical: requires Re s > 0");
    }
    if (!is_finite(z)) {
        throw DomainError("li_integral_classical: z must be finite");
    }
    if (z.imag() == 0.0 && z.real() > 1.0) {
        throw DomainError("li_integral_classical: z must not lie on the cut (1, inf)");
    }
    if (z == Complex(1.0) && !(s.real() > 1.0)) {
        throw DomainError("li_integral_classical: z = 1 requires Re s > 1");
    }
    const Route route = form == ClassicalForm::Exp ? Route::ClassicalExp : Route::ClassicalLog;
    if (form == ClassicalForm::Log) {
        require_disc(z, "li_integral_classical (log form)");
    }
    PolylogResult out;
    out.route = route;
    if (z == Complex(0.0)) {
        out.value = 0.0;
        return out;
    }

    const Complex scale = z / special::gamma_complex(s);
    const double scale_abs = std::abs(scale);
    const double sigma = s.real();

    quad::QuadratureResult q;
    double truncation = 0.0;
    if (form == ClassicalForm::Exp) {
        // Cut the range at T with |scale| ∫_T^∞ t^(σ-1) e^(-t) / (1 - |z| e^(-T)) dt <= tol/4.
        double cutoff = std::max(30.0, 2.0 * sigma + 10.0);
        for (;; cutoff += 5.0) {
            const double damp = std::abs(z) * std::exp(-cutoff);
            if (damp < 0.5) {
                truncation = scale_abs * upper_gamma_bound(sigma, cutoff) / (1.0 - damp);
                if (truncation <= 0.25 * tol || cutoff > 2000.0) {
                    break;
                }
            }
        }
        // t = u^p flattens t^(s-1) at the origin when Re s < 1.
        const double p = sigma >= 1.0 ? 1.0 : std::ceil(1.0 / sigma) + 1.0;
        const double upper = std::pow(cutoff, 1.0 / p);
        const quad::PatchedIntegrand integrand([s, z, p](double u) -> Complex {
            if (u <= 0.0) {
                return 0.0;
            }
            const double t = p == 1.0 ? u : std::pow(u, p);
            const double decay = std::exp(-t);
            const Complex power = std::exp((s - 1.0) * std::log(t));
            const double jacobian = p == 1.0 ? 1.0 : p * t / u;
            return jacobian * power * decay / (1.0 - z * decay);
        });
        q = quad::integrate_adaptive(integrand, 0.0, upper, quad_tol(0.5 * tol / scale_abs));
    } else {
        // t = v^3: dt = 3 v² dv, log(1/t) = -3 log v.
        const quad::PatchedIntegrand integrand([s, z](double v) -> Complex {
            if (v <= 0.0 || v >= 1.0) {
                return 0.0;
            }
            const double log_inv = -3.0 * std::log(v);
            return 3.0 * v * v * std::exp((s - 1.0) * std::log(log_inv)) / (1.0 - z * (v * v * v));
        });
        q = quad::integrate_adaptive(integrand, 0.0, 1.0, quad_tol(0.5 * tol / scale_abs));
    }

    out.value = scale * q.value;
    out.error_estimate = scale_abs * q.error_estimate + truncation;
    out.converged = q.converged && out.error_estimate <= tol;
    out.quadrature = q;
    if (s.imag() == 0.0 && z.imag() == 0.0) {
        out.value.imag(0.0);
    }
    return out;
}

PolylogResult li_theorem_sin(Complex s, Complex z, Delta delta, double tol, ClausenSource source)
{
    require_tol(tol);
    require_theorem_order(s, "li_theorem_sin");
    require_disc(z, "li_theorem_sin");
    if (z == Complex(0.0)) {
        PolylogResult out;
        out.route = Route::Theorem6a;
        out.value = 0.0;
        return out;
    }
    unsigned n = 0;
    if (use_closed_form(source, s, ClausenChannel::Sin, n)) {
        auto weight = [n](double t) { return Complex(special::clausen_bernoulli_turns(ClausenChannel::Sin, n, t)); };
        return kernel_route(Route::Theorem6a, weight, KernelKind::Sin, z, delta, 1.0, tol, 0.0);
    }
    const ClausenExpansion expansion(s);
    auto weight = [&expansion](double t) { return expansion.evaluate_turns(t).first; };
    return kernel_route(Route::Theorem6a, weight, KernelKind::Sin, z, delta, 1.0, tol, 0.1 * tol);
}

PolylogResult li_theorem_cos(Complex s, Complex z, Delta delta, CosVariant variant, double tol,
                             ClausenSource source)
{
    require_tol(tol);
    require_theorem_order(s, "li_theorem_cos");
    require_disc(z, "li_theorem_cos");
    const Route route = variant == CosVariant::CosKernel ? Route::Theorem6b : Route::Theorem6c;
    const KernelKind kind = variant == CosVariant::CosKernel ? KernelKind::Cos : KernelKind::Alt;
    if (z == Complex(0.0)) {
        PolylogResult out;
        out.route = route;
        out.value = 0.0;
        return out;
    }
    unsigned n = 0;
    if (use_closed_form(source, s, ClausenChannel::Cos, n)) {
        auto weight = [n](double t) { return Complex(special::clausen_bernoulli_turns(ClausenChannel::Cos, n, t)); };
        return kernel_route(route, weight, kind, z, delta, 1.0, tol, 0.0);
    }
    const ClausenExpansion expansion(s);
    auto weight = [&expansion](double t) { return expansion.evaluate_turns(t).second; };
    return kernel_route(route, weight, kind, z, delta, 1.0, tol, 0.1 * tol);
}

PolylogResult li_bernoulli_odd(unsigned n, Complex z, Delta delta, double tol)
{
    require_tol(tol);
    if (n == 0) {
        throw DomainError("li_bernoulli_odd: requires n >= 1");
    }
    require_disc(z, "li_bernoulli_odd");
    const unsigned order = 2 * n - 1;
    const double scale = sign_power(n) * fourier_prefactor(order);
    auto weight = [order](double t) { return Complex(special::bernoulli_poly(order, t)); };
    return kernel_route(Route::Bernoulli7a, weight, KernelKind::Sin, z, delta, scale, tol, 0.0);
}

PolylogResult li_bernoulli_even(unsigned n, Complex z, Delta delta, EvenVariant variant, double tol)
{
    require_tol(tol);
    if (n == 0) {
        throw DomainError("li_bernoulli_even: requires n >= 1");
    }
    require_disc(z, "li_bernoulli_even");
    const unsigned order = 2 * n;
    const double scale = sign_power(n - 1) * fourier_prefactor(order);
    const Route route = variant == EvenVariant::CosKernel ? Route::Bernoulli7b : Route::Bernoulli7c;
    const KernelKind kind = variant == EvenVariant::CosKernel ? KernelKind::Cos : KernelKind::Alt;
    auto weight = [order](double t) { return Complex(special::bernoulli_poly(order, t)); };
    return kernel_route(route, weight, kind, z, delta, scale, tol, 0.0);
}

namespace {

ZetaOddResult zeta_odd(quad::SingularityKind kind, unsigned n, Delta delta, double tol, double switch_radius)
{
    require_tol(tol);
    if (n == 0) {
        throw DomainError("zeta_odd: requires n >= 1");
    }
    const unsigned order = 2 * n + 1;
    const double upper = delta_value(delta);
    double scale = sign_power(n - 1) * fourier_prefactor(order) / upper;
    if (kind == quad::SingularityKind::TanType) {
        const double four_n = std::ldexp(1.0, 2 * static_cast<int>(n));
        scale *= four_n / (four_n - 1.0);
    }
    const quad::PatchedIntegrand integrand = quad::integrand_with_limits(kind, n, switch_radius);
    quad::QuadratureOptions options;
    options.breakpoints = {0.5};
    const quad::QuadratureResult q
        = quad::integrate_adaptive(integrand, 0.0, upper, quad_tol(0.5 * tol / std::fabs(scale)), options);

    ZetaOddResult out;
    out.value = scale * q.value.real();
    out.error_estimate = std::fabs(scale) * q.error_estimate;
    out.converged = q.converged && out.error_estimate <= tol;
    out.evaluations = q.evaluations;
    return out;
}

} // namespace

ZetaOddResult zeta_odd_cot(unsigned n, Delta delta, double tol, double switch_radius)
{
    return zeta_odd(quad::SingularityKind::CotType, n, delta, tol, switch_radius);
}

ZetaOddResult zeta_odd_tan(unsigned n, Delta delta, double tol, double switch_radius)
{
    return zeta_odd(quad::SingularityKind::TanType, n, delta, tol, switch_radius);
}

quad::QuadratureResult lemma_integral(TrigChannel channel, KernelKind kind, unsigned n, Complex z,
                                      Delta delta, double tol)
{
    return lemma_integral(channel, kind, n, z, delta, tol, kernel_unchecked);
}

quad::QuadratureResult lemma_integral(TrigChannel channel, KernelKind kind, unsigned n, Complex z,
                                      Delta delta, double tol, const KernelFunction& kernel_fn)
{
    require_tol(tol);
    if (n == 0) {
        throw DomainError("lemma_integral: requires n >= 1");
    }
    if (kind == KernelKind::Alt) {
        throw DomainError("lemma_integral: kernel must be Sin or Cos");
    }
    require_disc(z, "lemma_integral");
    const double upper = delta_value(delta);
    const auto freq = static_cast<double>(2 * n);
    quad::QuadratureOptions options;
    options.breakpoints = kernel_peaks(z, upper);
    const quad::PatchedIntegrand integrand([channel, kind, z, freq, &kernel_fn](double t) {
        const double trig = channel == TrigChannel::Cos ? special::cos_pi(freq * t) : special::sin_pi(freq * t);
        return trig * kernel_fn(kind, z, t);
    });
    return quad::integrate_adaptive(integrand, 0.0, upper, quad_tol(tol), options);
}

Complex lemma_expected(TrigChannel channel, KernelKind kind, unsigned n, Complex z, Delta delta)
{
    const bool paired = (kind == KernelKind::Sin && channel == TrigChannel::Sin)
        || (kind == KernelKind::Cos && channel == TrigChannel::Cos);
    if (!paired) {
        return 0.0;
    }
    Complex power = 1.0;
    for (unsigned k = 0; k < n; ++k) {
        power *= z;
    }
    return delta_value(delta) * power;
}

PolylogResult li_inversion_integer(unsigned n, Complex z, double tol)
{
    require_tol(tol);
    if (!is_finite(z) || !(std::abs(z) > 1.0)) {
        throw DomainError("li_inversion_integer: requires |z| > 1");
    }
    if (z.imag() == 0.0 && z.real() > 0.0) {
        throw DomainError("li_inversion_integer: z must lie off the cut [1, inf)");
    }
    const PolylogResult reflected = li_series(static_cast<double>(n), 1.0 / z, 0.5 * tol);

    Complex w = principal_log(z) / Complex(0.0, kTwoPi);
    if (z.imag() < 0.0) {
        w += 1.0; // arg z taken in (0, 2π]
    }
    Complex factor = 1.0; // (2πi)^n / n!
    for (unsigned k = 1; k <= n; ++k) {
        factor *= Complex(0.0, kTwoPi) / static_cast<double>(k);
    }
    const double sign = n == 0 ? -1.0 : sign_power(n - 1);

    PolylogResult out;
    out.route = Route::InversionInt;
    out.value = sign * reflected.value - factor * special::bernoulli_poly(n, w);
    out.error_estimate = reflected.error_estimate
        + 16.0 * std::numeric_limits<double>::epsilon() * (std::abs(reflected.value) + std::abs(out.value));
    return out;
}

PolylogResult li_eval(const PolylogRequest& request)
{
    const Complex s = request.s;
    const Complex z = request.z;
    if (!is_finite(s) || !is_finite(z)) {
        throw DomainError("li_eval: s and z must be finite");
    }
    unsigned n = 0;
    const bool integer = integer_order(s, n);

    switch (request.representation) {
    case Route::Auto: {
        const double r = std::abs(z);
        if (r <= 0.5) {
            return li_series(s, z, request.tol);
        }
        if (r < 1.0) {
            return s.real() > 0.0 ? li_integral_classical(s, z, request.tol)
                                  : li_series(s, z, request.tol);
        }
        if (r > 1.0 && integer) {
            return li_inversion_integer(n, z, request.tol);
        }
        throw UnsupportedError("li_eval: no automatic route for this (s, z); |z| > 1 needs integer s >= 0 "
                               "and |z| = 1 is not covered");
    }
    case Route::Series:
        return li_series(s, z, request.tol);
    case Route::ClassicalExp:
        return li_integral_classical(s, z, request.tol, ClassicalForm::Exp);
    case Route::ClassicalLog:
        return li_integral_classical(s, z, request.tol, ClassicalForm::Log);
    case Route::Theorem6a:
        return li_theorem_sin(s, z, request.delta, request.tol);
    case Route::Theorem6b:
        return li_theorem_cos(s, z, request.delta, CosVariant::CosKernel, request.tol);
    case Route::Theorem6c:
        return li_theorem_cos(s, z, request.delta, CosVariant::AltKernel, request.tol);
    case Route::Bernoulli7a:
        if (!integer || n % 2 == 0) {
            throw UnsupportedError("bernoulli7a: requires an odd positive integer s");
        }
        return li_bernoulli_odd((n + 1) / 2, z, request.delta, request.tol);
    case Route::Bernoulli7b:
    case Route::Bernoulli7c:
        if (!integer || n == 0 || n % 2 == 1) {
            throw UnsupportedError(std::string(route_name(request.representation))
                                   + ": requires an even positive integer s");
        }
        return li_bernoulli_even(n / 2, z, request.delta,
                                 request.representation == Route::Bernoulli7b ? EvenVariant::CosKernel
                                                                              : EvenVariant::AltKernel,
                                 request.tol);
    case Route::InversionInt:
        if (!integer) {
            throw UnsupportedError("inversion-int: requires a non-negative integer s");
        }
        return li_inversion_integer(n, z, request.tol);
    }
    throw UnsupportedError("li_eval: unknown representation");
}

} // namespace polylog
