#include "polylog/special/clausen.hpp"

#include "polylog/detail/summation.hpp"
#include "polylog/errors.hpp"
#include "polylog/special/bernoulli.hpp"
#include "polylog/special/gamma.hpp"
#include "polylog/special/trig.hpp"
#include "polylog/special/zeta.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace polylog::special {

namespace {

using C = std::complex<double>;

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr std::size_t kExpansionTerms = 72;
constexpr std::uint64_t kTermSaturation = std::uint64_t{1} << 62;
constexpr double kExclusionRadius = 1e-8;

bool positive_integer(C s, unsigned& n)
{
    if (s.imag() != 0.0 || s.real() < 1.0 || s.real() != std::round(s.real())
        || s.real() > 1e6) {
        return false;
    }
    n = static_cast<unsigned>(s.real());
    return true;
}

void require_convergent(C s, const char* who)
{
    if (!(s.real() > 1.0)) {
        throw DomainError(std::string(who) + ": requires Re s > 1");
    }
}

// x in radians -> turns in [0, 1)
double to_turns(double x)
{
    const double t = x / kTwoPi;
    return t - std::floor(t);
}

// 2π * frac(k t), with the product k*t split exactly so large k keep full phase accuracy.
double phase(std::uint64_t k, double t)
{
    const auto kd = static_cast<double>(k);
    const double p = kd * t;
    const double e = std::fma(kd, t, -p);
    return kTwoPi * ((p - std::round(p)) + e);
}

std::pair<C, C> direct_sum(C s, double t, std::uint64_t terms)
{
    detail::CompensatedComplexSum sin_sum;
    detail::CompensatedComplexSum cos_sum;
    const bool real_order = s.imag() == 0.0;
    for (std::uint64_t k = 1; k <= terms; ++k) {
        const auto kd = static_cast<double>(k);
        const C weight = real_order ? C(std::pow(kd, -s.real()), 0.0) : std::exp(-s * std::log(kd));
        const double angle = phase(k, t);
        sin_sum.add(weight * std::sin(angle));
        cos_sum.add(weight * std::cos(angle));
    }
    return {sin_sum.value(), cos_sum.value()};
}

double prefactor(unsigned order)
{
    // (2π)^m / (2 m!)
    double value = 0.5;
    for (unsigned j = 1; j <= order; ++j) {
        value *= kTwoPi / static_cast<double>(j);
    }
    return value;
}

C hurwitz_at(C s, double a)
{
    // ζ(1-s, 0) = ζ(1-s, 1) for Re s > 1: the k = 0 term a^(s-1) vanishes.
    if (a <= 0.0 || a >= 1.0) {
        return hurwitz_zeta(1.0 - s, 1.0);
    }
    return hurwitz_zeta(1.0 - s, a);
}

void check_exclusion(ClausenChannel channel, C s)
{
    // Sin: csc(πs/2) is singular at even integers; Cos: sec(πs/2) at odd ones.
    const double nearest = std::round(s.real());
    const bool even = std::fmod(std::fabs(nearest), 2.0) == 0.0;
    const bool excluded_parity = (channel == ClausenChannel::Sin) == even;
    if (excluded_parity && std::abs(s - nearest) < kExclusionRadius) {
        throw ExclusionError(std::string("clausen_via_hurwitz: ")
                             + (channel == ClausenChannel::Sin ? "sin channel requires s != 2n"
                                                               : "cos channel requires s != 2n+1"));
    }
}

} // namespace

std::uint64_t clausen_direct_terms(C s, double x, double tol)
{
    const double sigma = s.real();
    if (!(sigma > 1.0) || !(tol > 0.0)) {
        return kTermSaturation;
    }
    double log_terms = std::log(2.0 / (tol * (sigma - 1.0))) / (sigma - 1.0);
    const double sin_half = std::fabs(sin_pi(to_turns(x)));
    if (sin_half > 0.0) {
        const double log_dirichlet
            = std::log(2.0 * (1.0 + std::abs(s) / sigma) / (tol * sin_half)) / sigma;
        log_terms = std::min(log_terms, log_dirichlet);
    }
    if (log_terms <= 0.0) {
        return 1;
    }
    if (log_terms >= std::log(static_cast<double>(kTermSaturation))) {
        return kTermSaturation;
    }
    return static_cast<std::uint64_t>(std::ceil(std::exp(log_terms)));
}

ClausenValue clausen_direct(C s, double x, const ClausenOptions& options)
{
    require_convergent(s, "clausen_direct");
    if (!std::isfinite(x)) {
        throw DomainError("clausen_direct: x must be finite");
    }
    const double t = to_turns(x);

    ClausenValue out;
    out.s = s;
    out.x = x;

    unsigned n = 0;
    const bool integer = positive_integer(s, n);
    const bool sin_closed = options.allow_closed_form && integer && n % 2 == 1;
    const bool cos_closed = options.allow_closed_form && integer && n % 2 == 0;
    if (sin_closed) {
        out.sin_part = clausen_bernoulli_turns(ClausenChannel::Sin, n, t);
        out.sin_method = ClausenMethod::Bernoulli;
    }
    if (cos_closed) {
        out.cos_part = clausen_bernoulli_turns(ClausenChannel::Cos, n, t);
        out.cos_method = ClausenMethod::Bernoulli;
    }
    const std::uint64_t terms = clausen_direct_terms(s, x, options.tol);
    std::pair<C, C> open;
    ClausenMethod method;
    if (terms <= options.max_direct_terms) {
        open = direct_sum(s, t, terms);
        method = ClausenMethod::DirectSum;
    } else if (options.allow_expansion) {
        open = ClausenExpansion(s).evaluate_turns(t);
        method = ClausenMethod::LogExpansion;
    } else {
        throw ResourceError("clausen_direct: " + std::to_string(terms)
                            + " series terms needed, above the configured cap");
    }
    if (!sin_closed) {
        out.sin_part = open.first;
        out.sin_method = method;
    }
    if (!cos_closed) {
        out.cos_part = open.second;
        out.cos_method = method;
    }
    if (s.imag() == 0.0) {
        out.sin_part.imag(0.0);
        out.cos_part.imag(0.0);
    }
    return out;
}

double clausen_bernoulli_turns(ClausenChannel channel, unsigned order, double t)
{
    if (!(t >= 0.0 && t <= 1.0)) {
        throw DomainError("clausen_bernoulli: argument outside [0, 2π]");
    }
    if (channel == ClausenChannel::Sin) {
        if (order % 2 == 0) {
            throw DomainError("clausen_bernoulli: sin channel needs an odd order");
        }
        if (order == 1 && (t == 0.0 || t == 1.0)) {
            throw DomainError("clausen_bernoulli: S_1 requires 0 < x < 2π");
        }
        const unsigned n = (order + 1) / 2;
        const double sign = (n % 2 == 0) ? 1.0 : -1.0;
        return sign * prefactor(order) * bernoulli_poly(order, t);
    }
    if (order == 0 || order % 2 == 1) {
        throw DomainError("clausen_bernoulli: cos channel needs an even order >= 2");
    }
    const unsigned n = order / 2;
    const double sign = (n % 2 == 1) ? 1.0 : -1.0;
    return sign * prefactor(order) * bernoulli_poly(order, t);
}

double clausen_bernoulli(ClausenChannel channel, unsigned order, double x)
{
    if (!(x >= 0.0 && x <= kTwoPi)) {
        throw DomainError("clausen_bernoulli: argument outside [0, 2π]");
    }
    return clausen_bernoulli_turns(channel, order, std::min(x / kTwoPi, 1.0));
}

C clausen_via_hurwitz(ClausenChannel channel, C s, double t)
{
    require_convergent(s, "clausen_via_hurwitz");
    if (!(t >= 0.0 && t <= 1.0)) {
        throw DomainError("clausen_via_hurwitz: t must lie in [0, 1]");
    }
    check_exclusion(channel, s);

    const C factor = std::exp(s * std::log(kTwoPi) - log_gamma_complex(s)) / 4.0;
    const C left = hurwitz_at(s, t);
    const C right = hurwitz_at(s, 1.0 - t);
    C value = channel == ClausenChannel::Sin ? factor / sin_pi(0.5 * s) * (left - right)
                                             : factor / cos_pi(0.5 * s) * (left + right);
    if (s.imag() == 0.0) {
        value.imag(0.0);
    }
    return value;
}

ClausenValue clausen_via_hurwitz(C s, double t)
{
    ClausenValue out;
    out.s = s;
    out.x = kTwoPi * t;
    out.sin_part = clausen_via_hurwitz(ClausenChannel::Sin, s, t);
    out.cos_part = clausen_via_hurwitz(ClausenChannel::Cos, s, t);
    out.sin_method = ClausenMethod::Hurwitz;
    out.cos_method = ClausenMethod::Hurwitz;
    return out;
}

double generalized_clausen(unsigned n, double x)
{
    if (n == 0) {
        throw DomainError("generalized_clausen: requires n >= 1");
    }
    if (n == 1) {
        const double half = std::fabs(sin_pi(x / (2.0 * std::numbers::pi)));
        if (half == 0.0) {
            throw DomainError("generalized_clausen: Cl_1 is singular at multiples of 2 pi");
        }
        return -std::log(2.0 * half);
    }
    const ClausenValue v = clausen_direct(static_cast<double>(n), x);
    return n % 2 == 1 ? v.cos_part.real() : v.sin_part.real();
}

ClausenExpansion::ClausenExpansion(C s) : s_(s)
{
    require_convergent(s, "ClausenExpansion");
    unsigned n = 0;
    integer_order_ = positive_integer(s, n);
    integer_value_ = n;
    coeffs_.resize(kExpansionTerms);
    double factorial = 1.0;
    for (std::size_t k = 0; k < kExpansionTerms; ++k) {
        if (k > 0) {
            factorial *= static_cast<double>(k);
        }
        if (integer_order_ && k + 1 == n) {
            coeffs_[k] = 0.0;
            continue;
        }
        coeffs_[k] = riemann_zeta(s - static_cast<double>(k)) / factorial;
    }
    if (integer_order_) {
        double inv_factorial = 1.0;
        for (unsigned j = 1; j < n; ++j) {
            harmonic_ += 1.0 / j;
            inv_factorial /= j;
        }
        singular_coeff_ = inv_factorial;
    } else {
        singular_coeff_ = gamma_complex(1.0 - s);
    }
}

C ClausenExpansion::singular(double x) const
{
    // log(-ix) on the principal branch
    const C log_minus_ix(std::log(std::fabs(x)), x > 0.0 ? -0.5 * std::numbers::pi : 0.5 * std::numbers::pi);
    if (integer_order_) {
        C power = 1.0;
        for (unsigned j = 1; j < integer_value_; ++j) {
            power *= C(0.0, x);
        }
        return singular_coeff_ * power * (harmonic_ - log_minus_ix);
    }
    return singular_coeff_ * std::exp((s_ - 1.0) * log_minus_ix);
}

std::pair<C, C> ClausenExpansion::evaluate_turns(double t) const
{
    const double r = t - std::round(t); // exact, in [-1/2, 1/2]
    const double x = kTwoPi * r;

    // Regular part: even powers feed C, odd powers feed S; y = (ix)^2 = -x^2.
    const double y = -x * x;
    C even = 0.0;
    C odd = 0.0;
    for (std::size_t k = kExpansionTerms; k-- > 0;) {
        if (k % 2 == 0) {
            even = even * y + coeffs_[k];
        } else {
            odd = odd * y + coeffs_[k];
        }
    }
    C sin_part = x * odd;
    C cos_part = even;

    if (x != 0.0) {
        const C plus = singular(x);
        const C minus = singular(-x);
        sin_part += (plus - minus) / C(0.0, 2.0);
        cos_part += 0.5 * (plus + minus);
    }
    if (s_.imag() == 0.0) {
        sin_part.imag(0.0);
        cos_part.imag(0.0);
    }
    return {sin_part, cos_part};
}

std::pair<C, C> ClausenExpansion::evaluate(double x) const
{
    return evaluate_turns(x / kTwoPi);
}

} // namespace polylog::special
