#pragma once

#include <complex>

namespace polylog::special {

/// Riemann zeta function.
///
/// Re s > 0: alternating (eta) series with Cohen-Villegas-Zagier acceleration,
/// zeta(s) = eta(s) / (1 - 2^(1-s)). Re s <= 0: the functional equation, with
/// exact Bernoulli values at non-positive integers. Throws PoleError at s = 1.
[[nodiscard]] std::complex<double> riemann_zeta(std::complex<double> s);

struct HurwitzOptions {
    unsigned shift = 0; // terms summed directly; 0 selects max(10, ceil|s| + 10), or 4 + ceil(0.6 |Im s|) for Re s < 0
    unsigned depth = 0; // Bernoulli correction terms; 0 selects 12, or 20 for Re s < 0
};

/// Hurwitz zeta function sum_{k>=0} (k + a)^(-s), continued to every s != 1
/// by Euler-Maclaurin summation in extended precision (exact Bernoulli values
/// at s = 0, -1, -2, ...). Requires Re a > 0.
///
/// The Euler-Maclaurin remainder is the accuracy bottleneck: with the default
/// options it stays below ~1e-12 relative for Re s >= 0 and |s| up to a few
/// tens; left of the axis it degrades slowly with -Re s (~1e-12 at s = -5.5,
/// ~5e-11 at s = -12.5).
/// Throws PoleError at s = 1 and DomainError for a in {0, -1, -2, ...} or
/// Re a <= 0.
[[nodiscard]] std::complex<double> hurwitz_zeta(std::complex<double> s, std::complex<double> a,
                                                const HurwitzOptions& options = {});

/// e^w - 1 without cancellation for small |w|.
[[nodiscard]] std::complex<double> expm1_complex(std::complex<double> w);

} // namespace polylog::special
