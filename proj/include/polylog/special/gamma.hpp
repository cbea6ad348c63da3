#pragma once

#include <complex>

namespace polylog::special {

/// Gamma function of a complex argument.
///
/// Lanczos approximation (g = 607/128, 15 terms) for Re s >= 1/2 and the
/// reflection formula below that. Relative error is ~1e-15 on the right
/// half-plane and a few times that after reflection.
/// Throws PoleError at s = 0, -1, -2, ... and DomainError when the value
/// overflows binary64.
[[nodiscard]] std::complex<double> gamma_complex(std::complex<double> s);

/// A logarithm of Gamma(s); the imaginary part is not normalized to the
/// principal log-gamma branch, so use it only through exp().
[[nodiscard]] std::complex<double> log_gamma_complex(std::complex<double> s);

} // namespace polylog::special
