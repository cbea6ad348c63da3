#pragma once

#include "polylog/errors.hpp"

#include <functional>
#include <vector>

namespace polylog {

// Poisson-type weights, with θ = 2πt and D = 1 - 2z cos θ + z²:
//   Sin: 2z sin θ / D      Cos: (1 - z²) / D      Alt: 2z (cos θ - z) / D
// Cos = 1 + Alt identically.
enum class KernelKind { Sin, Cos, Alt };

using KernelFunction = std::function<Complex(KernelKind, Complex, double)>;

/// Kernel weight at t (in turns). Throws DomainError for |z| >= 1.
[[nodiscard]] Complex kernel(KernelKind kind, Complex z, double t);

/// Same without the |z| check, for integrand inner loops.
[[nodiscard]] Complex kernel_unchecked(KernelKind kind, Complex z, double t) noexcept;

/// D = (1 - z e^{iθ})(1 - z e^{-iθ}), evaluated in the cancellation-free form
/// (1 ∓ z)² ± 4z sin²/cos²(θ/2) matching the sign of Re z.
[[nodiscard]] Complex kernel_denominator(Complex z, double t) noexcept;

/// Interior split points in (0, upper) where |D| is smallest, returned only
/// for |z| > 0.95, where the kernels are sharply peaked.
[[nodiscard]] std::vector<double> kernel_peaks(Complex z, double upper);

} // namespace polylog
