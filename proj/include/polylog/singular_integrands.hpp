#pragma once

#include "polylog/quadrature.hpp"

namespace polylog::quad {

enum class SingularityKind {
    CotType, // B_(2n+1)(t) cot(πt), removable at t = 0 and t = 1
    TanType, // B_(2n+1)(t) tan(πt), removable at t = 1/2
};

// Width of the neighbourhood around a removable singularity that returns the
// limit value, as a fraction of the integration domain [0, 1]. Below ~1e-8
// the cot/tan cancellation is no longer resolved in binary64.
inline constexpr double kSwitchFraction = 1e-7;

/// Limit value of the integrand at its removable singularities:
///   CotType: (2n+1) B_(2n) / π              (both t = 0 and t = 1)
///   TanType: (1 - 2^(1-2n)) (2n+1) B_(2n) / π  (t = 1/2)
[[nodiscard]] double removable_limit(SingularityKind kind, unsigned n);

/// B_(2n+1)(t) cot(πt) or B_(2n+1)(t) tan(πt) on [0, 1] with its removable
/// singularities patched. Throws DomainError for n = 0.
[[nodiscard]] PatchedIntegrand integrand_with_limits(SingularityKind kind, unsigned n,
                                                     double switch_radius = kSwitchFraction);

} // namespace polylog::quad
