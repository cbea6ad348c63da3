#pragma once

namespace polylog::special {

// Chebyshev polynomial of the first kind, T_m(cos θ) = cos(mθ), by the
// three-term recurrence T_(k+1) = 2x T_k - T_(k-1).
[[nodiscard]] constexpr double chebyshev_T(unsigned m, double x) noexcept
{
    if (m == 0) {
        return 1.0;
    }
    double prev = 1.0;
    double curr = x;
    for (unsigned k = 1; k < m; ++k) {
        const double next = 2.0 * x * curr - prev;
        prev = curr;
        curr = next;
    }
    return curr;
}

} // namespace polylog::special
