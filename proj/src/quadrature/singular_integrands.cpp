#include "polylog/singular_integrands.hpp"

#include "polylog/special/bernoulli.hpp"
#include "polylog/special/trig.hpp"

#include <cmath>
#include <numbers>

namespace polylog::quad {

double removable_limit(SingularityKind kind, unsigned n)
{
    if (n == 0) {
        throw DomainError("integrand_with_limits: requires n >= 1");
    }
    // B_(2n+1)(t) ~ (2n+1) B_(2n)(t0) (t - t0) next to a zero t0 of the odd
    // polynomial; cot/tan contribute 1/(π (t - t0)) resp. -1/(π (t - t0)).
    const double slope = static_cast<double>(2 * n + 1) * special::bernoulli_number(2 * n);
    if (kind == SingularityKind::CotType) {
        return slope / std::numbers::pi;
    }
    return (1.0 - std::ldexp(1.0, 1 - 2 * static_cast<int>(n))) * slope / std::numbers::pi;
}

PatchedIntegrand integrand_with_limits(SingularityKind kind, unsigned n, double switch_radius)
{
    const double limit = removable_limit(kind, n);
    const unsigned order = 2 * n + 1;
    if (kind == SingularityKind::CotType) {
        return PatchedIntegrand(
            [order](double t) { return Complex(special::bernoulli_poly(order, t) * special::cot_pi(t)); },
            {Patch{0.0, limit, switch_radius}, Patch{1.0, limit, switch_radius}});
    }
    return PatchedIntegrand(
        [order](double t) { return Complex(special::bernoulli_poly(order, t) * special::tan_pi(t)); },
        {Patch{0.5, limit, switch_radius}});
}

} // namespace polylog::quad
