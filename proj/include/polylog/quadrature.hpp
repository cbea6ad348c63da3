#pragma once

#include "polylog/errors.hpp"

#include <cstddef>
#include <functional>
#include <vector>

namespace polylog::quad {

struct QuadratureResult {
    Complex value;
    double error_estimate = 0.0; // absolute
    std::size_t evaluations = 0;
    bool converged = false;
};

// A removable singularity: within `radius` of `point` the integrand is
// replaced by its limit value.
struct Patch {
    double point = 0.0;
    Complex limit;
    double radius = 0.0;
};

/// Integrand t -> f(t) with removable singularities patched out.
class PatchedIntegrand {
public:
    using Function = std::function<Complex(double)>;

    /// Throws DomainError when a radius is not positive or two patch
    /// neighbourhoods (point - radius, point + radius) overlap.
    explicit PatchedIntegrand(Function base, std::vector<Patch> patches = {});

    [[nodiscard]] Complex operator()(double t) const;
    [[nodiscard]] Complex base(double t) const { return base_(t); }
    [[nodiscard]] const std::vector<Patch>& patches() const noexcept { return patches_; }

private:
    Function base_;
    std::vector<Patch> patches_;
};

struct QuadratureOptions {
    std::size_t max_panels = 100'000;  // panels evaluated, 15 nodes each
    std::vector<double> breakpoints;   // initial interior splits; points outside (a, b) are ignored
};

struct PanelEstimate {
    Complex value;
    double error = 0.0;
    bool at_roundoff = false; // error is the roundoff floor; splitting will not reduce it
};

/// One 15-point Kronrod panel with the embedded 7-point Gauss rule; the error
/// is |K15 - G7|, floored at 50 eps times the integral of |f|.
[[nodiscard]] PanelEstimate gauss_kronrod_panel(const PatchedIntegrand& f, double a, double b);

/// Globally adaptive bisection on [a, b] to absolute tolerance `tol`.
///
/// Real and imaginary parts share panels. Panels at their roundoff floor, or
/// narrower than 64 eps times their distance from zero, are not split. When
/// the panel budget runs out, or the remaining error cannot be reduced below
/// tol, the best estimate is returned with converged = false. Panel
/// contributions are summed in ascending order of their left endpoint, so
/// results do not depend on refinement order.
/// Throws DomainError unless a < b and tol >= 1e-14, or when the integrand
/// returns a non-finite value.
[[nodiscard]] QuadratureResult integrate_adaptive(const PatchedIntegrand& f, double a, double b,
                                                  double tol, const QuadratureOptions& options = {});

} // namespace polylog::quad
