#include "polylog/quadrature.hpp"

#include "polylog/detail/summation.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <queue>
#include <string>

namespace polylog::quad {

namespace {

// 15-point Kronrod abscissae on [0, 1]; odd indices are the 7-point Gauss nodes.
constexpr std::array<long double, 8> kNodes = {
    0.991455371120812639206854697526329L, 0.949107912342758524526189684047851L,
    0.864864423359769072789712788640926L, 0.741531185599394439863864773280788L,
    0.586087235467691130294144845693013L, 0.405845151377397166906606412076961L,
    0.207784955007898467600689403773245L, 0.000000000000000000000000000000000L,
};
constexpr std::array<long double, 8> kKronrodWeights = {
    0.022935322010529224963732008058970L, 0.063092092629978553290700663189204L,
    0.104790010322250183839876322541518L, 0.140653259715525918745189590510238L,
    0.169004726639267902826583426598550L, 0.190350578064785409913256402421014L,
    0.204432940075298892414161999234649L, 0.209482141084727828012999174891714L,
};
constexpr std::array<long double, 4> kGaussWeights = {
    0.129484966168869693270611432679082L, 0.279705391489276667901467771423780L,
    0.381830050505118944950369775488975L, 0.417959183673469387755102040816327L,
};

constexpr std::size_t kNodesPerPanel = 15;

struct Panel {
    double a;
    double b;
    Complex value;
    double error;
    bool at_roundoff;
};

struct WorstFirst {
    bool operator()(const Panel& x, const Panel& y) const { return x.error < y.error; }
};

Complex checked(const PatchedIntegrand& f, double t)
{
    const Complex v = f(t);
    if (!is_finite(v)) {
        throw DomainError("integrate_adaptive: integrand is not finite at t = " + std::to_string(t));
    }
    return v;
}

} // namespace

PatchedIntegrand::PatchedIntegrand(Function base, std::vector<Patch> patches)
    : base_(std::move(base)), patches_(std::move(patches))
{
    std::sort(patches_.begin(), patches_.end(),
              [](const Patch& x, const Patch& y) { return x.point < y.point; });
    for (std::size_t i = 0; i < patches_.size(); ++i) {
        if (!(patches_[i].radius > 0.0)) {
            throw DomainError("PatchedIntegrand: patch radius must be positive");
        }
        if (i > 0 && patches_[i - 1].point + patches_[i - 1].radius > patches_[i].point - patches_[i].radius) {
            throw DomainError("PatchedIntegrand: patch neighbourhoods overlap");
        }
    }
}

Complex PatchedIntegrand::operator()(double t) const
{
    for (const Patch& p : patches_) {
        if (std::fabs(t - p.point) < p.radius) {
            return p.limit;
        }
    }
    return base_(t);
}

PanelEstimate gauss_kronrod_panel(const PatchedIntegrand& f, double a, double b)
{
    using Ext = long double;
    const Ext center = 0.5L * (static_cast<Ext>(a) + static_cast<Ext>(b));
    const Ext half = 0.5L * (static_cast<Ext>(b) - static_cast<Ext>(a));

    const Complex mid = checked(f, static_cast<double>(center));
    Ext kron_re = kKronrodWeights[7] * mid.real();
    Ext kron_im = kKronrodWeights[7] * mid.imag();
    Ext gauss_re = kGaussWeights[3] * mid.real();
    Ext gauss_im = kGaussWeights[3] * mid.imag();
    Ext abs_sum = kKronrodWeights[7] * std::abs(mid);

    for (std::size_t j = 0; j < 7; ++j) {
        const Ext offset = half * kNodes[j];
        const Complex lo = checked(f, static_cast<double>(center - offset));
        const Complex hi = checked(f, static_cast<double>(center + offset));
        const Ext sum_re = static_cast<Ext>(lo.real()) + hi.real();
        const Ext sum_im = static_cast<Ext>(lo.imag()) + hi.imag();
        kron_re += kKronrodWeights[j] * sum_re;
        kron_im += kKronrodWeights[j] * sum_im;
        abs_sum += kKronrodWeights[j] * (std::abs(lo) + std::abs(hi));
        if (j % 2 == 1) {
            gauss_re += kGaussWeights[j / 2] * sum_re;
            gauss_im += kGaussWeights[j / 2] * sum_im;
        }
    }

    PanelEstimate out;
    out.value = Complex(static_cast<double>(kron_re * half), static_cast<double>(kron_im * half));
    const double diff = static_cast<double>(std::hypot(kron_re - gauss_re, kron_im - gauss_im) * std::fabs(half));
    const double floor = 50.0 * std::numeric_limits<double>::epsilon() * static_cast<double>(abs_sum * std::fabs(half));
    out.error = std::max(diff, floor);
    out.at_roundoff = diff <= floor;
    return out;
}

QuadratureResult integrate_adaptive(const PatchedIntegrand& f, double a, double b, double tol,
                                    const QuadratureOptions& options)
{
    if (!(a < b) || !std::isfinite(a) || !std::isfinite(b)) {
        throw DomainError("integrate_adaptive: requires finite a < b");
    }
    if (!(tol >= 1e-14)) {
        throw DomainError("integrate_adaptive: tolerance must be at least 1e-14");
    }

    std::vector<double> cuts{a};
    for (double p : options.breakpoints) {
        if (p > a && p < b) {
            cuts.push_back(p);
        }
    }
    cuts.push_back(b);
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

    std::priority_queue<Panel, std::vector<Panel>, WorstFirst> active;
    std::vector<Panel> settled; // too narrow to split, or already at roundoff level
    QuadratureResult result;
    std::size_t panels = 0;
    double total_error = 0.0;

    auto evaluate = [&](double lo, double hi) {
        const PanelEstimate est = gauss_kronrod_panel(f, lo, hi);
        ++panels;
        result.evaluations += kNodesPerPanel;
        total_error += est.error;
        return Panel{lo, hi, est.value, est.error, est.at_roundoff};
    };

    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        active.push(evaluate(cuts[i], cuts[i + 1]));
    }

    bool exhausted = false;
    while (total_error > tol && !active.empty()) {
        if (panels + 2 > options.max_panels) {
            exhausted = true;
            break;
        }
        Panel worst = active.top();
        active.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        const double min_width = 64.0 * std::numeric_limits<double>::epsilon()
            * std::max({std::fabs(worst.a), std::fabs(worst.b), std::numeric_limits<double>::min()});
        if (worst.at_roundoff || worst.b - worst.a <= min_width || mid <= worst.a || mid >= worst.b) {
            settled.push_back(worst);
            continue;
        }
        total_error -= worst.error;
        active.push(evaluate(worst.a, mid));
        active.push(evaluate(mid, worst.b));
    }

    std::vector<Panel> all = std::move(settled);
    while (!active.empty()) {
        all.push_back(active.top());
        active.pop();
    }
    std::sort(all.begin(), all.end(), [](const Panel& x, const Panel& y) { return x.a < y.a; });

    detail::CompensatedComplexSum value;
    detail::CompensatedSum error;
    for (const Panel& p : all) {
        value.add(p.value);
        error.add(p.error);
    }
    result.value = value.value();
    result.error_estimate = error.value();
    result.converged = !exhausted && result.error_estimate <= tol;
    return result;
}

} // namespace polylog::quad
