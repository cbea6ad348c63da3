#include "polylog/representations.hpp"
#include "polylog/singular_integrands.hpp"
#include "polylog/special_core.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

using namespace polylog;

namespace {

constexpr double pi = std::numbers::pi;

struct Outcome {
    bool pass;
    std::string detail;
};

std::string sci(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2e", v);
    return buf;
}

std::vector<Complex> polar_grid(std::initializer_list<double> radii, std::initializer_list<double> angles)
{
    std::vector<Complex> points;
    for (double r : radii) {
        for (double a : angles) {
            points.push_back(std::polar(r, a));
        }
    }
    return points;
}

Outcome moment_oracle()
{
    const auto points = polar_grid({0.1, 0.5, 0.9}, {0.0, pi / 3.0, pi / 2.0});
    double worst = 0.0;
    double worst_full_or_paired = 0.0;
    int count = 0;
    int failures = 0;
    for (unsigned n = 1; n <= 8; ++n) {
        for (Complex z : points) {
            for (Delta d : {Delta::One, Delta::Half}) {
                for (KernelKind kind : {KernelKind::Sin, KernelKind::Cos}) {
                    for (TrigChannel channel : {TrigChannel::Sin, TrigChannel::Cos}) {
                        const auto q = lemma_integral(channel, kind, n, z, d, 1e-12);
                        const double dev = std::abs(q.value - lemma_expected(channel, kind, n, z, d));
                        ++count;
                        worst = std::max(worst, dev);
                        const bool paired = (kind == KernelKind::Sin) == (channel == TrigChannel::Sin);
                        if (d == Delta::One || paired) {
                            worst_full_or_paired = std::max(worst_full_or_paired, dev);
                        }
                        failures += (dev <= 1e-9 && q.converged) ? 0 : 1;
                    }
                }
            }
        }
    }
    return {failures == 0, std::to_string(count) + " integrals, worst |dev| " + sci(worst) + ", " + std::to_string(failures)
                               + " above 1e-9 (worst over delta = 1 and paired channels " + sci(worst_full_or_paired) + ")"};
}

Outcome representation_agreement()
{
    const auto points = polar_grid({0.3, 0.6, 0.75, 0.9}, {0.4, 2.1, 4.4});
    double worst = 0.0;
    int count = 0;
    bool converged = true;
    for (Complex s : {Complex(2.0), Complex(2.5), Complex(3.0), Complex(4.0), Complex(2.2, 0.9)}) {
        for (Complex z : points) {
            const Complex ref = li_series(s, z, 1e-14).value;
            auto record = [&](const PolylogResult& r) {
                worst = std::max(worst, std::abs(r.value - ref) / std::abs(ref));
                converged = converged && r.converged;
                ++count;
            };
            for (Delta d : {Delta::One, Delta::Half}) {
                record(li_theorem_sin(s, z, d, 1e-12));
                record(li_theorem_cos(s, z, d, CosVariant::CosKernel, 1e-12));
                record(li_theorem_cos(s, z, d, CosVariant::AltKernel, 1e-12));
            }
            record(li_integral_classical(s, z, 1e-12));
        }
    }
    return {converged && worst <= 1e-7,
            std::to_string(count) + " evaluations, max relative deviation from the series " + sci(worst)};
}

Outcome integer_order_consistency()
{
    const auto points = polar_grid({0.4, 0.8}, {0.3, 1.9, 3.6});
    double worst = 0.0;
    double worst_first = 0.0;
    for (unsigned n = 1; n <= 3; ++n) {
        for (Complex z : points) {
            for (Delta d : {Delta::One, Delta::Half}) {
                const Complex odd = li_bernoulli_odd(n, z, d, 1e-12).value;
                if (n == 1) {
                    worst_first = std::max(worst_first, std::abs(odd + std::log(1.0 - z)));
                } else {
                    const double s = 2.0 * n - 1.0;
                    worst = std::max(worst, std::abs(odd - li_theorem_sin(s, z, d, 1e-12, ClausenSource::Expansion).value));
                }
                const double s = 2.0 * n;
                for (auto [even, cos] : {std::pair{EvenVariant::CosKernel, CosVariant::CosKernel},
                                         std::pair{EvenVariant::AltKernel, CosVariant::AltKernel}}) {
                    const Complex lhs = li_bernoulli_even(n, z, d, even, 1e-12).value;
                    const Complex rhs = li_theorem_cos(s, z, d, cos, 1e-12, ClausenSource::Expansion).value;
                    worst = std::max(worst, std::abs(lhs - rhs));
                }
            }
        }
    }
    return {std::max(worst, worst_first) <= 1e-8,
            "max |Bernoulli - Clausen expansion| " + sci(worst) + "; odd order 1 vs -log(1-z) " + sci(worst_first)};
}

Outcome odd_zeta()
{
    double worst = 0.0;
    bool converged = true;
    for (unsigned n = 1; n <= 3; ++n) {
        const double ref = special::riemann_zeta(2.0 * n + 1.0).real();
        for (Delta d : {Delta::One, Delta::Half}) {
            for (const ZetaOddResult& r : {zeta_odd_cot(n, d, 1e-12), zeta_odd_tan(n, d, 1e-12)}) {
                worst = std::max(worst, std::fabs(r.value - ref));
                converged = converged && r.converged;
            }
        }
    }
    const double zeta3 = std::fabs(special::riemann_zeta(3.0).real() - 1.2020569031595943);
    return {converged && worst <= 1e-9 && zeta3 <= 1e-15,
            "12 evaluations, max |dev| " + sci(worst) + "; reference zeta(3) off by " + sci(zeta3)};
}

Outcome kernel_identity_and_limits()
{
    double worst_ulp = 0.0;
    for (Complex z : {Complex(0.5), Complex(-0.9), Complex(0.3, 0.8), Complex(0.999)}) {
        for (int i = 0; i < 100; ++i) {
            const double t = (i + 0.5) / 100.0;
            const Complex c = kernel(KernelKind::Cos, z, t);
            const Complex a = kernel(KernelKind::Alt, z, t);
            const double scale = std::max({1.0, std::abs(c), std::abs(a)});
            worst_ulp = std::max(worst_ulp, std::abs(c - (1.0 + a)) / (std::nextafter(scale, INFINITY) - scale));
        }
    }
    double cot_dev = 0.0;
    double tan_dev = 0.0;
    double neg_tan_dev = 0.0;
    for (double t : {0.1, 0.25, 0.4}) {
        cot_dev = std::max(cot_dev, std::abs(kernel(KernelKind::Sin, 1.0 - 1e-8, t) - special::cot_pi(t)));
        const Complex near_minus_one = kernel(KernelKind::Sin, -1.0 + 1e-8, t);
        tan_dev = std::max(tan_dev, std::abs(near_minus_one - special::tan_pi(t)));
        neg_tan_dev = std::max(neg_tan_dev, std::abs(near_minus_one + special::tan_pi(t)));
    }
    return {worst_ulp <= 4.0 && cot_dev <= 1e-5 && tan_dev <= 1e-5,
            "identity " + sci(worst_ulp) + " ulp; |Sin - cot| " + sci(cot_dev) + "; |Sin - tan| " + sci(tan_dev)
                + " (|Sin + tan| " + sci(neg_tan_dev) + ")"};
}

Outcome clausen_consistency()
{
    special::ClausenOptions series_only;
    series_only.allow_closed_form = false;
    series_only.tol = 1e-12;
    double worst_closed = 0.0;
    double worst_hurwitz = 0.0;
    for (double x : {0.4, 1.3, 2.5, 3.9, 5.6}) {
        const double s1 = -std::arg(1.0 - std::polar(1.0, x));
        worst_closed = std::max(worst_closed, std::fabs(special::clausen_bernoulli(special::ClausenChannel::Sin, 1, x) - s1));
        for (unsigned order = 2; order <= 6; ++order) {
            const auto direct = special::clausen_direct(static_cast<double>(order), x, series_only);
            const bool odd = order % 2 == 1;
            const double want = odd ? direct.sin_part.real() : direct.cos_part.real();
            const auto channel = odd ? special::ClausenChannel::Sin : special::ClausenChannel::Cos;
            worst_closed = std::max(worst_closed, std::fabs(special::clausen_bernoulli(channel, order, x) - want));
        }
    }
    for (Complex s : {Complex(2.5), Complex(3.5), Complex(2.0, 0.7), Complex(4.5, -1.0)}) {
        for (int k = 1; k <= 9; ++k) {
            const double t = k / 10.0;
            const auto direct = special::clausen_direct(s, 2.0 * pi * t, series_only);
            const auto hurwitz = special::clausen_via_hurwitz(s, t);
            worst_hurwitz = std::max({worst_hurwitz, std::abs(hurwitz.sin_part - direct.sin_part),
                                      std::abs(hurwitz.cos_part - direct.cos_part)});
        }
    }
    return {worst_closed <= 1e-9 && worst_hurwitz <= 1e-8,
            "closed forms vs series " + sci(worst_closed) + "; Hurwitz vs series " + sci(worst_hurwitz)};
}

Outcome inversion()
{
    double worst = 0.0;
    for (unsigned n : {2u, 3u}) {
        for (Complex z : {Complex(-3.0), Complex(-5.0), Complex(2.0, 3.0), Complex(0.0, -1.5)}) {
            const Complex inv = li_inversion_integer(n, z, 1e-12).value;
            const Complex classical = li_integral_classical(static_cast<double>(n), z, 1e-12).value;
            worst = std::max(worst, std::abs(inv - classical));
        }
    }
    return {worst <= 1e-7, "8 evaluations, max |inversion - classical| " + sci(worst)};
}

Outcome removable_patches()
{
    int mismatches = 0;
    const special::BernoulliTable& table = special::shared_bernoulli_table(16);
    for (unsigned n = 1; n <= 8; ++n) {
        const quad::PatchedIntegrand f = quad::integrand_with_limits(quad::SingularityKind::TanType, n);
        const double slope = static_cast<double>(2 * n + 1) * table.value(2 * n);
        const double expected = (1.0 - std::ldexp(1.0, 1 - 2 * static_cast<int>(n))) * slope / pi;
        mismatches += f(0.5).real() == expected ? 0 : 1;
    }
    double worst = 0.0;
    for (unsigned n = 1; n <= 6; ++n) {
        for (auto kind : {quad::SingularityKind::CotType, quad::SingularityKind::TanType}) {
            const double eps = quad::kSwitchFraction;
            const auto coarse = quad::integrate_adaptive(quad::integrand_with_limits(kind, n, eps), 0.0, 1.0, 1e-13);
            const auto fine = quad::integrate_adaptive(quad::integrand_with_limits(kind, n, eps / 10.0), 0.0, 1.0, 1e-13);
            worst = std::max(worst, std::abs(coarse.value - fine.value));
        }
    }
    return {mismatches == 0 && worst <= 1e-10,
            std::to_string(mismatches) + " of 8 patch values differ; switch-radius sensitivity " + sci(worst)};
}

Outcome chebyshev_generating_function()
{
    const unsigned terms = 60;
    int violations = 0;
    int count = 0;
    double worst_ratio = 0.0;
    for (double r : {0.0, 0.2, 0.5, 0.75, 0.9}) {
        for (double angle : {0.0, 0.8, 2.0, pi}) {
            for (int k = 0; k <= 20; ++k) {
                const double c = std::cos(pi * k / 20.0);
                const Complex z = std::polar(r, angle);
                Complex sum = 1.0;
                Complex zp = 1.0;
                double magnitude = 1.0;
                for (unsigned m = 1; m <= terms; ++m) {
                    zp *= z;
                    sum += 2.0 * special::chebyshev_T(m, c) * zp;
                    magnitude += 2.0 * std::abs(zp);
                }
                const Complex closed = (1.0 - z * z) / (1.0 - 2.0 * z * c + z * z);
                const double bound = 2.0 * std::pow(r, terms + 1) / (1.0 - r)
                    + 8.0 * std::numeric_limits<double>::epsilon() * (magnitude + std::abs(closed));
                const double dev = std::abs(sum - closed);
                worst_ratio = std::max(worst_ratio, dev / bound);
                violations += dev <= bound ? 0 : 1;
                ++count;
            }
        }
    }
    return {violations == 0, std::to_string(count) + " points, worst |dev| / bound " + sci(worst_ratio)};
}

} // namespace

int main()
{
    const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
        {"kernel moment oracle", moment_oracle},
        {"representation agreement", representation_agreement},
        {"integer-order consistency", integer_order_consistency},
        {"odd zeta values", odd_zeta},
        {"kernel identity and limits", kernel_identity_and_limits},
        {"Clausen consistency", clausen_consistency},
        {"integer-order inversion", inversion},
        {"removable-singularity patches", removable_patches},
        {"Chebyshev generating function", chebyshev_generating_function},
    };
    int failed = 0;
    int index = 0;
    for (const auto& [name, check] : criteria) {
        ++index;
        const auto start = std::chrono::steady_clock::now();
        Outcome outcome;
        try {
            outcome = check();
        } catch (const std::exception& e) {
            outcome = {false, std::string("threw: ") + e.what()};
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        failed += outcome.pass ? 0 : 1;
        std::printf("criterion %d %s  %s: %s (%.2f s)\n", index, outcome.pass ? "PASS" : "FAIL", name,
                    outcome.detail.c_str(), seconds);
    }
    std::printf("%d of %zu criteria passed\n", index - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
