#include "polylog/kernels.hpp"

#include "polylog/special/trig.hpp"

#include <cmath>
#include <numbers>

namespace polylog {

using special::cos_pi;
using special::sin_pi;

namespace {

using Ext = std::complex<long double>;

struct Parts {
    Ext z;
    Ext denom;
    long double cos_theta;
    long double sin_theta;
};

// D and cos θ are formed from the same half-angle value, so the kernel
// numerators agree with D to extended-precision rounding.
Parts parts(Complex zd, double t) noexcept
{
    const Ext z(zd.real(), zd.imag());
    const long double s = sin_pi(t);
    const long double c = cos_pi(t);
    Parts p{z, {}, 0.0L, 2.0L * s * c};
    if (zd.real() >= 0.0) {
        p.denom = (1.0L - z) * (1.0L - z) + 4.0L * z * (s * s);
        p.cos_theta = 1.0L - 2.0L * (s * s);
    } else {
        p.denom = (1.0L + z) * (1.0L + z) - 4.0L * z * (c * c);
        p.cos_theta = 2.0L * (c * c) - 1.0L;
    }
    return p;
}

Complex narrow(Ext v) noexcept
{
    return {static_cast<double>(v.real()), static_cast<double>(v.imag())};
}

} // namespace

Complex kernel_denominator(Complex z, double t) noexcept
{
    return narrow(parts(z, t).denom);
}

Complex kernel_unchecked(KernelKind kind, Complex zd, double t) noexcept
{
    const Parts p = parts(zd, t);
    const Ext& z = p.z;
    switch (kind) {
    case KernelKind::Sin:
        return narrow(2.0L * z * p.sin_theta / p.denom);
    case KernelKind::Cos:
        return narrow((1.0L - z) * (1.0L + z) / p.denom);
    case KernelKind::Alt:
        return narrow(2.0L * z * (p.cos_theta - z) / p.denom);
    }
    return 0.0;
}

Complex kernel(KernelKind kind, Complex z, double t)
{
    if (!(std::abs(z) < 1.0)) {
        throw DomainError("kernel: requires |z| < 1");
    }
    return kernel_unchecked(kind, z, t);
}

std::vector<double> kernel_peaks(Complex z, double upper)
{
    std::vector<double> peaks;
    if (!(std::abs(z) > 0.95)) {
        return peaks;
    }
    double t = std::arg(z) / (2.0 * std::numbers::pi);
    t -= std::floor(t);
    for (double p : {t, 1.0 - t}) {
        if (p > 0.0 && p < upper) {
            peaks.push_back(p);
        }
    }
    return peaks;
}

} // namespace polylog
