#include "polylog/special/gamma.hpp"

#include "polylog/errors.hpp"
#include "polylog/special/trig.hpp"

#include <array>
#include <cmath>
#include <numbers>

namespace polylog::special {

namespace {

using C = std::complex<double>;

// Godfrey's coefficient set for g = 607/128.
constexpr double kLanczosG = 607.0 / 128.0;
constexpr std::array<double, 15> kLanczosCoeffs = {
    0.99999999999999709182,    57.156235665862923517,     -59.597960355475491248,
    14.136097974741747174,     -0.49191381609762019978,   .33994649984811888699e-4,
    .46523628927048575665e-4,  -.98374475304879564677e-4, .15808870322491248884e-3,
    -.21026444172410488319e-3, .21743961811521264320e-3,  -.16431810653676389022e-3,
    .84418223983852743293e-4,  -.26190838401581408670e-4, .36899182659531622704e-5,
};

void check_pole(C s)
{
    if (s.imag() == 0.0 && s.real() <= 0.0 && s.real() == std::round(s.real())) {
        throw PoleError("gamma has a pole at s = " + std::to_string(s.real()));
    }
}

// log Gamma(s) for Re s >= 1/2.
C log_gamma_right(C s)
{
    const C z = s - 1.0;
    C sum = kLanczosCoeffs[0];
    for (std::size_t k = 1; k < kLanczosCoeffs.size(); ++k) {
        sum += kLanczosCoeffs[k] / (z + static_cast<double>(k));
    }
    const C t = z + kLanczosG + 0.5;
    return 0.5 * std::log(2.0 * std::numbers::pi) + (z + 0.5) * std::log(t) - t + std::log(sum);
}

} // namespace

C log_gamma_complex(C s)
{
    check_pole(s);
    if (s.real() < 0.5) {
        return std::log(std::numbers::pi) - std::log(sin_pi(s)) - log_gamma_right(1.0 - s);
    }
    return log_gamma_right(s);
}

C gamma_complex(C s)
{
    check_pole(s);
    C value;
    if (s.real() < 0.5) {
        value = std::numbers::pi / (sin_pi(s) * gamma_complex(1.0 - s));
    } else {
        value = std::exp(log_gamma_right(s));
    }
    if (s.imag() == 0.0) {
        value.imag(0.0);
    }
    if (!is_finite(value)) {
        throw DomainError("gamma overflows binary64 at this argument");
    }
    return value;
}

} // namespace polylog::special
