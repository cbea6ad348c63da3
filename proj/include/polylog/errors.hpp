#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace polylog {

using Complex = std::complex<double>;

// Every failure the library reports derives from Error. Non-convergence of a
// quadrature is not an error: it is carried in the result's `converged` flag.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Argument outside the domain of the requested function or route.
class DomainError : public Error {
public:
    using Error::Error;
};

// Argument sits on a pole (gamma at non-positive integers, zeta at s = 1).
class PoleError : public DomainError {
public:
    using DomainError::DomainError;
};

// Argument is on a point excluded by a closed-form relation (csc/sec blow-up).
class ExclusionError : public DomainError {
public:
    using DomainError::DomainError;
};

// A configured work cap (table size, number of series terms) would be exceeded.
class ResourceError : public Error {
public:
    using Error::Error;
};

// The dispatcher has no route for the requested (s, z, representation).
class UnsupportedError : public Error {
public:
    using Error::Error;
};

[[nodiscard]] inline bool is_finite(Complex v) noexcept
{
    return std::isfinite(v.real()) && std::isfinite(v.imag());
}

} // namespace polylog
