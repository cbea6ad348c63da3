#pragma once

#include <complex>
#include <cstdint>
#include <utility>
#include <vector>

namespace polylog::special {

// S_s(x) = sum_k sin(kx)/k^s and C_s(x) = sum_k cos(kx)/k^s.
enum class ClausenChannel { Sin, Cos };

enum class ClausenMethod {
    Bernoulli,    // closed form through B_n(x / 2pi)
    DirectSum,    // truncated defining series with a rigorous tail bound
    LogExpansion, // expansion of Li_s(e^{ix}) in powers of ix
    Hurwitz,      // difference/sum of two Hurwitz zeta values
};

struct ClausenValue {
    std::complex<double> sin_part;
    std::complex<double> cos_part;
    std::complex<double> s;
    double x = 0.0; // radians
    ClausenMethod sin_method = ClausenMethod::DirectSum;
    ClausenMethod cos_method = ClausenMethod::DirectSum;
};

struct ClausenOptions {
    double tol = 1e-12;                         // absolute, per channel
    std::uint64_t max_direct_terms = 10'000'000; // beyond this the log expansion is used
    bool allow_closed_form = true;               // Bernoulli forms for S_(2n-1), C_(2n)
    bool allow_expansion = true;                 // otherwise ResourceError past the term cap
};

/// Clausen sums from their defining series, Re s > 1.
///
/// Bernoulli-expressible integer orders delegate to clausen_bernoulli. Other
/// cases sum the series directly when the tail bound
///   min( K^(1-σ)/(σ-1), (1 + |s|/σ) K^(-σ) / |sin(x/2)| ) <= tol/2,   σ = Re s,
/// needs at most `max_direct_terms` terms, and switch to ClausenExpansion
/// otherwise (orders near 1, arguments near 0 mod 2π).
/// Throws DomainError for Re s <= 1.
[[nodiscard]] ClausenValue clausen_direct(std::complex<double> s, double x,
                                          const ClausenOptions& options = {});

/// Number of direct-series terms the tail bound requires (saturates at 2^62).
[[nodiscard]] std::uint64_t clausen_direct_terms(std::complex<double> s, double x, double tol);

/// Closed forms
///   S_(2n-1)(x) = (-1)^n     (2π)^(2n-1) / (2 (2n-1)!) B_(2n-1)(x/2π)
///   C_(2n)(x)   = (-1)^(n-1) (2π)^(2n)   / (2 (2n)!)   B_(2n)(x/2π)
/// for x in [0, 2π] (open interval for S_1). `order` is the Clausen order
/// itself: odd for Sin, even and >= 2 for Cos.
[[nodiscard]] double clausen_bernoulli(ClausenChannel channel, unsigned order, double x);

/// Same closed form with the argument given in turns, x = 2π t, t in [0, 1].
[[nodiscard]] double clausen_bernoulli_turns(ClausenChannel channel, unsigned order, double t);

/// Clausen sums at x = 2π t through the Hurwitz zeta function:
///   S_s = (2π)^s / (4 Γ(s)) csc(πs/2) [ζ(1-s, t) - ζ(1-s, 1-t)]
///   C_s = (2π)^s / (4 Γ(s)) sec(πs/2) [ζ(1-s, t) + ζ(1-s, 1-t)]
/// Requires Re s > 1 and t in [0, 1]. Throws ExclusionError within 1e-8 of an
/// even integer (Sin) or odd integer (Cos).
[[nodiscard]] std::complex<double> clausen_via_hurwitz(ClausenChannel channel,
                                                       std::complex<double> s, double t);
[[nodiscard]] ClausenValue clausen_via_hurwitz(std::complex<double> s, double t);

/// Cl_n(x): C_n(x) for odd n, S_n(x) for even n. Cl_1(x) = -log|2 sin(x/2)|,
/// which throws DomainError at multiples of 2π.
[[nodiscard]] double generalized_clausen(unsigned n, double x);

/// Expansion of E(x) = Li_s(e^{ix}) about x = 0, valid for |x| <= π:
///   s not a positive integer:  Γ(1-s)(-ix)^(s-1) + Σ_k ζ(s-k) (ix)^k / k!
///   s = n:  (ix)^(n-1)/(n-1)! [H_(n-1) - log(-ix)] + Σ_(k != n-1) ζ(n-k) (ix)^k / k!
/// The coefficients depend on s only and are computed once; each evaluation
/// costs a few dozen complex multiply-adds. Arguments are reduced mod 2π.
class ClausenExpansion {
public:
    /// Requires Re s > 1.
    explicit ClausenExpansion(std::complex<double> s);

    [[nodiscard]] std::complex<double> order() const noexcept { return s_; }

    /// (S_s(x), C_s(x)) for x in radians.
    [[nodiscard]] std::pair<std::complex<double>, std::complex<double>> evaluate(double x) const;

    /// (S_s(2πt), C_s(2πt)); reducing t instead of x keeps t near 1 accurate.
    [[nodiscard]] std::pair<std::complex<double>, std::complex<double>> evaluate_turns(double t) const;

private:
    std::complex<double> singular(double x) const; // singular part of E(x), x != 0

    std::complex<double> s_;
    bool integer_order_ = false;
    unsigned integer_value_ = 0;
    std::complex<double> singular_coeff_; // Γ(1-s), or 1/(n-1)! for integer order
    double harmonic_ = 0.0;                // H_(n-1) for integer order
    std::vector<std::complex<double>> coeffs_; // ζ(s-k)/k!, zero at k = n-1 for integer order
};

} // namespace polylog::special
