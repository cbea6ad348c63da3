#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <complex>
#include <vector>

namespace polylog::special {

using Rational = boost::multiprecision::cpp_rational;

// Largest Bernoulli index any table will hold. |B_256| is ~8e302, so every
// entry still projects to a finite binary64 value.
inline constexpr unsigned kBernoulliCap = 256;

/// Exact Bernoulli numbers B_0..B_max in the t/(e^t - 1) convention
/// (B_1 = -1/2), with binary64 and extended projections of each entry.
///
/// Entries come from the exact recurrence sum_{j=0}^{n} C(n+1, j) B_j = 0.
/// The table is immutable after construction and may be shared freely.
class BernoulliTable {
public:
    /// Throws ResourceError when max_index exceeds `cap`.
    explicit BernoulliTable(unsigned max_index, unsigned cap = kBernoulliCap);

    [[nodiscard]] unsigned max_index() const noexcept { return max_index_; }
    [[nodiscard]] const Rational& exact(unsigned n) const;
    [[nodiscard]] double value(unsigned n) const;
    [[nodiscard]] long double extended(unsigned n) const;

private:
    unsigned max_index_;
    std::vector<Rational> exact_;
    std::vector<long double> extended_;
};

[[nodiscard]] BernoulliTable bernoulli_numbers(unsigned n_max, unsigned cap = kBernoulliCap);

/// Process-wide table covering at least `min_index` (built once, thread-safe).
[[nodiscard]] const BernoulliTable& shared_bernoulli_table(unsigned min_index);

/// B_n as binary64.
[[nodiscard]] double bernoulli_number(unsigned n);

/// Bernoulli polynomial B_n(x) = sum_k C(n,k) B_k x^(n-k).
///
/// Evaluated as a polynomial in x - 1/2, so odd orders are exactly odd about
/// 1/2. The coefficients are rounded once from their exact rational values to
/// extended precision and combined by Horner's rule in extended precision,
/// so the binary64 result is within a few ulp even where the expansion
/// cancels (e.g. at x = 1/2 for large n).
[[nodiscard]] double bernoulli_poly(unsigned n, double x);
[[nodiscard]] std::complex<double> bernoulli_poly(unsigned n, std::complex<double> x);

/// Exact binomial coefficient C(n, k).
[[nodiscard]] boost::multiprecision::cpp_int binomial(unsigned n, unsigned k);

/// Round an exact rational to extended precision.
[[nodiscard]] long double to_extended(const Rational& r);

} // namespace polylog::special
