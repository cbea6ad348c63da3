#include "polylog/special/bernoulli.hpp"

#include "polylog/errors.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <array>
#include <string>

namespace polylog::special {

namespace {

using boost::multiprecision::cpp_int;

void check_cap(unsigned n, unsigned cap)
{
    if (n > cap) {
        throw ResourceError("Bernoulli index " + std::to_string(n) + " exceeds the table cap of "
                            + std::to_string(cap));
    }
}

// Small polynomial degrees are hit on every quadrature node, so their
// coefficient vectors are built once. Larger degrees are rebuilt per call.
constexpr unsigned kCachedDegrees = 64;

std::vector<long double> poly_coefficients(unsigned n)
{
    // B_n(x) = sum_k C(n, k) B_k(1/2) (x - 1/2)^(n-k), B_k(1/2) = (2^(1-k) - 1) B_k,
    // which vanishes for odd k; coefficient of u^j is C(n, n-j) B_(n-j)(1/2).
    const BernoulliTable& table = shared_bernoulli_table(n);
    std::vector<long double> coeffs(n + 1, 0.0L);
    for (unsigned k = 0; k <= n; k += 2) {
        const Rational centre = k == 0 ? Rational(1) : (Rational(1, cpp_int(1) << (k - 1)) - 1) * table.exact(k);
        coeffs[n - k] = to_extended(Rational(binomial(n, k)) * centre);
    }
    return coeffs;
}

const std::vector<long double>& cached_coefficients(unsigned n)
{
    static const auto cache = [] {
        std::array<std::vector<long double>, kCachedDegrees + 1> all;
        for (unsigned d = 0; d <= kCachedDegrees; ++d) {
            all[d] = poly_coefficients(d);
        }
        return all;
    }();
    return cache[n];
}

template <class T>
T horner(const std::vector<long double>& coeffs, T x)
{
    T acc = T(coeffs.back());
    for (auto it = coeffs.rbegin() + 1; it != coeffs.rend(); ++it) {
        acc = acc * x + T(*it);
    }
    return acc;
}

} // namespace

cpp_int binomial(unsigned n, unsigned k)
{
    if (k > n) {
        return 0;
    }
    k = std::min(k, n - k);
    cpp_int result = 1;
    for (unsigned i = 1; i <= k; ++i) {
        result *= n - k + i;
        result /= i;
    }
    return result;
}

long double to_extended(const Rational& r)
{
    using Wide = boost::multiprecision::cpp_bin_float_50;
    const Wide num(boost::multiprecision::numerator(r));
    const Wide den(boost::multiprecision::denominator(r));
    return static_cast<long double>(num / den);
}

BernoulliTable::BernoulliTable(unsigned max_index, unsigned cap) : max_index_(max_index)
{
    check_cap(max_index, cap);
    exact_.reserve(max_index + 1);
    exact_.emplace_back(1);
    if (max_index >= 1) {
        exact_.emplace_back(-1, 2);
    }

    // Pascal row C(n+1, .) maintained incrementally.
    std::vector<cpp_int> row{1, 2, 1}; // C(2, .)
    for (unsigned n = 2; n <= max_index; ++n) {
        std::vector<cpp_int> next(row.size() + 1);
        next.front() = 1;
        next.back() = 1;
        for (std::size_t j = 1; j + 1 < next.size(); ++j) {
            next[j] = row[j - 1] + row[j];
        }
        row = std::move(next); // C(n+1, .)

        if (n % 2 == 1) {
            exact_.emplace_back(0);
            continue;
        }
        Rational sum = 0;
        for (unsigned j = 0; j < n; ++j) {
            if (j >= 3 && (j % 2) == 1) {
                continue;
            }
            sum += Rational(row[j]) * exact_[j];
        }
        exact_.push_back(-sum / Rational(n + 1));
    }

    extended_.reserve(exact_.size());
    for (const Rational& b : exact_) {
        extended_.push_back(to_extended(b));
    }
}

const Rational& BernoulliTable::exact(unsigned n) const
{
    check_cap(n, max_index_);
    return exact_[n];
}

double BernoulliTable::value(unsigned n) const
{
    return static_cast<double>(extended(n));
}

long double BernoulliTable::extended(unsigned n) const
{
    check_cap(n, max_index_);
    return extended_[n];
}

BernoulliTable bernoulli_numbers(unsigned n_max, unsigned cap)
{
    return BernoulliTable(n_max, cap);
}

const BernoulliTable& shared_bernoulli_table(unsigned min_index)
{
    check_cap(min_index, kBernoulliCap);
    if (min_index <= kCachedDegrees + 2) {
        static const BernoulliTable small(kCachedDegrees + 2);
        return small;
    }
    static const BernoulliTable full(kBernoulliCap);
    return full;
}

double bernoulli_number(unsigned n)
{
    return shared_bernoulli_table(n).value(n);
}

double bernoulli_poly(unsigned n, double x)
{
    check_cap(n, kBernoulliCap);
    if (n <= kCachedDegrees) {
        return static_cast<double>(horner(cached_coefficients(n), static_cast<long double>(x) - 0.5L));
    }
    return static_cast<double>(horner(poly_coefficients(n), static_cast<long double>(x) - 0.5L));
}

std::complex<double> bernoulli_poly(unsigned n, std::complex<double> x)
{
    check_cap(n, kBernoulliCap);
    using Ext = std::complex<long double>;
    const Ext xe(static_cast<long double>(x.real()) - 0.5L, x.imag());
    const Ext r = n <= kCachedDegrees ? horner(cached_coefficients(n), xe)
                                      : horner(poly_coefficients(n), xe);
    return {static_cast<double>(r.real()), static_cast<double>(r.imag())};
}

} // namespace polylog::special
