#include "polylog/cli.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <string>

namespace polylog::cli {

namespace {

double parse_part(std::string_view text, std::string_view whole, bool imaginary)
{
    if (imaginary && (text.empty() || text == "+" || text == "-")) {
        return text == "-" ? -1.0 : 1.0;
    }
    if (!text.empty() && text.front() == '+') {
        text.remove_prefix(1);
    }
    double value = 0.0;
    const char* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (text.empty() || ec != std::errc() || ptr != end || !std::isfinite(value)) {
        throw UsageError("invalid complex literal '" + std::string(whole) + "' (expected a, bi or a+bi)");
    }
    return value;
}

std::string shortest(double x)
{
    char buffer[32];
    const auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof buffer, x);
    return std::string(buffer, ptr);
}

} // namespace

Complex parse_complex(std::string_view text)
{
    if (text.empty()) {
        throw UsageError("empty complex literal");
    }
    if (text.back() != 'i') {
        return {parse_part(text, text, false), 0.0};
    }
    const std::string_view body = text.substr(0, text.size() - 1);
    // Split at the last sign that does not belong to an exponent.
    std::size_t split = std::string_view::npos;
    for (std::size_t k = body.size(); k-- > 1;) {
        if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
            split = k;
            break;
        }
    }
    if (split == std::string_view::npos) {
        return {0.0, parse_part(body, text, true)};
    }
    return {parse_part(body.substr(0, split), text, false), parse_part(body.substr(split), text, true)};
}

std::string format_complex(Complex value)
{
    if (value.imag() == 0.0 && !std::signbit(value.imag())) {
        return shortest(value.real());
    }
    std::string out = shortest(value.real());
    if (!std::signbit(value.imag())) {
        out += '+';
    }
    return out + shortest(value.imag()) + 'i';
}

std::string format_complex_fixed(Complex value, int decimals)
{
    char buffer[96];
    if (value.imag() == 0.0) {
        std::snprintf(buffer, sizeof buffer, "%.*f", decimals, value.real());
    } else {
        std::snprintf(buffer, sizeof buffer, "%.*f%+.*fi", decimals, value.real(), decimals, value.imag());
    }
    return buffer;
}

} // namespace polylog::cli
