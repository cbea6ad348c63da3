#pragma once

#include "polylog/errors.hpp"
#include "polylog/kernels.hpp"

#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace polylog::cli {

enum ExitCode : int {
    kExitOk = 0,
    kExitOracleFailure = 1,
    kExitDomainError = 2,
    kExitNotConverged = 3,
};

class UsageError : public Error {
public:
    using Error::Error;
};

/// Parses `a`, `bi`, `a+bi` or `a-bi` (no spaces; `i` alone means 1i).
/// Throws UsageError on anything else, including non-finite parts.
[[nodiscard]] Complex parse_complex(std::string_view text);

/// Shortest literal that parses back to exactly `value`.
[[nodiscard]] std::string format_complex(Complex value);

/// `value` with `decimals` digits after the point, imaginary part omitted when zero.
[[nodiscard]] std::string format_complex_fixed(Complex value, int decimals = 12);

struct CliHooks {
    KernelFunction kernel = kernel_unchecked; // used by lemma-check only
};

/// Runs one command line (without the program name). Returns the exit code;
/// results go to `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
            const CliHooks& hooks = {});

} // namespace polylog::cli
