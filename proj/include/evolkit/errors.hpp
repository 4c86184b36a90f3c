#ifndef EVOLKIT_ERRORS_HPP
#define EVOLKIT_ERRORS_HPP

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace evolkit {

/// Raised on malformed input: bad dimensions, out-of-range indexes,
/// unparsable documents. The CLI maps it to exit code 1.
class InvalidInput : public std::runtime_error {
public:
    explicit InvalidInput(const std::string& msg) : std::runtime_error(msg) {}
};

/// Raised when an iterative numeric routine fails to converge.
/// Carries the best iterate so callers can still report it. Exit code 2.
class NumericFailure : public std::runtime_error {
public:
    NumericFailure(const std::string& msg, std::vector<std::complex<double>> best)
        : std::runtime_error(msg), best_iterate(std::move(best)) {}

    std::vector<std::complex<double>> best_iterate;
};

} // namespace evolkit

#endif
