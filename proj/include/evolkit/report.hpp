#ifndef EVOLKIT_REPORT_HPP
#define EVOLKIT_REPORT_HPP

#include <complex>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace evolkit {

enum class ReportFormat { json, text };

/// One command's machine- and human-readable output. Exact scalars are
/// carried as "p/q" strings and numeric values as 12-significant-digit
/// strings, so both renderings show identical values.
struct Report {
    std::string command;
    std::string input_digest;
    nlohmann::json results = nlohmann::json::object();
    std::vector<std::string> warnings;
};

std::string emit_report(const Report& r, ReportFormat format);

/// %.12g formatting used for every numeric leaf in reports.
std::string format_numeric(double v);

/// "a+bi" with %.12g parts.
std::string format_complex(const std::complex<double>& z);

} // namespace evolkit

#endif
