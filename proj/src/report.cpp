#include "evolkit/report.hpp"

#include <complex>
#include <cstdio>
#include <sstream>

namespace evolkit {

using nlohmann::json;

std::string format_numeric(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::string format_complex(const std::complex<double>& z) {
    std::string s = format_numeric(z.real());
    s += z.imag() < 0 ? "-" : "+";
    s += format_numeric(std::abs(z.imag()));
    s += "i";
    return s;
}

namespace {

bool is_scalar_array(const json& a) {
    for (const auto& v : a)
        if (v.is_object() || v.is_array()) return false;
    return true;
}

std::string scalar_text(const json& v) {
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
}

void render_text(const json& v, std::ostream& os, int indent) {
    const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
    if (v.is_object()) {
        if (v.empty()) {
            os << pad << "(empty)\n";
            return;
        }
        for (const auto& [key, value] : v.items()) {
            if (value.is_object() || (value.is_array() && !is_scalar_array(value))) {
                os << pad << key << ":\n";
                render_text(value, os, indent + 1);
            } else if (value.is_array()) {
                os << pad << key << ": [";
                for (std::size_t k = 0; k < value.size(); ++k)
                    os << (k ? ", " : "") << scalar_text(value[k]);
                os << "]\n";
            } else {
                os << pad << key << ": " << scalar_text(value) << "\n";
            }
        }
    } else if (v.is_array()) {
        for (const auto& item : v) {
            os << pad << "-\n";
            render_text(item, os, indent + 1);
        }
    } else {
        os << pad << scalar_text(v) << "\n";
    }
}

} // namespace

std::string emit_report(const Report& r, ReportFormat format) {
    if (format == ReportFormat::json) {
        json doc;
        doc["command"] = r.command;
        doc["input_digest"] = r.input_digest;
        doc["results"] = r.results;
        doc["warnings"] = r.warnings;
        return doc.dump(2) + "\n";
    }
    std::ostringstream os;
    os << "command: " << r.command << "\n";
    os << "input_digest: " << r.input_digest << "\n";
    os << "results:\n";
    render_text(r.results, os, 1);
    if (r.warnings.empty()) {
        os << "warnings: []\n";
    } else {
        os << "warnings:\n";
        for (const auto& w : r.warnings) os << "  - " << w << "\n";
    }
    return os.str();
}

} // namespace evolkit
