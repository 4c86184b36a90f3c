#include "evolkit/io.hpp"

#include <cctype>
#include <cstdint>

#include <nlohmann/json.hpp>

#include "evolkit/errors.hpp"

namespace evolkit {

using nlohmann::json;

namespace {

bool is_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

std::string_view trimmed(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

} // namespace

Rational parse_rational(std::string_view text) {
    std::string_view s = trimmed(text);
    if (s.empty()) throw InvalidInput("empty rational");
    bool negative = false;
    if (s.front() == '+' || s.front() == '-') {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    std::string_view num = s;
    std::string_view den = "1";
    if (auto pos = s.find('/'); pos != std::string_view::npos) {
        num = s.substr(0, pos);
        den = s.substr(pos + 1);
    }
    if (!is_digits(num) || !is_digits(den))
        throw InvalidInput("malformed rational '" + std::string(text) + "'");
    mpz_class n(std::string(num), 10);
    mpz_class d(std::string(den), 10);
    if (d == 0) throw InvalidInput("zero denominator in '" + std::string(text) + "'");
    if (negative) n = -n;
    return make_rational(n, d);
}

GaussianRational parse_scalar(std::string_view text) {
    std::string_view s = trimmed(text);
    if (s.empty()) throw InvalidInput("empty scalar");
    if (s.back() != 'i') return GaussianRational(parse_rational(s));
    std::string_view body = s.substr(0, s.size() - 1);
    // Split at the last sign that is not leading: digits carry no inner signs.
    std::size_t split = std::string_view::npos;
    for (std::size_t k = body.size(); k-- > 1;)
        if (body[k] == '+' || body[k] == '-') {
            split = k;
            break;
        }
    auto imag_part = [](std::string_view im) -> Rational {
        std::string_view t = trimmed(im);
        if (t.empty() || t == "+") return Rational(1);
        if (t == "-") return Rational(-1);
        return parse_rational(t);
    };
    if (split == std::string_view::npos) return {Rational(0), imag_part(body)};
    return {parse_rational(body.substr(0, split)), imag_part(body.substr(split))};
}

namespace {

GaussianRational parse_cell(const json& cell, const std::string& path) {
    try {
        if (cell.is_string()) return parse_scalar(cell.get<std::string>());
        if (cell.is_number_integer()) return GaussianRational(Rational(cell.get<long>()));
        if (cell.is_object()) {
            Rational re(0), im(0);
            for (const auto& [key, value] : cell.items()) {
                if (key != "re" && key != "im") throw InvalidInput("unknown key '" + key + "'");
                Rational parsed;
                if (value.is_string())
                    parsed = parse_rational(value.get<std::string>());
                else if (value.is_number_integer())
                    parsed = Rational(value.get<long>());
                else
                    throw InvalidInput("expected exact rational");
                (key == "re" ? re : im) = parsed;
            }
            return {re, im};
        }
    } catch (const InvalidInput& e) {
        throw InvalidInput(path + ": " + e.what());
    }
    throw InvalidInput(path + ": expected rational string, integer, or {re, im} object");
}

} // namespace

AlgebraDocument parse_algebra_document(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw InvalidInput(std::string("document is not valid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw InvalidInput("document root must be an object");

    AlgebraDocument out;
    if (!doc.contains("dimension") || !doc["dimension"].is_number_integer())
        throw InvalidInput("dimension: required integer field");
    out.dimension = doc["dimension"].get<int>();
    if (out.dimension < 1) throw InvalidInput("dimension: must be at least 1");

    if (!doc.contains("matrix") || !doc["matrix"].is_array())
        throw InvalidInput("matrix: required array field");
    const json& rows = doc["matrix"];
    if (rows.size() != static_cast<std::size_t>(out.dimension))
        throw InvalidInput("matrix: expected " + std::to_string(out.dimension) + " rows, got " +
                           std::to_string(rows.size()));
    for (std::size_t k = 0; k < rows.size(); ++k) {
        if (!rows[k].is_array() || rows[k].size() != static_cast<std::size_t>(out.dimension))
            throw InvalidInput("matrix[" + std::to_string(k) + "]: expected " +
                               std::to_string(out.dimension) + " entries");
        std::vector<GaussianRational> row;
        row.reserve(rows[k].size());
        for (std::size_t i = 0; i < rows[k].size(); ++i)
            row.push_back(parse_cell(rows[k][i],
                                     "matrix[" + std::to_string(k) + "][" + std::to_string(i) + "]"));
        out.matrix.push_back(std::move(row));
    }

    if (doc.contains("labels")) {
        if (!doc["labels"].is_array()) throw InvalidInput("labels: must be an array of strings");
        std::vector<std::string> labels;
        for (const auto& l : doc["labels"]) {
            if (!l.is_string()) throw InvalidInput("labels: must be an array of strings");
            labels.push_back(l.get<std::string>());
        }
        if (labels.size() != static_cast<std::size_t>(out.dimension))
            throw InvalidInput("labels: length must equal dimension");
        out.labels = std::move(labels);
    }
    if (doc.contains("metadata")) {
        if (!doc["metadata"].is_object()) throw InvalidInput("metadata: must be an object");
        for (const auto& [key, value] : doc["metadata"].items()) {
            if (!value.is_string()) throw InvalidInput("metadata." + key + ": must be a string");
            out.metadata[key] = value.get<std::string>();
        }
    }
    for (const auto& [key, value] : doc.items())
        if (key != "dimension" && key != "matrix" && key != "labels" && key != "metadata")
            throw InvalidInput("unknown top-level field '" + key + "'");
    return out;
}

EvolutionAlgebra to_algebra(const AlgebraDocument& doc) {
    std::vector<EvolutionAlgebra::Column> columns(static_cast<std::size_t>(doc.dimension));
    for (int i = 0; i < doc.dimension; ++i)
        for (int k = 0; k < doc.dimension; ++k) {
            const GaussianRational& v = doc.matrix[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)];
            if (!v.is_zero()) columns[static_cast<std::size_t>(i)].push_back({k, v});
        }
    return {doc.dimension, std::move(columns), doc.labels};
}

EvolutionAlgebra parse_algebra(const std::string& text) {
    return to_algebra(parse_algebra_document(text));
}

std::string serialize_algebra_document(const EvolutionAlgebra& alg) {
    json doc;
    doc["dimension"] = alg.dim();
    json rows = json::array();
    for (int k = 0; k < alg.dim(); ++k) {
        json row = json::array();
        for (int i = 0; i < alg.dim(); ++i) {
            GaussianRational v = alg.entry(k, i);
            if (v.is_real())
                row.push_back(rational_to_string(v.real()));
            else
                row.push_back(json{{"im", rational_to_string(v.imag())},
                                   {"re", rational_to_string(v.real())}});
        }
        rows.push_back(std::move(row));
    }
    doc["matrix"] = std::move(rows);
    if (alg.labels()) doc["labels"] = *alg.labels();
    return doc.dump();
}

Element parse_element(const std::string& text, int n) {
    std::vector<std::string> parts;
    std::string current;
    for (char c : text) {
        if (c == ',') {
            parts.push_back(current);
            current.clear();
        } else {
            current += c;
        }
    }
    parts.push_back(current);
    if (parts.size() != static_cast<std::size_t>(n))
        throw InvalidInput("element: expected " + std::to_string(n) + " coefficients, got " +
                           std::to_string(parts.size()));
    Vector coeffs;
    coeffs.reserve(parts.size());
    for (const std::string& p : parts) coeffs.push_back(parse_scalar(p));
    return Element::from_coeffs(std::move(coeffs));
}

std::string input_digest(const std::string& canonical_text) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : canonical_text) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

} // namespace evolkit
