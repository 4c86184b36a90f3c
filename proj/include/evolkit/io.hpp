#ifndef EVOLKIT_IO_HPP
#define EVOLKIT_IO_HPP

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "evolkit/algebra.hpp"

namespace evolkit {

/// Parsed form of an algebra file before conversion to the sparse model.
struct AlgebraDocument {
    int dimension = 0;
    std::vector<std::vector<GaussianRational>> matrix; ///< row-major, matrix[k][i]
    std::optional<std::vector<std::string>> labels;
    std::map<std::string, std::string> metadata;
};

/// Scalar grammar: "p", "p/q", "bi", "a+bi", "a-bi" with rational parts;
/// "i" and "-i" for unit imaginary coefficients.
GaussianRational parse_scalar(std::string_view text);

Rational parse_rational(std::string_view text);

/// Accepts {"dimension": n, "matrix": [[cell, ...], ...], "labels": [...],
/// "metadata": {...}} where a cell is a scalar string, an exact integer, or
/// {"re": ..., "im": ...}. matrix[k][i] is the coefficient of e_k in e_i^2.
AlgebraDocument parse_algebra_document(const std::string& text);

EvolutionAlgebra to_algebra(const AlgebraDocument& doc);

EvolutionAlgebra parse_algebra(const std::string& text);

/// Canonical serialization; parsing it back yields the same algebra.
std::string serialize_algebra_document(const EvolutionAlgebra& alg);

/// Comma-separated coefficient list of length n.
Element parse_element(const std::string& text, int n);

/// FNV-1a digest of the canonical serialization, as fixed-width hex.
std::string input_digest(const std::string& canonical_text);

} // namespace evolkit

#endif
