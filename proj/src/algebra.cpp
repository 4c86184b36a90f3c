#include "evolkit/algebra.hpp"

#include <algorithm>

#include "evolkit/errors.hpp"
#include "evolkit/linalg.hpp"

namespace evolkit {

Element Element::from_coeffs(Vector c) {
    Element e;
    e.coeffs = std::move(c);
    for (std::size_t i = 0; i < e.coeffs.size(); ++i)
        if (!e.coeffs[i].is_zero()) e.support.push_back(static_cast<int>(i));
    return e;
}

Element Element::basis_vector(int n, int i) {
    Vector c(static_cast<std::size_t>(n));
    c[static_cast<std::size_t>(i)] = GaussianRational(1);
    return from_coeffs(std::move(c));
}

Element Element::operator+(const Element& o) const {
    if (dim() != o.dim()) throw InvalidInput("element sum: dimension mismatch");
    Vector c(coeffs.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = coeffs[i] + o.coeffs[i];
    return from_coeffs(std::move(c));
}

Element Element::operator-(const Element& o) const {
    if (dim() != o.dim()) throw InvalidInput("element difference: dimension mismatch");
    Vector c(coeffs.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = coeffs[i] - o.coeffs[i];
    return from_coeffs(std::move(c));
}

Element Element::scaled(const GaussianRational& s) const {
    Vector c(coeffs.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = coeffs[i] * s;
    return from_coeffs(std::move(c));
}

EvolutionAlgebra::EvolutionAlgebra(int n, std::vector<Column> columns,
                                   std::optional<std::vector<std::string>> labels)
    : n_(n), columns_(std::move(columns)), labels_(std::move(labels)) {
    if (n_ < 1) throw InvalidInput("algebra dimension must be at least 1");
    if (columns_.size() != static_cast<std::size_t>(n_))
        throw InvalidInput("column count does not match dimension");
    for (const Column& col : columns_) {
        int prev = -1;
        for (const ColumnEntry& entry : col) {
            if (entry.row < 0 || entry.row >= n_) throw InvalidInput("row index out of range");
            if (entry.row <= prev) throw InvalidInput("column entries must be sorted by row");
            if (entry.value.is_zero()) throw InvalidInput("stored structure constants must be nonzero");
            prev = entry.row;
        }
    }
    if (labels_ && labels_->size() != static_cast<std::size_t>(n_))
        throw InvalidInput("label count does not match dimension");
}

const EvolutionAlgebra::Column& EvolutionAlgebra::column(int i) const {
    if (i < 0 || i >= n_) throw InvalidInput("column index out of range");
    return columns_[static_cast<std::size_t>(i)];
}

GaussianRational EvolutionAlgebra::entry(int k, int i) const {
    const Column& col = column(i);
    auto it = std::lower_bound(col.begin(), col.end(), k,
                               [](const ColumnEntry& e, int row) { return e.row < row; });
    if (it != col.end() && it->row == k) return it->value;
    return {};
}

Element EvolutionAlgebra::basis_square(int i) const {
    Vector c(static_cast<std::size_t>(n_));
    for (const ColumnEntry& entry : column(i)) c[static_cast<std::size_t>(entry.row)] = entry.value;
    return Element::from_coeffs(std::move(c));
}

DenseMatrix EvolutionAlgebra::structure_matrix() const {
    DenseMatrix m(static_cast<std::size_t>(n_), static_cast<std::size_t>(n_));
    for (int i = 0; i < n_; ++i)
        for (const ColumnEntry& entry : columns_[static_cast<std::size_t>(i)])
            m.at(static_cast<std::size_t>(entry.row), static_cast<std::size_t>(i)) = entry.value;
    return m;
}

std::vector<int> EvolutionAlgebra::row_support(int k) const {
    std::vector<int> out;
    for (int i = 0; i < n_; ++i)
        if (!entry(k, i).is_zero()) out.push_back(i);
    return out;
}

Element product(const EvolutionAlgebra& alg, const Element& a, const Element& b) {
    if (a.dim() != alg.dim() || b.dim() != alg.dim())
        throw InvalidInput("product: element dimension mismatch");
    Vector c(static_cast<std::size_t>(alg.dim()));
    for (int i : a.support) {
        const GaussianRational& beta = b.coeffs[static_cast<std::size_t>(i)];
        if (beta.is_zero()) continue;
        GaussianRational f = a.coeffs[static_cast<std::size_t>(i)] * beta;
        for (const auto& entry : alg.column(i)) c[static_cast<std::size_t>(entry.row)] += f * entry.value;
    }
    return Element::from_coeffs(std::move(c));
}

DenseMatrix left_mul_matrix(const EvolutionAlgebra& alg, const Element& a) {
    if (a.dim() != alg.dim()) throw InvalidInput("left_mul_matrix: element dimension mismatch");
    const std::size_t n = static_cast<std::size_t>(alg.dim());
    DenseMatrix m(n, n);
    for (int i : a.support) {
        const GaussianRational& alpha = a.coeffs[static_cast<std::size_t>(i)];
        for (const auto& entry : alg.column(i))
            m.at(static_cast<std::size_t>(entry.row), static_cast<std::size_t>(i)) = entry.value * alpha;
    }
    return m;
}

Element element_power(const EvolutionAlgebra& alg, const Element& a, unsigned k) {
    if (k == 0) throw InvalidInput("element_power: exponent must be at least 1");
    Element acc = a;
    for (unsigned t = 1; t < k; ++t) acc = product(alg, a, acc);
    return acc;
}

std::optional<Element> unit_of(const EvolutionAlgebra& alg) {
    const int n = alg.dim();
    Vector c(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        const auto& col = alg.column(i);
        if (col.size() != 1 || col[0].row != i) return std::nullopt;
        c[static_cast<std::size_t>(i)] = col[0].value.inverse();
    }
    return Element::from_coeffs(std::move(c));
}

std::vector<int> annihilator(const EvolutionAlgebra& alg) {
    std::vector<int> out;
    for (int i = 0; i < alg.dim(); ++i)
        if (alg.column(i).empty()) out.push_back(i);
    return out;
}

bool is_nonzero_trivial(const EvolutionAlgebra& alg) {
    for (int i = 0; i < alg.dim(); ++i) {
        const auto& col = alg.column(i);
        if (col.size() != 1 || col[0].row != i) return false;
    }
    return true;
}

bool verify_natural_basis(const EvolutionAlgebra& alg, const BasisCandidate& c) {
    const int n = alg.dim();
    if (c.vectors.size() != static_cast<std::size_t>(n)) return false;
    std::vector<Vector> rows;
    rows.reserve(c.vectors.size());
    for (const Element& v : c.vectors) {
        if (v.dim() != n) throw InvalidInput("basis candidate: dimension mismatch");
        rows.push_back(v.coeffs);
    }
    if (span_dimension(rows) != static_cast<std::size_t>(n)) return false;
    for (std::size_t i = 0; i < c.vectors.size(); ++i)
        for (std::size_t j = i + 1; j < c.vectors.size(); ++j)
            if (!product(alg, c.vectors[i], c.vectors[j]).is_zero()) return false;
    return true;
}

bool bases_related(const BasisCandidate& c1, const BasisCandidate& c2) {
    if (c1.vectors.size() != c2.vectors.size())
        throw InvalidInput("bases_related: size mismatch");
    if (c1.vectors.empty()) return true;
    const int n = c1.vectors[0].dim();
    auto rows_of = [n](const BasisCandidate& c) {
        std::vector<Vector> rows;
        for (const Element& v : c.vectors) {
            if (v.dim() != n) throw InvalidInput("bases_related: dimension mismatch");
            rows.push_back(v.coeffs);
        }
        return rows;
    };
    if (span_dimension(rows_of(c1)) != c1.vectors.size() ||
        span_dimension(rows_of(c2)) != c2.vectors.size())
        throw InvalidInput("bases_related: candidates must have full rank");

    // Related bases pair vectors up to nonzero scale, bijectively.
    std::vector<bool> used(c1.vectors.size(), false);
    for (const Element& u : c2.vectors) {
        bool matched = false;
        for (std::size_t j = 0; j < c1.vectors.size() && !matched; ++j) {
            if (used[j]) continue;
            const Element& v = c1.vectors[j];
            if (u.support != v.support) continue;
            if (u.support.empty()) continue;
            const std::size_t lead = static_cast<std::size_t>(u.support.front());
            GaussianRational k = u.coeffs[lead] / v.coeffs[lead];
            if (u == v.scaled(k)) {
                used[j] = true;
                matched = true;
            }
        }
        if (!matched) return false;
    }
    return true;
}

bool unitization_is_evolution(const EvolutionAlgebra& alg) { return is_nonzero_trivial(alg); }

} // namespace evolkit
