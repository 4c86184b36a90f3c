#include "evolkit/multipoly.hpp"

#include <algorithm>

#include "evolkit/errors.hpp"

namespace evolkit {

MultiPoly MultiPoly::constant(std::size_t nvars, const GaussianRational& c) {
    MultiPoly p(nvars);
    p.add_term(Exponents(nvars, 0), c);
    return p;
}

MultiPoly MultiPoly::linear_form(const std::vector<GaussianRational>& coeffs) {
    MultiPoly p(coeffs.size());
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        if (coeffs[k].is_zero()) continue;
        Exponents e(coeffs.size(), 0);
        e[k] = 1;
        p.add_term(e, coeffs[k]);
    }
    return p;
}

void MultiPoly::add_term(const Exponents& e, const GaussianRational& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    if (nvars_ != o.nvars_) throw InvalidInput("multipoly sum: variable count mismatch");
    MultiPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    if (nvars_ != o.nvars_) throw InvalidInput("multipoly product: variable count mismatch");
    MultiPoly r(nvars_);
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : o.terms_) {
            Exponents e(nvars_);
            for (std::size_t k = 0; k < nvars_; ++k) e[k] = ea[k] + eb[k];
            r.add_term(e, ca * cb);
        }
    return r;
}

MultiPoly MultiPoly::scaled(const GaussianRational& c) const {
    MultiPoly r(nvars_);
    if (c.is_zero()) return r;
    for (const auto& [e, v] : terms_) r.add_term(e, v * c);
    return r;
}

GaussianRational MultiPoly::eval(const std::vector<GaussianRational>& point) const {
    if (point.size() != nvars_) throw InvalidInput("multipoly eval: point size mismatch");
    GaussianRational acc;
    for (const auto& [e, c] : terms_) {
        GaussianRational term = c;
        for (std::size_t k = 0; k < nvars_; ++k)
            for (std::uint32_t t = 0; t < e[k]; ++t) term *= point[k];
        acc += term;
    }
    return acc;
}

MultiPoly MultiPoly::substituted(std::size_t var, const GaussianRational& value) const {
    MultiPoly r(nvars_);
    for (const auto& [e, c] : terms_) {
        GaussianRational f = c;
        for (std::uint32_t t = 0; t < e[var]; ++t) f *= value;
        if (f.is_zero()) continue;
        Exponents reduced = e;
        reduced[var] = 0;
        r.add_term(reduced, f);
    }
    return r;
}

std::uint32_t MultiPoly::degree_in(std::size_t var) const {
    std::uint32_t d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
    return d;
}

} // namespace evolkit
