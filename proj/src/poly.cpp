#include "evolkit/poly.hpp"

#include <algorithm>

#include "evolkit/errors.hpp"

namespace evolkit {

GaussianRational Poly::eval(const GaussianRational& x) const {
    GaussianRational acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Poly Poly::operator+(const Poly& o) const {
    std::vector<GaussianRational> c(std::max(coeffs_.size(), o.coeffs_.size()));
    for (std::size_t k = 0; k < c.size(); ++k) c[k] = coeff(k) + o.coeff(k);
    return Poly(std::move(c));
}

Poly Poly::operator-(const Poly& o) const {
    std::vector<GaussianRational> c(std::max(coeffs_.size(), o.coeffs_.size()));
    for (std::size_t k = 0; k < c.size(); ++k) c[k] = coeff(k) - o.coeff(k);
    return Poly(std::move(c));
}

Poly Poly::operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return {};
    std::vector<GaussianRational> c(coeffs_.size() + o.coeffs_.size() - 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
            c[i + j] += coeffs_[i] * o.coeffs_[j];
    }
    return Poly(std::move(c));
}

Poly Poly::scaled(const GaussianRational& s) const {
    std::vector<GaussianRational> c(coeffs_.size());
    for (std::size_t k = 0; k < c.size(); ++k) c[k] = coeffs_[k] * s;
    return Poly(std::move(c));
}

std::pair<Poly, Poly> Poly::divmod_monic(const Poly& divisor) const {
    if (divisor.is_zero() || divisor.leading() != GaussianRational(1))
        throw InvalidInput("divmod_monic: divisor must be monic");
    std::vector<GaussianRational> rem = coeffs_;
    const int dd = divisor.degree();
    if (degree() < dd) return {Poly(), *this};
    std::vector<GaussianRational> quot(coeffs_.size() - dd);
    for (int k = static_cast<int>(rem.size()) - 1; k >= dd; --k) {
        GaussianRational f = rem[k];
        if (f.is_zero()) continue;
        quot[k - dd] = f;
        for (int j = 0; j <= dd; ++j) rem[k - dd + j] -= f * divisor.coeff(j);
    }
    return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly Poly::deflate(const GaussianRational& r) const {
    Poly divisor({-r, GaussianRational(1)});
    auto [q, rem] = divmod_monic(divisor);
    if (!rem.is_zero()) throw InvalidInput("deflate: value is not a root");
    return q;
}

std::pair<Poly, Poly> Poly::even_odd_parts() const {
    std::vector<GaussianRational> even, odd;
    for (std::size_t k = 0; k < coeffs_.size(); ++k)
        (k % 2 == 0 ? even : odd).push_back(coeffs_[k]);
    return {Poly(std::move(even)), Poly(std::move(odd))};
}

std::string Poly::str() const {
    if (is_zero()) return "0";
    std::string s;
    for (int k = degree(); k >= 0; --k) {
        const GaussianRational& c = coeff(static_cast<std::size_t>(k));
        if (c.is_zero()) continue;
        if (!s.empty()) s += " + ";
        if (k == 0) {
            s += c.str();
        } else {
            if (c != GaussianRational(1)) s += "(" + c.str() + ")*";
            s += "x";
            if (k > 1) s += "^" + std::to_string(k);
        }
    }
    return s;
}

} // namespace evolkit
