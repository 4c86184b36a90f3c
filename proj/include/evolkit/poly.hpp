#ifndef EVOLKIT_POLY_HPP
#define EVOLKIT_POLY_HPP

#include <string>
#include <utility>
#include <vector>

#include "evolkit/rational.hpp"

namespace evolkit {

/// Univariate polynomial over the Gaussian rationals, coefficients stored
/// lowest degree first. The zero polynomial has an empty coefficient list;
/// otherwise the leading coefficient is nonzero.
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<GaussianRational> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

    static Poly constant(const GaussianRational& c) { return Poly({c}); }
    /// x^n
    static Poly monomial(std::size_t n) {
        std::vector<GaussianRational> c(n + 1);
        c[n] = GaussianRational(1);
        return Poly(std::move(c));
    }

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    const GaussianRational& coeff(std::size_t k) const {
        static const GaussianRational kZero;
        return k < coeffs_.size() ? coeffs_[k] : kZero;
    }
    const std::vector<GaussianRational>& coeffs() const { return coeffs_; }
    const GaussianRational& leading() const { return coeffs_.back(); }

    GaussianRational eval(const GaussianRational& x) const;

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly scaled(const GaussianRational& c) const;

    friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    /// Quotient and remainder by a monic divisor.
    std::pair<Poly, Poly> divmod_monic(const Poly& divisor) const;

    /// Quotient by (x - r); the division must be exact.
    Poly deflate(const GaussianRational& r) const;

    /// Even/odd split p(x) = even(x^2) + x * odd(x^2).
    std::pair<Poly, Poly> even_odd_parts() const;

    std::string str() const;

private:
    void normalize() {
        while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    }

    std::vector<GaussianRational> coeffs_;
};

} // namespace evolkit

#endif
