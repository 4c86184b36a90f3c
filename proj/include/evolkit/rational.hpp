#ifndef EVOLKIT_RATIONAL_HPP
#define EVOLKIT_RATIONAL_HPP

#include <complex>
#include <string>

#include <gmpxx.h>

#include "evolkit/errors.hpp"

namespace evolkit {

using Rational = mpq_class;

/// Canonical rational from numerator/denominator; denominator must be nonzero.
Rational make_rational(const mpz_class& num, const mpz_class& den);

/// "p" when the denominator is 1, otherwise "p/q".
std::string rational_to_string(const Rational& q);

/// Exact square root when the value is a perfect square of a rational,
/// empty otherwise. Requires q >= 0.
bool rational_sqrt(const Rational& q, Rational& out);

/// A complex number with rational real and imaginary parts. All structure
/// constants and element coefficients live here; equality is exact.
class GaussianRational {
public:
    GaussianRational() : re_(0), im_(0) {}
    GaussianRational(long v) : re_(v), im_(0) {} // NOLINT(google-explicit-constructor)
    GaussianRational(Rational re) : re_(std::move(re)), im_(0) {} // NOLINT
    GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

    static GaussianRational imaginary_unit() { return {Rational(0), Rational(1)}; }

    const Rational& real() const { return re_; }
    const Rational& imag() const { return im_; }

    bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_real() const { return sgn(im_) == 0; }

    GaussianRational conjugate() const { return {re_, -im_}; }

    /// re^2 + im^2, the field norm over the rationals.
    Rational norm2() const { return re_ * re_ + im_ * im_; }

    GaussianRational inverse() const {
        if (is_zero()) throw InvalidInput("division by zero scalar");
        Rational n = norm2();
        return {re_ / n, -im_ / n};
    }

    std::complex<double> to_complex() const { return {re_.get_d(), im_.get_d()}; }

    std::string str() const;

    friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
        return {a.re_ + b.re_, a.im_ + b.im_};
    }
    friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
        return {a.re_ - b.re_, a.im_ - b.im_};
    }
    friend GaussianRational operator-(const GaussianRational& a) { return {-a.re_, -a.im_}; }
    friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
        return {a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_};
    }
    friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
        return a * b.inverse();
    }

    GaussianRational& operator+=(const GaussianRational& o) { return *this = *this + o; }
    GaussianRational& operator-=(const GaussianRational& o) { return *this = *this - o; }
    GaussianRational& operator*=(const GaussianRational& o) { return *this = *this * o; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return cmp(a.re_, b.re_) == 0 && cmp(a.im_, b.im_) == 0;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

    /// Lexicographic (re, im) order; used only for deterministic sorting,
    /// it is not an algebraic order on the complex field.
    static int compare(const GaussianRational& a, const GaussianRational& b) {
        int c = cmp(a.re_, b.re_);
        return c != 0 ? c : cmp(a.im_, b.im_);
    }
    friend bool operator<(const GaussianRational& a, const GaussianRational& b) {
        return compare(a, b) < 0;
    }

    /// Exact square root within the Gaussian rationals, when one exists.
    static bool sqrt(const GaussianRational& w, GaussianRational& out);

private:
    Rational re_;
    Rational im_;
};

} // namespace evolkit

#endif
