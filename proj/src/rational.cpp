#include "evolkit/rational.hpp"

namespace evolkit {

Rational make_rational(const mpz_class& num, const mpz_class& den) {
    if (sgn(den) == 0) throw InvalidInput("zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

std::string rational_to_string(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

bool rational_sqrt(const Rational& q, Rational& out) {
    if (sgn(q) < 0) return false;
    const mpz_class& num = q.get_num();
    const mpz_class& den = q.get_den();
    if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
        return false;
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    out = make_rational(rn, rd);
    return true;
}

std::string GaussianRational::str() const {
    if (is_real()) return rational_to_string(re_);
    std::string im_part;
    Rational abs_im = abs(im_);
    if (abs_im == 1)
        im_part = "i";
    else
        im_part = rational_to_string(abs_im) + "i";
    if (sgn(re_) == 0) return (sgn(im_) < 0 ? "-" : "") + im_part;
    return rational_to_string(re_) + (sgn(im_) < 0 ? "-" : "+") + im_part;
}

bool GaussianRational::sqrt(const GaussianRational& w, GaussianRational& out) {
    if (w.is_zero()) {
        out = GaussianRational();
        return true;
    }
    const Rational& u = w.real();
    const Rational& v = w.imag();
    if (sgn(v) == 0) {
        Rational s;
        if (sgn(u) > 0) {
            if (!rational_sqrt(u, s)) return false;
            out = GaussianRational(s);
        } else {
            if (!rational_sqrt(-u, s)) return false;
            out = GaussianRational(Rational(0), s);
        }
        return true;
    }
    // (s + ti)^2 = u + vi needs s^2 = (u + |w|)/2 with |w| rational.
    Rational mag;
    if (!rational_sqrt(w.norm2(), mag)) return false;
    Rational s;
    if (!rational_sqrt((u + mag) / 2, s)) return false;
    if (sgn(s) == 0) return false;
    Rational t = v / (2 * s);
    GaussianRational candidate(s, t);
    if (candidate * candidate != w) return false;
    out = candidate;
    return true;
}

} // namespace evolkit
