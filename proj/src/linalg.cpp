#include "evolkit/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "evolkit/errors.hpp"

namespace evolkit {

namespace {

// Gauss-Jordan on the leftmost `pivot_cols` columns of an augmented grid.
// Pivots are the first exact-nonzero entries in column order.
struct Echelon {
    std::vector<Vector> rows;
    std::vector<std::size_t> pivot_col_of_row;
};

Echelon reduce(std::vector<Vector> rows, std::size_t pivot_cols) {
    Echelon e;
    std::size_t r = 0;
    for (std::size_t c = 0; c < pivot_cols && r < rows.size(); ++c) {
        std::size_t pr = r;
        while (pr < rows.size() && rows[pr][c].is_zero()) ++pr;
        if (pr == rows.size()) continue;
        std::swap(rows[r], rows[pr]);
        GaussianRational inv = rows[r][c].inverse();
        for (auto& x : rows[r]) x *= inv;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][c].is_zero()) continue;
            GaussianRational f = rows[i][c];
            for (std::size_t j = 0; j < rows[i].size(); ++j) rows[i][j] -= f * rows[r][j];
        }
        e.pivot_col_of_row.push_back(c);
        ++r;
    }
    e.rows = std::move(rows);
    return e;
}

std::vector<Vector> matrix_rows(const DenseMatrix& a) {
    std::vector<Vector> rows(a.rows(), Vector(a.cols()));
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) rows[i][j] = a.at(i, j);
    return rows;
}

} // namespace

LinearSolution solve_linear(const DenseMatrix& a, const Vector& b) {
    if (a.rows() != b.size()) throw InvalidInput("solve_linear: rhs length != row count");
    const std::size_t n = a.cols();
    std::vector<Vector> aug(a.rows(), Vector(n + 1));
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < n; ++j) aug[i][j] = a.at(i, j);
        aug[i][n] = b[i];
    }
    Echelon e = reduce(std::move(aug), n);

    const std::size_t nrank = e.pivot_col_of_row.size();
    for (std::size_t i = nrank; i < e.rows.size(); ++i)
        if (!e.rows[i][n].is_zero()) return {SolutionKind::inconsistent, std::nullopt, {}};

    Vector particular(n);
    for (std::size_t r = 0; r < nrank; ++r) particular[e.pivot_col_of_row[r]] = e.rows[r][n];

    LinearSolution sol;
    sol.particular = std::move(particular);
    if (nrank == n) {
        sol.kind = SolutionKind::unique;
        return sol;
    }
    sol.kind = SolutionKind::affine_family;
    std::vector<bool> is_pivot(n, false);
    for (std::size_t c : e.pivot_col_of_row) is_pivot[c] = true;
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        Vector v(n);
        v[f] = GaussianRational(1);
        for (std::size_t r = 0; r < nrank; ++r) v[e.pivot_col_of_row[r]] = -e.rows[r][f];
        sol.nullspace_basis.push_back(std::move(v));
    }
    return sol;
}

std::size_t rank(const DenseMatrix& a) {
    if (a.rows() == 0 || a.cols() == 0) return 0;
    return reduce(matrix_rows(a), a.cols()).pivot_col_of_row.size();
}

Poly char_poly(const DenseMatrix& a) {
    if (!a.is_square()) throw InvalidInput("char_poly: matrix must be square");
    const std::size_t n = a.rows();
    std::vector<GaussianRational> coeffs(n + 1);
    coeffs[n] = GaussianRational(1);
    DenseMatrix mk = a;
    for (std::size_t k = 1; k <= n; ++k) {
        if (k > 1) {
            DenseMatrix shifted = mk;
            for (std::size_t i = 0; i < n; ++i) shifted.at(i, i) += coeffs[n - k + 1];
            mk = a * shifted;
        }
        GaussianRational ck = -(mk.trace() / GaussianRational(static_cast<long>(k)));
        coeffs[n - k] = ck;
    }
    return Poly(std::move(coeffs));
}

bool is_nilpotent_matrix(const DenseMatrix& a) {
    if (!a.is_square()) throw InvalidInput("is_nilpotent_matrix: matrix must be square");
    return char_poly(a) == Poly::monomial(a.rows());
}

std::vector<std::size_t> independent_subset(std::span<const Vector> vectors) {
    std::vector<Vector> basis;            // kept in echelon form
    std::vector<std::size_t> lead;        // leading column of each basis row
    std::vector<std::size_t> chosen;
    for (std::size_t idx = 0; idx < vectors.size(); ++idx) {
        Vector v = vectors[idx];
        for (std::size_t b = 0; b < basis.size(); ++b) {
            if (lead[b] < v.size() && !v[lead[b]].is_zero()) {
                GaussianRational f = v[lead[b]];
                for (std::size_t j = 0; j < v.size(); ++j) v[j] -= f * basis[b][j];
            }
        }
        std::size_t lc = 0;
        while (lc < v.size() && v[lc].is_zero()) ++lc;
        if (lc == v.size()) continue;
        GaussianRational inv = v[lc].inverse();
        for (auto& x : v) x *= inv;
        basis.push_back(std::move(v));
        lead.push_back(lc);
        chosen.push_back(idx);
    }
    return chosen;
}

std::size_t span_dimension(std::span<const Vector> vectors) {
    return independent_subset(vectors).size();
}

// --- rational root extraction -----------------------------------------------

namespace {

// Divisors of |v| from a trial-division factorization. A large residual
// cofactor is treated as a single prime; roots whose numerator or
// denominator hides inside it simply stay in the residual polynomial.
std::vector<mpz_class> positive_divisors(mpz_class v) {
    v = abs(v);
    std::vector<std::pair<mpz_class, unsigned>> factors;
    if (v == 0) return {};
    auto add_factor = [&factors](const mpz_class& p, unsigned e) { factors.emplace_back(p, e); };
    unsigned e2 = 0;
    while (mpz_even_p(v.get_mpz_t())) {
        v /= 2;
        ++e2;
    }
    if (e2 > 0) add_factor(2, e2);
    mpz_class d = 3;
    const mpz_class trial_bound = 1000000;
    while (d * d <= v && d <= trial_bound) {
        unsigned e = 0;
        while (mpz_divisible_p(v.get_mpz_t(), d.get_mpz_t())) {
            v /= d;
            ++e;
        }
        if (e > 0) add_factor(d, e);
        d += 2;
    }
    if (v > 1) add_factor(v, 1);

    std::vector<mpz_class> divs{1};
    const std::size_t cap = 65536;
    for (const auto& [p, e] : factors) {
        std::size_t sz = divs.size();
        mpz_class pk = 1;
        for (unsigned k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < sz; ++i) {
                if (divs.size() >= cap) return divs;
                divs.push_back(divs[i] * pk);
            }
        }
    }
    return divs;
}

// Rational-root-theorem candidates for a polynomial with real rational
// coefficients and nonzero constant term.
std::vector<Rational> rational_candidates(const Poly& real_poly) {
    std::vector<Rational> out;
    if (real_poly.degree() < 1) return out;
    mpz_class den_lcm = 1;
    for (const auto& c : real_poly.coeffs()) {
        mpz_class d = c.real().get_den();
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
    }
    std::vector<mpz_class> ints;
    ints.reserve(real_poly.coeffs().size());
    mpz_class content = 0;
    for (const auto& c : real_poly.coeffs()) {
        Rational scaled = c.real() * Rational(den_lcm);
        ints.push_back(scaled.get_num());
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), ints.back().get_mpz_t());
    }
    if (content > 1)
        for (auto& x : ints) x /= content;
    if (ints.front() == 0) return out;
    std::vector<mpz_class> ps = positive_divisors(ints.front());
    std::vector<mpz_class> qs = positive_divisors(ints.back());
    for (const auto& p : ps)
        for (const auto& q : qs) {
            Rational r = make_rational(p, q);
            out.push_back(r);
            out.push_back(-r);
        }
    std::sort(out.begin(), out.end(), [](const Rational& x, const Rational& y) { return cmp(x, y) < 0; });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

Poly conjugate_poly(const Poly& p) {
    std::vector<GaussianRational> c(p.coeffs().size());
    for (std::size_t k = 0; k < c.size(); ++k) c[k] = p.coeff(k).conjugate();
    return Poly(std::move(c));
}

bool all_real(const Poly& p) {
    for (const auto& c : p.coeffs())
        if (!c.is_real()) return false;
    return true;
}

void extract_root(Poly& q, const GaussianRational& r, std::vector<GaussianRational>& roots, bool& progress) {
    while (q.degree() >= 1 && q.eval(r).is_zero()) {
        roots.push_back(r);
        q = q.deflate(r);
        progress = true;
    }
}

// Exact roots of a monic quadratic, when its discriminant has a
// Gaussian-rational square root.
bool solve_quadratic(Poly& q, std::vector<GaussianRational>& roots) {
    const GaussianRational b = q.coeff(1);
    const GaussianRational c = q.coeff(0);
    GaussianRational disc = b * b - GaussianRational(4) * c;
    GaussianRational s;
    if (!GaussianRational::sqrt(disc, s)) return false;
    const GaussianRational half(Rational(1, 2));
    roots.push_back((-b + s) * half);
    roots.push_back((-b - s) * half);
    q = Poly::constant(GaussianRational(1));
    return true;
}

} // namespace

RationalRoots rational_roots(const Poly& p) {
    if (p.is_zero()) throw InvalidInput("rational_roots: zero polynomial");
    const GaussianRational lc = p.leading();
    Poly q = p.scaled(lc.inverse());
    std::vector<GaussianRational> roots;

    bool stripped_zeros = false;
    extract_root(q, GaussianRational(), roots, stripped_zeros);

    while (q.degree() >= 1) {
        bool progress = false;
        if (q.degree() == 1) {
            roots.push_back(-q.coeff(0));
            q = Poly::constant(GaussianRational(1));
            continue;
        }
        if (q.degree() == 2 && solve_quadratic(q, roots)) continue;
        if (q.degree() == 2) break; // irrational quadratic

        const Poly realified = all_real(q) ? q : q * conjugate_poly(q);
        for (const Rational& r : rational_candidates(realified))
            extract_root(q, GaussianRational(r), roots, progress);

        if (q.degree() >= 3) {
            auto [even, odd] = realified.even_odd_parts();
            for (const Rational& t : rational_candidates(even)) {
                if (sgn(t) >= 0) continue;
                if (!even.eval(GaussianRational(t)).is_zero()) continue;
                if (!odd.is_zero() && !odd.eval(GaussianRational(t)).is_zero()) continue;
                Rational b;
                if (!rational_sqrt(-t, b)) continue;
                extract_root(q, GaussianRational(Rational(0), b), roots, progress);
                extract_root(q, GaussianRational(Rational(0), -b), roots, progress);
            }
        }
        if (!progress) break;
    }

    std::sort(roots.begin(), roots.end());
    return {std::move(roots), q.scaled(lc)};
}

// --- numeric root fallback ---------------------------------------------------

namespace {

std::complex<double> horner(const std::vector<std::complex<double>>& c, std::complex<double> z) {
    std::complex<double> acc = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + *it;
    return acc;
}

// Scaled running bound on the Horner rounding error; at a point where the
// residual sinks below this floor no further digits are attainable.
double horner_noise_floor(const std::vector<std::complex<double>>& c, std::complex<double> z) {
    const double az = std::abs(z);
    double acc = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * az + std::abs(*it);
    return acc * static_cast<double>(2 * c.size()) * std::numeric_limits<double>::epsilon();
}

} // namespace

std::vector<std::complex<double>> numeric_roots(const Poly& p, double tol, int iteration_cap) {
    if (p.is_zero()) throw InvalidInput("numeric_roots: zero polynomial");
    if (tol <= 0) throw InvalidInput("numeric_roots: tol must be positive");

    std::vector<std::complex<double>> out;
    Poly q = p;
    while (q.degree() >= 1 && q.coeff(0).is_zero()) {
        out.emplace_back(0.0, 0.0);
        q = q.deflate(GaussianRational());
    }
    const int n = q.degree();
    if (n <= 0) return out;

    std::vector<std::complex<double>> c(static_cast<std::size_t>(n) + 1);
    const GaussianRational lead_inv = q.leading().inverse();
    for (std::size_t k = 0; k < c.size(); ++k) c[k] = (q.coeff(k) * lead_inv).to_complex();

    double radius = 0;
    for (int k = 0; k < n; ++k) radius = std::max(radius, std::abs(c[static_cast<std::size_t>(k)]));
    radius = 1.0 + radius;

    std::vector<std::complex<double>> z(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        z[static_cast<std::size_t>(i)] =
            std::polar(radius, 2.0 * std::numbers::pi * i / n + 0.42);

    bool converged = false;
    for (int iter = 0; iter < iteration_cap && !converged; ++iter) {
        double max_step = 0;
        for (int i = 0; i < n; ++i) {
            std::complex<double>& zi = z[static_cast<std::size_t>(i)];
            std::complex<double> num = horner(c, zi);
            std::complex<double> den = 1;
            for (int j = 0; j < n; ++j)
                if (j != i) den *= zi - z[static_cast<std::size_t>(j)];
            if (den == std::complex<double>(0, 0)) den = 1e-30;
            std::complex<double> step = num / den;
            zi -= step;
            max_step = std::max(max_step, std::abs(step));
        }
        if (max_step < 0.01 * tol) {
            converged = true;
        } else {
            converged = true;
            for (const auto& zi : z)
                if (std::abs(horner(c, zi)) > horner_noise_floor(c, zi)) {
                    converged = false;
                    break;
                }
        }
    }
    if (!converged) {
        out.insert(out.end(), z.begin(), z.end());
        throw NumericFailure("numeric_roots: iteration cap reached", out);
    }

    std::vector<std::complex<double>> dc(static_cast<std::size_t>(n));
    for (int k = 1; k <= n; ++k)
        dc[static_cast<std::size_t>(k - 1)] = c[static_cast<std::size_t>(k)] * static_cast<double>(k);
    for (auto& zi : z) {
        for (int t = 0; t < 3; ++t) {
            std::complex<double> f = horner(c, zi);
            std::complex<double> fp = horner(dc, zi);
            if (fp == std::complex<double>(0, 0)) break;
            std::complex<double> next = zi - f / fp;
            if (std::abs(horner(c, next)) <= std::abs(f)) zi = next;
        }
    }

    out.insert(out.end(), z.begin(), z.end());
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });
    return out;
}

} // namespace evolkit
