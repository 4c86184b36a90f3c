#include "evolkit/spectra.hpp"

#include <algorithm>
#include <cassert>
#include <random>

#include "evolkit/descent.hpp"
#include "evolkit/errors.hpp"
#include "evolkit/multipoly.hpp"
#include "evolkit/radical.hpp"

namespace evolkit {

namespace {

DenseMatrix shifted(const DenseMatrix& m, const GaussianRational& lambda) {
    DenseMatrix r = m;
    for (std::size_t i = 0; i < r.rows(); ++i) r.at(i, i) -= lambda;
    return r;
}

std::vector<GaussianRational> dedup_sorted(std::vector<GaussianRational> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

bool zero_in_spectrum(const EvolutionAlgebra& alg, const Element& a) {
    if (!unit_of(alg).has_value()) return true;
    return a.support.size() != static_cast<std::size_t>(alg.dim());
}

// Numeric rank with a relative magnitude threshold; partial pivoting.
std::size_t numeric_rank(std::vector<std::vector<std::complex<double>>> m, double tol) {
    if (m.empty()) return 0;
    const std::size_t rows = m.size();
    const std::size_t cols = m[0].size();
    double scale = 0;
    for (const auto& row : m)
        for (const auto& x : row) scale = std::max(scale, std::abs(x));
    if (scale == 0) return 0;
    const double threshold = tol * scale;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t best = r;
        for (std::size_t i = r + 1; i < rows; ++i)
            if (std::abs(m[i][c]) > std::abs(m[best][c])) best = i;
        if (std::abs(m[best][c]) <= threshold) continue;
        std::swap(m[r], m[best]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            std::complex<double> f = m[i][c] / m[r][c];
            for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        ++r;
    }
    return r;
}

bool numeric_membership(const DenseMatrix& l, const Vector& alpha, std::complex<double> lambda,
                        double tol) {
    const std::size_t n = l.rows();
    std::vector<std::vector<std::complex<double>>> sys(n), aug(n);
    for (std::size_t i = 0; i < n; ++i) {
        sys[i].resize(n);
        aug[i].resize(n + 1);
        for (std::size_t j = 0; j < n; ++j) {
            std::complex<double> v = l.at(i, j).to_complex();
            if (i == j) v -= lambda;
            sys[i][j] = v;
            aug[i][j] = v;
        }
        aug[i][n] = alpha[i].to_complex();
    }
    return numeric_rank(std::move(aug), tol) > numeric_rank(std::move(sys), tol);
}

struct EigenData {
    DenseMatrix l;
    std::vector<GaussianRational> exact; ///< deduplicated rational eigenvalues
    Poly residual;
};

EigenData eigen_data(const EvolutionAlgebra& alg, const Element& a) {
    EigenData d;
    d.l = left_mul_matrix(alg, a);
    RationalRoots rr = rational_roots(char_poly(d.l));
    d.exact = dedup_sorted(std::move(rr.roots));
    d.residual = std::move(rr.residual);
    return d;
}

void finish_result(SpectrumResult& r, const Poly& residual, SpectrumMode mode, double tol) {
    r.exact_points = dedup_sorted(std::move(r.exact_points));
    r.contains_zero =
        std::find(r.exact_points.begin(), r.exact_points.end(), GaussianRational()) != r.exact_points.end();
    r.certainty = residual.degree() >= 1 ? Certainty::mixed : Certainty::exact;
    if (mode == SpectrumMode::numeric && residual.degree() >= 1)
        r.numeric_points = numeric_roots(residual, tol);
}

} // namespace

std::optional<Element> quasi_inverse(const EvolutionAlgebra& alg, const Element& a) {
    if (a.dim() != alg.dim()) throw InvalidInput("quasi_inverse: dimension mismatch");
    DenseMatrix sys = shifted(left_mul_matrix(alg, a), GaussianRational(1));
    LinearSolution sol = solve_linear(sys, a.coeffs);
    if (sol.kind == SolutionKind::inconsistent) return std::nullopt;
    return Element::from_coeffs(*sol.particular);
}

SpectrumResult m_spectrum(const EvolutionAlgebra& alg, const Element& a, SpectrumMode mode, double tol) {
    if (a.dim() != alg.dim()) throw InvalidInput("m_spectrum: dimension mismatch");
    EigenData d = eigen_data(alg, a);

    SpectrumResult r;
    r.kind = SpectrumKind::m_spectrum;
    r.exact_points = d.exact;
    if (!unit_of(alg).has_value()) r.exact_points.push_back(GaussianRational());
    finish_result(r, d.residual, mode, tol);
    return r;
}

SpectrumResult spectrum(const EvolutionAlgebra& alg, const Element& a, SpectrumMode mode, double tol) {
    if (a.dim() != alg.dim()) throw InvalidInput("spectrum: dimension mismatch");
    EigenData d = eigen_data(alg, a);

    SpectrumResult r;
    r.kind = SpectrumKind::spectrum;
    for (const GaussianRational& lambda : d.exact) {
        if (lambda.is_zero()) continue;
        LinearSolution sol = solve_linear(shifted(d.l, lambda), a.coeffs);
        if (sol.kind == SolutionKind::inconsistent) r.exact_points.push_back(lambda);
    }
    if (zero_in_spectrum(alg, a)) r.exact_points.push_back(GaussianRational());

    r.exact_points = dedup_sorted(std::move(r.exact_points));
    r.contains_zero =
        std::find(r.exact_points.begin(), r.exact_points.end(), GaussianRational()) != r.exact_points.end();
    r.certainty = d.residual.degree() >= 1 ? Certainty::mixed : Certainty::exact;
    if (mode == SpectrumMode::numeric && d.residual.degree() >= 1) {
        for (const auto& z : numeric_roots(d.residual, tol))
            if (numeric_membership(d.l, a.coeffs, z, tol)) r.numeric_points.push_back(z);
    }
    return r;
}

SpectralRadii spectral_radii(const EvolutionAlgebra& alg, const Element& a, double tol) {
    SpectrumResult ms = m_spectrum(alg, a, SpectrumMode::numeric, tol);
    SpectrumResult s = spectrum(alg, a, SpectrumMode::numeric, tol);

    auto radius = [](const SpectrumResult& r) {
        double m = 0;
        for (const auto& p : r.exact_points) m = std::max(m, std::abs(p.to_complex()));
        for (const auto& z : r.numeric_points) m = std::max(m, std::abs(z));
        return m;
    };

    SpectralRadii out;
    out.rho_m = radius(ms);
    out.rho = radius(s);
    out.rho_m_zero_exact = is_nilpotent_matrix(left_mul_matrix(alg, a));

    bool sigma_has_nonzero_exact = false;
    for (const auto& p : s.exact_points)
        if (!p.is_zero()) sigma_has_nonzero_exact = true;
    out.rho_zero_exact =
        out.rho_m_zero_exact || (s.certainty == Certainty::exact && !sigma_has_nonzero_exact);
    return out;
}

SupportRestriction support_restriction(const EvolutionAlgebra& alg, const Element& a) {
    if (a.dim() != alg.dim()) throw InvalidInput("support_restriction: dimension mismatch");
    if (a.is_zero()) throw InvalidInput("support_restriction: element must be nonzero");

    DescentGraph g(alg);
    std::vector<int> first;
    for (int i : a.support) first = set_union_sorted(first, g.first_generation(i));
    std::vector<int> rest = set_difference_sorted(first, a.support);

    SupportRestriction r;
    r.indices = a.support;
    r.indices.insert(r.indices.end(), rest.begin(), rest.end());
    r.submatrix = alg.structure_matrix().principal_submatrix(r.indices);
    r.padded_alpha.reserve(r.indices.size());
    for (int i : r.indices) r.padded_alpha.push_back(a.coeffs[static_cast<std::size_t>(i)]);
    return r;
}

// --- semisimplicity ----------------------------------------------------------

namespace {

bool binomial_within(std::size_t n, std::size_t d, std::size_t cap) {
    // C(n + d, d) <= cap without overflow.
    double acc = 1;
    for (std::size_t k = 1; k <= d; ++k) {
        acc *= static_cast<double>(n + k) / static_cast<double>(k);
        if (acc > static_cast<double>(cap)) return false;
    }
    return true;
}

// Exact determinant of a principal submatrix, by fraction-full elimination.
GaussianRational principal_minor_det(const DenseMatrix& m, std::span<const int> indices) {
    DenseMatrix s = m.principal_submatrix(indices);
    const std::size_t k = s.rows();
    GaussianRational det(1);
    for (std::size_t c = 0; c < k; ++c) {
        std::size_t p = c;
        while (p < k && s.at(p, c).is_zero()) ++p;
        if (p == k) return {};
        if (p != c) {
            for (std::size_t j = 0; j < k; ++j) std::swap(s.at(p, j), s.at(c, j));
            det = -det;
        }
        det *= s.at(c, c);
        GaussianRational inv = s.at(c, c).inverse();
        for (std::size_t i = c + 1; i < k; ++i) {
            if (s.at(i, c).is_zero()) continue;
            GaussianRational f = s.at(i, c) * inv;
            for (std::size_t j = c; j < k; ++j) s.at(i, j) -= f * s.at(c, j);
        }
    }
    return det;
}

struct SymbolicScan {
    bool completed = false;             ///< budget held
    std::vector<MultiPoly> char_coeffs; ///< c_k for subset size k = 1..n
};

// Characteristic-polynomial coefficients of M diag(alpha(t)) as polynomials
// in the subspace coordinates t, via principal minors: the size-k
// coefficient is the sum over k-subsets S of det(M[S,S]) prod_{i in S} l_i(t).
SymbolicScan symbolic_char_coeffs(const EvolutionAlgebra& alg, std::span<const Element> basis,
                                  std::span<const int> support, std::size_t monomial_cap) {
    const std::size_t d = basis.size();
    const DenseMatrix m = alg.structure_matrix();

    std::vector<MultiPoly> forms;
    forms.reserve(support.size());
    for (int i : support) {
        std::vector<GaussianRational> coeffs(d);
        for (std::size_t k = 0; k < d; ++k) coeffs[k] = basis[k].coeffs[static_cast<std::size_t>(i)];
        forms.push_back(MultiPoly::linear_form(coeffs));
    }

    SymbolicScan scan;
    scan.char_coeffs.assign(static_cast<std::size_t>(alg.dim()) + 1, MultiPoly(d));
    std::size_t total_terms = 0;
    std::vector<int> chosen;

    // Depth-first subset enumeration sharing the partial linear-form product.
    auto rec = [&](auto&& self, std::size_t pos, const MultiPoly& partial) -> bool {
        if (!chosen.empty()) {
            GaussianRational det = principal_minor_det(m, chosen);
            if (!det.is_zero()) {
                scan.char_coeffs[chosen.size()] = scan.char_coeffs[chosen.size()] + partial.scaled(det);
                total_terms += partial.term_count();
                if (total_terms > monomial_cap * 4) return false;
            }
        }
        for (std::size_t next = pos; next < support.size(); ++next) {
            if (forms[next].is_zero()) continue;
            chosen.push_back(support[next]);
            bool ok = self(self, next + 1, partial * forms[next]);
            chosen.pop_back();
            if (!ok) return false;
        }
        return true;
    };
    scan.completed = rec(rec, 0, MultiPoly::constant(d, GaussianRational(1)));
    return scan;
}

Element combine(std::span<const Element> basis, const std::vector<GaussianRational>& t) {
    Element acc = Element::zero(basis.empty() ? 0 : basis[0].dim());
    for (std::size_t k = 0; k < basis.size(); ++k) acc = acc + basis[k].scaled(t[k]);
    return acc;
}

} // namespace

NilpotencyScan scan_subspace_nilpotency(const EvolutionAlgebra& alg, std::span<const Element> generators,
                                        unsigned trials, std::uint64_t seed) {
    if (trials == 0) throw InvalidInput("scan_subspace_nilpotency: trials must be at least 1");

    std::vector<Vector> rows;
    rows.reserve(generators.size());
    for (const Element& g : generators) rows.push_back(g.coeffs);
    std::vector<Element> basis;
    for (std::size_t pos : independent_subset(rows)) basis.push_back(generators[pos]);

    if (basis.empty()) return {NilpotencyOutcome::all_nilpotent, std::nullopt, true};

    for (const Element& g : basis)
        if (!is_nilpotent_matrix(left_mul_matrix(alg, g)))
            return {NilpotencyOutcome::witness_found, g, false};

    std::vector<int> support;
    for (const Element& g : basis) support = set_union_sorted(support, g.support);

    const std::size_t d = basis.size();
    const std::size_t n = static_cast<std::size_t>(alg.dim());
    const bool budget_ok = binomial_within(n, d, 100000) && support.size() <= 12;

    if (budget_ok) {
        SymbolicScan scan = symbolic_char_coeffs(alg, basis, support, 100000);
        if (scan.completed) {
            std::size_t k_nonzero = 0;
            for (std::size_t k = 1; k < scan.char_coeffs.size(); ++k)
                if (!scan.char_coeffs[k].is_zero()) {
                    k_nonzero = k;
                    break;
                }
            if (k_nonzero == 0) return {NilpotencyOutcome::all_nilpotent, std::nullopt, true};

            // Fix variables one by one, keeping the coefficient nonzero.
            MultiPoly p = scan.char_coeffs[k_nonzero];
            std::vector<GaussianRational> point(d);
            for (std::size_t var = 0; var < d; ++var) {
                const std::uint32_t deg = p.degree_in(var);
                for (long v = 0; v <= static_cast<long>(deg); ++v) {
                    for (long signedv : {v, -v}) {
                        MultiPoly sub = p.substituted(var, GaussianRational(signedv));
                        if (!sub.is_zero()) {
                            point[var] = GaussianRational(signedv);
                            p = std::move(sub);
                            goto next_var;
                        }
                        if (v == 0) break;
                    }
                }
            next_var:;
            }
            Element witness = combine(basis, point);
            assert(!is_nilpotent_matrix(left_mul_matrix(alg, witness)));
            return {NilpotencyOutcome::witness_found, witness, true};
        }
    }

    // Randomized probing at integer points of bounded magnitude.
    std::mt19937_64 rng(seed);
    const long bound = static_cast<long>(n) * static_cast<long>(n) + 1;
    std::uniform_int_distribution<long> dist(-bound, bound);
    for (unsigned t = 0; t < trials; ++t) {
        std::vector<GaussianRational> point(d);
        for (auto& x : point) x = GaussianRational(dist(rng));
        Element probe = combine(basis, point);
        if (probe.is_zero()) continue;
        if (!is_nilpotent_matrix(left_mul_matrix(alg, probe)))
            return {NilpotencyOutcome::witness_found, probe, false};
    }
    return {NilpotencyOutcome::undetermined, std::nullopt, false};
}

namespace {

bool sigma_has_nonzero_exact_point(const EvolutionAlgebra& alg, const Element& a) {
    if (a.is_zero()) return false;
    DenseMatrix l = left_mul_matrix(alg, a);
    RationalRoots rr = rational_roots(char_poly(l));
    for (const GaussianRational& lambda : dedup_sorted(std::move(rr.roots))) {
        if (lambda.is_zero()) continue;
        if (solve_linear(shifted(l, lambda), a.coeffs).kind == SolutionKind::inconsistent) return true;
    }
    return false;
}

} // namespace

SemisimplicityVerdict m_semisimple_check(const EvolutionAlgebra& alg, unsigned trials, std::uint64_t seed) {
    if (trials == 0) throw InvalidInput("m_semisimple_check: trials must be at least 1");

    SemisimplicityVerdict verdict;
    std::optional<int> certified_fail;
    std::optional<int> undetermined_fail;
    std::optional<Element> fail_element;

    for (int i = 0; i < alg.dim(); ++i) {
        Element sq = alg.basis_square(i);
        if (!sq.is_zero() && !is_nilpotent_matrix(left_mul_matrix(alg, sq))) {
            verdict.index_witnesses.emplace_back(i, std::move(sq));
            continue;
        }
        IdealDescriptor ideal = square_ideal(alg, i);
        NilpotencyScan scan =
            scan_subspace_nilpotency(alg, ideal.generators, trials, seed + static_cast<std::uint64_t>(i));
        if (scan.outcome == NilpotencyOutcome::witness_found) {
            verdict.index_witnesses.emplace_back(i, *scan.witness);
            continue;
        }
        Element representative =
            ideal.generators.empty() ? Element::basis_vector(alg.dim(), i) : ideal.generators.front();
        if (scan.outcome == NilpotencyOutcome::all_nilpotent) {
            if (!certified_fail) {
                certified_fail = i;
                fail_element = representative;
            }
        } else if (!certified_fail && !undetermined_fail) {
            undetermined_fail = i;
            fail_element = representative;
        }
    }

    if (certified_fail) {
        verdict.value = VerdictValue::no;
        verdict.certified = true;
        verdict.witness_index = certified_fail;
        verdict.witness_element = fail_element;
        verdict.index_witnesses.clear();
        return verdict;
    }
    if (undetermined_fail) {
        verdict.value = VerdictValue::no;
        verdict.certified = false;
        verdict.witness_index = undetermined_fail;
        verdict.witness_element = fail_element;
        verdict.index_witnesses.clear();
        return verdict;
    }
    verdict.value = VerdictValue::yes;
    verdict.certified = true;
    return verdict;
}

SemisimplicityVerdict spectrally_semisimple_check(const EvolutionAlgebra& alg, unsigned trials,
                                                  std::uint64_t seed) {
    if (trials == 0) throw InvalidInput("spectrally_semisimple_check: trials must be at least 1");

    SemisimplicityVerdict verdict;
    std::optional<int> certified_fail;
    std::optional<Element> fail_element;
    std::vector<int> unresolved;

    const long bound = static_cast<long>(alg.dim()) * static_cast<long>(alg.dim()) + 1;

    for (int i = 0; i < alg.dim(); ++i) {
        Element sq = alg.basis_square(i);
        if (sigma_has_nonzero_exact_point(alg, sq)) {
            verdict.index_witnesses.emplace_back(i, std::move(sq));
            continue;
        }
        IdealDescriptor ideal = square_ideal(alg, i);
        NilpotencyScan scan =
            scan_subspace_nilpotency(alg, ideal.generators, trials, seed + static_cast<std::uint64_t>(i));
        if (scan.outcome == NilpotencyOutcome::all_nilpotent) {
            if (!certified_fail) {
                certified_fail = i;
                fail_element = ideal.generators.empty() ? Element::basis_vector(alg.dim(), i)
                                                        : ideal.generators.front();
            }
            continue;
        }
        bool found = false;
        if (scan.witness && sigma_has_nonzero_exact_point(alg, *scan.witness)) {
            verdict.index_witnesses.emplace_back(i, *scan.witness);
            found = true;
        }
        if (!found) {
            std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ULL + static_cast<std::uint64_t>(i));
            std::uniform_int_distribution<long> dist(-bound, bound);
            for (unsigned t = 0; t < trials && !found; ++t) {
                std::vector<GaussianRational> point(ideal.generators.size());
                for (auto& x : point) x = GaussianRational(dist(rng));
                Element probe = combine(ideal.generators, point);
                if (probe.is_zero()) continue;
                if (sigma_has_nonzero_exact_point(alg, probe)) {
                    verdict.index_witnesses.emplace_back(i, probe);
                    found = true;
                }
            }
        }
        if (!found) unresolved.push_back(i);
    }

    if (certified_fail) {
        verdict.value = VerdictValue::no;
        verdict.certified = true;
        verdict.witness_index = certified_fail;
        verdict.witness_element = fail_element;
        verdict.index_witnesses.clear();
        return verdict;
    }
    if (!unresolved.empty()) {
        verdict.value = VerdictValue::probably_yes;
        verdict.certified = false;
        verdict.witness_index = unresolved.front();
        return verdict;
    }
    verdict.value = VerdictValue::yes;
    verdict.certified = true;
    return verdict;
}

} // namespace evolkit
