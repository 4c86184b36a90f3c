#include "evolkit/radical.hpp"

#include <algorithm>
#include <cassert>

#include "evolkit/descent.hpp"
#include "evolkit/errors.hpp"
#include "evolkit/linalg.hpp"

namespace evolkit {

std::vector<int> modular_indexes(const EvolutionAlgebra& alg) {
    std::vector<int> out;
    for (int i = 0; i < alg.dim(); ++i) {
        if (alg.entry(i, i).is_zero()) continue;
        const std::vector<int> row = alg.row_support(i);
        if (row.size() == 1 && row[0] == i) out.push_back(i);
    }
    return out;
}

std::vector<IdealDescriptor> maximal_modular_ideals(const EvolutionAlgebra& alg) {
    std::vector<IdealDescriptor> out;
    for (int i0 : modular_indexes(alg)) {
        IdealDescriptor d;
        d.basis_kind = BasisKind::coordinate_span;
        for (int i = 0; i < alg.dim(); ++i)
            if (i != i0) d.support.push_back(i);
        d.modular_unit = Element::basis_vector(alg.dim(), i0).scaled(alg.entry(i0, i0).inverse());
        out.push_back(std::move(d));
    }
    return out;
}

RadicalReport jacobson_radical(const EvolutionAlgebra& alg) {
    RadicalReport r;
    r.modular_indexes = modular_indexes(alg);
    std::vector<int> all(static_cast<std::size_t>(alg.dim()));
    for (int i = 0; i < alg.dim(); ++i) all[static_cast<std::size_t>(i)] = i;
    r.radical_support = set_difference_sorted(all, r.modular_indexes);
    if (r.modular_indexes.empty())
        r.classification = RadicalClass::radical;
    else if (r.radical_support.empty())
        r.classification = RadicalClass::semisimple;
    else
        r.classification = RadicalClass::intermediate;
    r.quotient_diag = quotient_mod_radical(alg);
    return r;
}

ModularSupportCheck is_modular_ideal_support(const EvolutionAlgebra& alg, std::span<const int> support) {
    const int n = alg.dim();
    std::vector<int> s(support.begin(), support.end());
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    for (int i : s)
        if (i < 0 || i >= n) throw InvalidInput("support index out of range");
    if (s.empty() || s.size() >= static_cast<std::size_t>(n))
        throw InvalidInput("support must be a proper nonempty subset");

    DescentGraph g(alg);
    if (!is_subset_sorted(g.descendants_of_set(s), s)) return {};

    std::vector<int> all(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) all[static_cast<std::size_t>(i)] = i;
    Vector unit_coeffs(static_cast<std::size_t>(n));
    for (int i : set_difference_sorted(all, s)) {
        std::vector<int> di = g.descendants(i);
        if (!contains_sorted(di, i)) return {};
        std::vector<int> others = set_difference_sorted(di, std::vector<int>{i});
        if (!is_subset_sorted(others, s)) return {};
        // Under the two conditions the only walk returning to i is the
        // self-loop, so the diagonal entry is nonzero.
        const GaussianRational wii = alg.entry(i, i);
        assert(!wii.is_zero());
        unit_coeffs[static_cast<std::size_t>(i)] = wii.inverse();
    }
    return {true, Element::from_coeffs(std::move(unit_coeffs))};
}

namespace {

IdealDescriptor squares_span(const EvolutionAlgebra& alg, std::span<const int> closed_support) {
    IdealDescriptor d;
    d.basis_kind = BasisKind::vector_span;
    std::vector<Vector> rows;
    std::vector<Element> squares;
    for (int j : closed_support) {
        Element sq = alg.basis_square(j);
        rows.push_back(sq.coeffs);
        squares.push_back(std::move(sq));
    }
    std::vector<int> supp;
    for (std::size_t pos : independent_subset(rows)) {
        supp = set_union_sorted(supp, squares[pos].support);
        d.generators.push_back(std::move(squares[pos]));
    }
    d.support = std::move(supp);
    return d;
}

} // namespace

IdealDescriptor square_ideal(const EvolutionAlgebra& alg, int i) {
    if (i < 0 || i >= alg.dim()) throw InvalidInput("square_ideal: index out of range");
    DescentGraph g(alg);
    std::vector<int> closed = set_union_sorted(g.descendants(i), std::vector<int>{i});
    return squares_span(alg, closed);
}

IdealSandwichResult ideal_sandwich(const EvolutionAlgebra& alg, std::span<const int> support) {
    std::vector<int> s(support.begin(), support.end());
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    if (s.empty()) throw InvalidInput("ideal_sandwich: support must be nonempty");
    for (int i : s)
        if (i < 0 || i >= alg.dim()) throw InvalidInput("ideal_sandwich: index out of range");

    DescentGraph g(alg);
    std::vector<int> closed = set_union_sorted(s, g.descendants_of_set(s));

    IdealSandwichResult r;
    r.inner = squares_span(alg, closed);
    r.outer.basis_kind = BasisKind::coordinate_span;
    r.outer.support = closed;
    r.equal = r.inner.dimension() == r.outer.dimension();
    return r;
}

std::vector<GaussianRational> quotient_mod_radical(const EvolutionAlgebra& alg) {
    std::vector<GaussianRational> diag;
    const std::vector<int> mod = modular_indexes(alg);
    for (int i : mod) {
        // Rows of modular indexes are diagonal-only, which makes the image
        // of e_i^2 equal to w_ii times the image of e_i.
        for (int k : mod)
            if (k != i) assert(alg.entry(k, i).is_zero());
        diag.push_back(alg.entry(i, i));
    }
    return diag;
}

} // namespace evolkit
