#include <doctest.h>

#include <algorithm>

#include "evolkit/errors.hpp"
#include "evolkit/radical.hpp"
#include "evolkit/spectra.hpp"
#include "test_support.hpp"

using namespace evolkit;
using namespace evolkit::testing;

namespace {

// Membership of an element in a coordinate-span ideal.
bool in_coordinate_span(const Element& e, const std::vector<int>& support) {
    return is_subset_sorted(e.support, support);
}

std::vector<int> all_indexes(int n) {
    std::vector<int> v(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = i;
    return v;
}

} // namespace

TEST_CASE("modular_indexes worked examples") {
    CHECK(modular_indexes(two_block_7x7()) == std::vector<int>{5, 6});
    CHECK(modular_indexes(half_modular_2x2()) == std::vector<int>{1});
    CHECK(modular_indexes(radical_pair_2x2()).empty());
}

TEST_CASE("maximal_modular_ideals worked examples") {
    auto ideals = maximal_modular_ideals(two_block_7x7());
    REQUIRE(ideals.size() == 2);
    CHECK(ideals[0].support == std::vector<int>{0, 1, 2, 3, 4, 6});
    CHECK(ideals[1].support == std::vector<int>{0, 1, 2, 3, 4, 5});
    CHECK(*ideals[0].modular_unit == Element::basis_vector(7, 5));
    CHECK(*ideals[1].modular_unit == Element::basis_vector(7, 6));

    CHECK(maximal_modular_ideals(radical_pair_2x2()).empty());
    CHECK(maximal_modular_ideals(diagonal_algebra({gq(2), gq(3), gq(-1)})).size() == 3);
}

TEST_CASE("jacobson_radical worked examples") {
    auto seven = jacobson_radical(two_block_7x7());
    CHECK(seven.radical_support == std::vector<int>{0, 1, 2, 3, 4});
    CHECK(seven.classification == RadicalClass::intermediate);

    auto half = jacobson_radical(half_modular_2x2());
    CHECK(half.radical_support == std::vector<int>{0});
    CHECK(half.classification == RadicalClass::intermediate);

    auto diag = jacobson_radical(diagonal_algebra({gq(1), gq(7)}));
    CHECK(diag.radical_support.empty());
    CHECK(diag.classification == RadicalClass::semisimple);

    CHECK(jacobson_radical(radical_pair_2x2()).classification == RadicalClass::radical);
}

TEST_CASE("is_modular_ideal_support validates the descent conditions") {
    auto seven = two_block_7x7();
    auto good = is_modular_ideal_support(seven, std::vector<int>{0, 1, 2, 3, 4, 6});
    REQUIRE(good.valid);
    CHECK(*good.unit == Element::basis_vector(7, 5));

    auto bad = is_modular_ideal_support(seven, std::vector<int>{1, 2, 3, 4, 5, 6});
    CHECK(!bad.valid);
    CHECK(!bad.unit.has_value());

    auto half = half_modular_2x2();
    auto k_e1 = is_modular_ideal_support(half, std::vector<int>{0});
    REQUIRE(k_e1.valid);
    CHECK(*k_e1.unit == Element::basis_vector(2, 1));

    CHECK_THROWS_AS(is_modular_ideal_support(half, std::vector<int>{}), InvalidInput);
    CHECK_THROWS_AS(is_modular_ideal_support(half, std::vector<int>{0, 1}), InvalidInput);
}

TEST_CASE("square_ideal spans the squares over the closed support") {
    auto pair = radical_pair_2x2();
    auto one = square_ideal(pair, 0);
    CHECK(one.basis_kind == BasisKind::vector_span);
    CHECK(one.generators.size() == 1);
    CHECK(one.generators[0] == pair.basis_square(0));

    auto seven = square_ideal(two_block_7x7(), 5);
    REQUIRE(seven.generators.size() == 3);
    CHECK(seven.generators[0] == two_block_7x7().basis_square(3));
    CHECK(seven.generators[1] == two_block_7x7().basis_square(4));
    CHECK(seven.generators[2] == two_block_7x7().basis_square(5));

    auto dead = square_ideal(degenerate_2x2(), 0);
    CHECK(dead.generators.empty());
    CHECK(dead.dimension() == 0);
}

TEST_CASE("ideal_sandwich squeezes between squares and coordinates") {
    auto half = half_modular_2x2(); // det = 1
    auto inv = ideal_sandwich(half, std::vector<int>{0});
    CHECK(inv.equal);
    CHECK(inv.outer.support == std::vector<int>{0});

    auto deg = ideal_sandwich(degenerate_2x2(), std::vector<int>{0});
    CHECK(deg.inner.dimension() == 0);
    CHECK(deg.outer.support == std::vector<int>{0});
    CHECK(!deg.equal);

    auto diag = diagonal_algebra({gq(2), gq(5)});
    auto full = ideal_sandwich(diag, std::vector<int>{0, 1});
    CHECK(full.equal);
    CHECK(full.outer.support == std::vector<int>{0, 1});
    CHECK(full.inner.dimension() == 2);

    CHECK_THROWS_AS(ideal_sandwich(diag, std::vector<int>{}), InvalidInput);
}

TEST_CASE("nonsingular structure matrices collapse the sandwich") {
    Rng rng(909);
    int produced = 0;
    while (produced < 15) {
        const int n = rng.uniform(1, 6);
        auto alg = random_algebra(rng, n, 0.5);
        if (rank(alg.structure_matrix()) != static_cast<std::size_t>(n)) continue;
        ++produced;
        std::vector<int> s;
        for (int i = 0; i < n; ++i)
            if (rng.chance(0.5)) s.push_back(i);
        if (s.empty()) s.push_back(rng.uniform(0, n - 1));
        CHECK(ideal_sandwich(alg, s).equal);
    }
}

TEST_CASE("quotient_mod_radical is diagonal and nonzero") {
    auto seven = quotient_mod_radical(two_block_7x7());
    REQUIRE(seven.size() == 2);
    CHECK(seven[0] == gq(1));
    CHECK(seven[1] == gq(1));

    CHECK(quotient_mod_radical(radical_pair_2x2()).empty());

    auto diag = quotient_mod_radical(diagonal_algebra({gq(2), gq(-1, 3)}));
    REQUIRE(diag.size() == 2);
    CHECK(diag[0] == gq(2));
    CHECK(diag[1] == gq(-1, 3));
}

TEST_CASE("square membership test across maximal modular ideals") {
    Rng rng(1010);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = rng.uniform(1, 8);
        auto alg = random_algebra(rng, n);
        for (const auto& ideal : maximal_modular_ideals(alg)) {
            CHECK(ideal.support.size() == static_cast<std::size_t>(n) - 1);
            for (int i = 0; i < n; ++i) {
                const bool ei_in = in_coordinate_span(Element::basis_vector(n, i), ideal.support);
                const bool sq_in = in_coordinate_span(alg.basis_square(i), ideal.support);
                CHECK(ei_in == sq_in);
            }
        }
    }
}

TEST_CASE("modular units satisfy the modularity contract") {
    Rng rng(1111);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = rng.uniform(1, 8);
        auto alg = random_algebra(rng, n);
        for (const auto& ideal : maximal_modular_ideals(alg)) {
            for (int i = 0; i < n; ++i) {
                Element ei = Element::basis_vector(n, i);
                Element defect = ei - product(alg, ei, *ideal.modular_unit);
                CHECK(in_coordinate_span(defect, ideal.support));
            }
        }
    }
}

TEST_CASE("radical membership is closed under squaring") {
    Rng rng(1212);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = rng.uniform(1, 8);
        auto alg = random_algebra(rng, n);
        auto rad = jacobson_radical(alg);
        for (int i = 0; i < n; ++i) {
            const bool ei_in = contains_sorted(rad.radical_support, i);
            const bool sq_in = is_subset_sorted(alg.basis_square(i).support, rad.radical_support);
            CHECK(ei_in == sq_in);
        }
    }
}

TEST_CASE("all-nilpotent coordinate ideals live inside the radical") {
    Rng rng(1313);
    int found = 0;
    for (int trial = 0; trial < 60; ++trial) {
        const int n = rng.uniform(2, 6);
        auto alg = random_algebra(rng, n, 0.3);
        DescentGraph g(alg);
        // Close a random seed set so the coordinate span is an ideal.
        std::vector<int> s;
        for (int i = 0; i < n; ++i)
            if (rng.chance(0.4)) s.push_back(i);
        if (s.empty()) continue;
        s = set_union_sorted(s, g.descendants_of_set(s));
        if (s.size() == static_cast<std::size_t>(n)) continue;
        std::vector<Element> basis;
        for (int i : s) basis.push_back(Element::basis_vector(n, i));
        auto scan = scan_subspace_nilpotency(alg, basis, 8, 99);
        if (scan.outcome != NilpotencyOutcome::all_nilpotent) continue;
        ++found;
        auto rad = jacobson_radical(alg);
        CHECK(is_subset_sorted(s, rad.radical_support));
    }
    CHECK(found > 0);
}

TEST_CASE("radical equals the intersection of maximal modular ideal supports") {
    Rng rng(1414);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = rng.uniform(1, 8);
        auto alg = random_algebra(rng, n);
        auto ideals = maximal_modular_ideals(alg);
        if (ideals.empty()) continue;
        std::vector<int> inter = all_indexes(n);
        for (const auto& ideal : ideals) {
            std::vector<int> next;
            std::set_intersection(inter.begin(), inter.end(), ideal.support.begin(),
                                  ideal.support.end(), std::back_inserter(next));
            inter = std::move(next);
        }
        CHECK(jacobson_radical(alg).radical_support == inter);
    }
}
