#include <doctest.h>

#include "evolkit/errors.hpp"
#include "evolkit/linalg.hpp"
#include "test_support.hpp"

using namespace evolkit;
using namespace evolkit::testing;

namespace {

bool proportional(const Vector& a, const Vector& b) {
    GaussianRational k;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero() != b[i].is_zero()) return false;
        if (a[i].is_zero()) continue;
        GaussianRational r = a[i] / b[i];
        if (k.is_zero())
            k = r;
        else if (k != r)
            return false;
    }
    return !k.is_zero();
}

} // namespace

TEST_CASE("solve_linear identity system") {
    auto a = mat({{gq(1), gq(0)}, {gq(0), gq(1)}});
    auto sol = solve_linear(a, {gq(2), gq(3)});
    REQUIRE(sol.kind == SolutionKind::unique);
    CHECK(*sol.particular == Vector{gq(2), gq(3)});
    CHECK(sol.nullspace_basis.empty());
}

TEST_CASE("solve_linear detects inconsistency") {
    auto a = mat({{gq(0), gq(0)}, {gq(0), gq(-1)}});
    auto sol = solve_linear(a, {gq(1), gq(0)});
    CHECK(sol.kind == SolutionKind::inconsistent);
    CHECK(!sol.particular.has_value());
}

TEST_CASE("solve_linear affine family") {
    auto a = mat({{gq(1), gq(1)}, {gq(2), gq(2)}});
    Vector b{gq(1), gq(2)};
    auto sol = solve_linear(a, b);
    REQUIRE(sol.kind == SolutionKind::affine_family);
    CHECK(*sol.particular == Vector{gq(1), gq(0)});
    CHECK(a.apply(*sol.particular) == b);
    REQUIRE(sol.nullspace_basis.size() == 1);
    for (const auto& v : sol.nullspace_basis)
        CHECK(a.apply(v) == Vector{gq(0), gq(0)});
    Vector expected{gq(1), gq(-1)};
    CHECK(proportional(sol.nullspace_basis[0], expected));
}

TEST_CASE("solve_linear rejects mismatched rhs") {
    auto a = mat({{gq(1), gq(0)}});
    CHECK_THROWS_AS(solve_linear(a, {gq(1), gq(2)}), InvalidInput);
}

TEST_CASE("rank examples") {
    CHECK(rank(DenseMatrix(3, 3)) == 0);
    CHECK(rank(DenseMatrix::identity(4)) == 4);
    CHECK(rank(mat({{gq(1, 6), gq(-1, 4)}, {gq(1, 6), gq(-1, 4)}})) == 1);
}

TEST_CASE("char_poly worked examples") {
    CHECK(char_poly(DenseMatrix::identity(2)) == Poly({gq(1), gq(-2), gq(1)}));
    auto l = mat({{gq(1, 4), gq(-1, 4)}, {gq(1, 6), gq(-1, 6)}});
    CHECK(char_poly(l) == Poly({gq(0), gq(-1, 12), gq(1)}));
    CHECK(char_poly(DenseMatrix(3, 3)) == Poly::monomial(3));
    CHECK_THROWS_AS(char_poly(DenseMatrix(2, 3)), InvalidInput);
}

TEST_CASE("char_poly is a similarity invariant") {
    Rng rng(101);
    for (int trial = 0; trial < 25; ++trial) {
        const int n = rng.uniform(1, 6);
        DenseMatrix a(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c) a.at(r, c) = GaussianRational(rng.rational(3));
        // P = L U with unit diagonals is invertible by construction.
        DenseMatrix lmat = DenseMatrix::identity(static_cast<std::size_t>(n));
        DenseMatrix umat = DenseMatrix::identity(static_cast<std::size_t>(n));
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c) {
                if (r > c) lmat.at(r, c) = GaussianRational(rng.rational(2));
                if (r < c) umat.at(r, c) = GaussianRational(rng.rational(2));
            }
        DenseMatrix p = lmat * umat;
        DenseMatrix pa = p * a;
        // X = P A P^{-1} recovered row by row from P^T X^T = (P A)^T.
        DenseMatrix pt(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c) pt.at(r, c) = p.at(c, r);
        DenseMatrix x(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
        for (int r = 0; r < n; ++r) {
            Vector rhs(static_cast<std::size_t>(n));
            for (int c = 0; c < n; ++c) rhs[static_cast<std::size_t>(c)] = pa.at(r, c);
            auto sol = solve_linear(pt, rhs);
            REQUIRE(sol.kind == SolutionKind::unique);
            for (int c = 0; c < n; ++c) x.at(r, c) = (*sol.particular)[static_cast<std::size_t>(c)];
        }
        CHECK(char_poly(x) == char_poly(a));
    }
}

TEST_CASE("rational_roots worked examples") {
    SUBCASE("x^2 - x/12") {
        auto rr = rational_roots(Poly({gq(0), gq(-1, 12), gq(1)}));
        CHECK(rr.roots == std::vector<GaussianRational>{gq(0), gq(1, 12)});
        CHECK(rr.residual == Poly::constant(gq(1)));
    }
    SUBCASE("x^2 + 1 splits over the Gaussian rationals") {
        auto rr = rational_roots(Poly({gq(1), gq(0), gq(1)}));
        REQUIRE(rr.roots.size() == 2);
        CHECK(rr.roots[0] == -GaussianRational::imaginary_unit());
        CHECK(rr.roots[1] == GaussianRational::imaginary_unit());
        CHECK(rr.residual == Poly::constant(gq(1)));
    }
    SUBCASE("x^2 - 2 stays in the residual") {
        Poly p({gq(-2), gq(0), gq(1)});
        auto rr = rational_roots(p);
        CHECK(rr.roots.empty());
        CHECK(rr.residual == p);
    }
    SUBCASE("zero polynomial rejected") { CHECK_THROWS_AS(rational_roots(Poly()), InvalidInput); }
}

TEST_CASE("rational_roots reconstruction property") {
    Rng rng(202);
    for (int trial = 0; trial < 40; ++trial) {
        Poly p = Poly::constant(GaussianRational(rng.nonzero_rational()));
        const int nroots = rng.uniform(0, 4);
        for (int k = 0; k < nroots; ++k)
            p = p * Poly({-GaussianRational(rng.rational(3)), gq(1)});
        if (rng.chance(0.5)) p = p * Poly({gq(-2), gq(0), gq(1)});
        auto rr = rational_roots(p);
        Poly rebuilt = rr.residual;
        for (const auto& r : rr.roots) rebuilt = rebuilt * Poly({-r, gq(1)});
        CHECK(rebuilt == p);
        for (const auto& r : rr.roots) CHECK(p.eval(r).is_zero());
    }
}

TEST_CASE("rational_roots finds purely imaginary pairs in higher degree") {
    Poly p = Poly({gq(4), gq(0), gq(1)}) * Poly({gq(-1, 3), gq(1)});
    auto rr = rational_roots(p);
    REQUIRE(rr.roots.size() == 3);
    CHECK(rr.residual == Poly::constant(gq(1)));
    CHECK(p.eval(GaussianRational(Rational(0), Rational(2))).is_zero());
}

TEST_CASE("rational_roots solves complex quadratics exactly") {
    GaussianRational root(Rational(2), Rational(1)); // 2 + i
    Poly p = Poly({-root, gq(1)}) * Poly({root, gq(1)});
    auto rr = rational_roots(p);
    REQUIRE(rr.roots.size() == 2);
    CHECK(rr.residual == Poly::constant(gq(1)));
}

TEST_CASE("numeric_roots worked examples") {
    SUBCASE("x^2 - 2") {
        auto roots = numeric_roots(Poly({gq(-2), gq(0), gq(1)}));
        REQUIRE(roots.size() == 2);
        CHECK(std::abs(roots[0].real() + 1.4142135623730951) < 1e-9);
        CHECK(std::abs(roots[1].real() - 1.4142135623730951) < 1e-9);
        CHECK(std::abs(roots[0].imag()) < 1e-9);
    }
    SUBCASE("x^3") {
        auto roots = numeric_roots(Poly::monomial(3));
        REQUIRE(roots.size() == 3);
        for (auto z : roots) CHECK(std::abs(z) < 1e-12);
    }
    SUBCASE("x^2 - x/12") {
        auto roots = numeric_roots(Poly({gq(0), gq(-1, 12), gq(1)}));
        REQUIRE(roots.size() == 2);
        CHECK(std::abs(roots[0]) < 1e-12);
        CHECK(std::abs(roots[1] - std::complex<double>(1.0 / 12, 0)) < 1e-9);
    }
    SUBCASE("rejects bad arguments") {
        CHECK_THROWS_AS(numeric_roots(Poly()), InvalidInput);
        CHECK_THROWS_AS(numeric_roots(Poly::monomial(1), -1.0), InvalidInput);
    }
    SUBCASE("iteration cap failure carries best iterate") {
        try {
            numeric_roots(Poly({gq(-2), gq(0), gq(1)}), 1e-9, 0);
            FAIL("expected NumericFailure");
        } catch (const NumericFailure& e) {
            CHECK(e.best_iterate.size() == 2);
        }
    }
}

TEST_CASE("is_nilpotent_matrix examples and brute-force oracle") {
    CHECK(is_nilpotent_matrix(mat({{gq(0), gq(0)}, {gq(1), gq(0)}})));
    CHECK(!is_nilpotent_matrix(mat({{gq(0), gq(1)}, {gq(1), gq(0)}})));
    CHECK(!is_nilpotent_matrix(DenseMatrix::identity(3)));
    CHECK_THROWS_AS(is_nilpotent_matrix(DenseMatrix(2, 3)), InvalidInput);

    Rng rng(303);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = rng.uniform(1, 6);
        DenseMatrix a(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c)
                if (rng.chance(0.35)) a.at(r, c) = GaussianRational(rng.nonzero_rational(2));
        const bool brute = mat_power(a, static_cast<unsigned>(n)).is_zero();
        CHECK(is_nilpotent_matrix(a) == brute);
    }
}

TEST_CASE("independent_subset scans greedily") {
    std::vector<Vector> vs{{gq(1), gq(1)}, {gq(2), gq(2)}, {gq(0), gq(1)}};
    auto idx = independent_subset(vs);
    CHECK(idx == std::vector<std::size_t>{0, 2});
    CHECK(span_dimension(vs) == 2);
}
