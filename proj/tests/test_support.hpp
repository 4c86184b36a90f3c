#ifndef EVOLKIT_TEST_SUPPORT_HPP
#define EVOLKIT_TEST_SUPPORT_HPP

#include <random>
#include <vector>

#include "evolkit/algebra.hpp"
#include "evolkit/descent.hpp"
#include "evolkit/matrix.hpp"

namespace evolkit::testing {

inline GaussianRational gq(long num, long den = 1) {
    return GaussianRational(make_rational(mpz_class(num), mpz_class(den)));
}

inline DenseMatrix mat(const std::vector<std::vector<GaussianRational>>& rows) {
    DenseMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < rows[r].size(); ++c) m.at(r, c) = rows[r][c];
    return m;
}

/// Algebra from the dense structure matrix given row by row.
inline EvolutionAlgebra algebra_from_rows(const std::vector<std::vector<GaussianRational>>& rows) {
    const int n = static_cast<int>(rows.size());
    std::vector<EvolutionAlgebra::Column> columns(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            const GaussianRational& v = rows[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)];
            if (!v.is_zero()) columns[static_cast<std::size_t>(i)].push_back({k, v});
        }
    return {n, std::move(columns)};
}

inline Element elem(const std::vector<GaussianRational>& coeffs) {
    return Element::from_coeffs(Vector(coeffs.begin(), coeffs.end()));
}

// -- fixtures -----------------------------------------------------------------

/// Structure matrix [[-1/2, 3/4], [-1/3, 1/2]]: a radical algebra whose
/// generator squares still have nonzero eigenvalues.
inline EvolutionAlgebra radical_pair_2x2() {
    return algebra_from_rows({{gq(-1, 2), gq(3, 4)}, {gq(-1, 3), gq(1, 2)}});
}

/// e1^2 = e1, e2^2 = e1 + e2.
inline EvolutionAlgebra half_modular_2x2() {
    return algebra_from_rows({{gq(1), gq(1)}, {gq(0), gq(1)}});
}

/// e1^2 = e2, e2^2 = e1: every basis vector is nilpotent, their sum is not.
inline EvolutionAlgebra swap_2x2() {
    return algebra_from_rows({{gq(0), gq(1)}, {gq(1), gq(0)}});
}

/// e1^2 = 0, e2^2 = e2.
inline EvolutionAlgebra degenerate_2x2() {
    return algebra_from_rows({{gq(0), gq(0)}, {gq(0), gq(1)}});
}

inline EvolutionAlgebra diagonal_algebra(const std::vector<GaussianRational>& diag) {
    std::vector<std::vector<GaussianRational>> rows(diag.size(),
                                                    std::vector<GaussianRational>(diag.size()));
    for (std::size_t i = 0; i < diag.size(); ++i) rows[i][i] = diag[i];
    return algebra_from_rows(rows);
}

inline EvolutionAlgebra zero_product_algebra(int n) {
    return {n, std::vector<EvolutionAlgebra::Column>(static_cast<std::size_t>(n))};
}

/// Seven-dimensional two-component fixture: indexes 1..3 form a strongly
/// connected block fed by 7, indexes 4..5 are self-looped and fed by 6;
/// rows 6 and 7 are diagonal-only. All marked entries are 1.
inline EvolutionAlgebra two_block_7x7() {
    auto o = gq(1);
    auto z = gq(0);
    return algebra_from_rows({
        {o, o, o, z, z, z, o},
        {o, o, o, z, z, z, o},
        {o, o, o, z, z, z, o},
        {z, z, z, o, z, o, z},
        {z, z, z, z, o, o, z},
        {z, z, z, z, z, o, z},
        {z, z, z, z, z, z, o},
    });
}

/// e_i^2 = e_{i+1}, last column zero.
inline EvolutionAlgebra chain_algebra(int n) {
    std::vector<EvolutionAlgebra::Column> columns(static_cast<std::size_t>(n));
    for (int i = 0; i + 1 < n; ++i) columns[static_cast<std::size_t>(i)].push_back({i + 1, gq(1)});
    return {n, std::move(columns)};
}

// -- randomized generation ----------------------------------------------------

struct Rng {
    std::mt19937_64 eng;
    explicit Rng(std::uint64_t seed) : eng(seed) {}

    int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(eng); }
    bool chance(double p) { return std::uniform_real_distribution<double>(0, 1)(eng) < p; }

    Rational rational(int mag = 4) {
        int num = uniform(-mag, mag);
        int den = uniform(1, mag);
        return make_rational(num, den);
    }
    Rational nonzero_rational(int mag = 4) {
        Rational r;
        do r = rational(mag);
        while (sgn(r) == 0);
        return r;
    }
};

inline EvolutionAlgebra random_algebra(Rng& rng, int n, double density = 0.4) {
    std::vector<EvolutionAlgebra::Column> columns(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k)
            if (rng.chance(density))
                columns[static_cast<std::size_t>(i)].push_back({k, GaussianRational(rng.nonzero_rational())});
    return {n, std::move(columns)};
}

inline Element random_element(Rng& rng, int n, double density = 0.6) {
    Vector c(static_cast<std::size_t>(n));
    for (auto& x : c)
        if (rng.chance(density)) x = GaussianRational(rng.nonzero_rational());
    return Element::from_coeffs(std::move(c));
}

inline DescentGraph random_graph(Rng& rng, int n, double density = 0.3) {
    std::vector<std::vector<int>> out(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (rng.chance(density)) out[static_cast<std::size_t>(i)].push_back(j);
    return {n, std::move(out)};
}

// -- oracles ------------------------------------------------------------------

inline DenseMatrix mat_power(const DenseMatrix& a, unsigned k) {
    DenseMatrix acc = DenseMatrix::identity(a.rows());
    for (unsigned t = 0; t < k; ++t) acc = acc * a;
    return acc;
}

/// Column i of the m-th boolean power of the adjacency matrix
/// (entry (j, i) set iff edge i -> j), as a sorted index set.
inline std::vector<int> boolean_power_column(const DescentGraph& g, int i, unsigned m) {
    const int n = g.size();
    std::vector<std::vector<bool>> b(static_cast<std::size_t>(n), std::vector<bool>(static_cast<std::size_t>(n)));
    for (int col = 0; col < n; ++col)
        for (int row : g.first_generation(col)) b[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)] = true;
    std::vector<std::vector<bool>> acc = b;
    for (unsigned t = 1; t < m; ++t) {
        std::vector<std::vector<bool>> next(static_cast<std::size_t>(n),
                                            std::vector<bool>(static_cast<std::size_t>(n)));
        for (int r = 0; r < n; ++r)
            for (int k = 0; k < n; ++k)
                if (acc[static_cast<std::size_t>(r)][static_cast<std::size_t>(k)])
                    for (int c = 0; c < n; ++c)
                        if (b[static_cast<std::size_t>(k)][static_cast<std::size_t>(c)])
                            next[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = true;
        acc = std::move(next);
    }
    std::vector<int> out;
    for (int r = 0; r < n; ++r)
        if (acc[static_cast<std::size_t>(r)][static_cast<std::size_t>(i)]) out.push_back(r);
    return out;
}

} // namespace evolkit::testing

#endif
