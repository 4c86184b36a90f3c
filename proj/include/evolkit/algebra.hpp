#ifndef EVOLKIT_ALGEBRA_HPP
#define EVOLKIT_ALGEBRA_HPP

#include <optional>
#include <string>
#include <vector>

#include "evolkit/matrix.hpp"

namespace evolkit {

/// An element a = sum_i coeffs[i] e_i in the reference natural basis,
/// with its support (indexes of exact-nonzero coefficients) cached.
struct Element {
    Vector coeffs;
    std::vector<int> support;

    static Element from_coeffs(Vector c);
    static Element zero(int n) { return from_coeffs(Vector(static_cast<std::size_t>(n))); }
    static Element basis_vector(int n, int i);

    int dim() const { return static_cast<int>(coeffs.size()); }
    bool is_zero() const { return support.empty(); }

    friend bool operator==(const Element& a, const Element& b) { return a.coeffs == b.coeffs; }

    Element operator+(const Element& o) const;
    Element operator-(const Element& o) const;
    Element scaled(const GaussianRational& s) const;
};

/// A finite-dimensional evolution algebra, stored as the column-sparse
/// structure matrix: column i holds the coefficients of e_i^2, so the
/// entry in row k of column i is the coefficient of e_k in e_i^2.
class EvolutionAlgebra {
public:
    struct ColumnEntry {
        int row;
        GaussianRational value;
    };
    using Column = std::vector<ColumnEntry>;

    EvolutionAlgebra(int n, std::vector<Column> columns,
                     std::optional<std::vector<std::string>> labels = std::nullopt);

    int dim() const { return n_; }
    const Column& column(int i) const;

    /// Entry (k, i) of the structure matrix; zero when absent.
    GaussianRational entry(int k, int i) const;

    /// e_i^2 as an element.
    Element basis_square(int i) const;

    DenseMatrix structure_matrix() const;

    /// Columns j with a nonzero entry in row k.
    std::vector<int> row_support(int k) const;

    const std::optional<std::vector<std::string>>& labels() const { return labels_; }

private:
    int n_;
    std::vector<Column> columns_;
    std::optional<std::vector<std::string>> labels_;
};

/// ab = M (alpha_1 beta_1, ..., alpha_n beta_n)^T.
Element product(const EvolutionAlgebra& alg, const Element& a, const Element& b);

/// Matrix of the multiplication operator by a (left equals right by
/// commutativity): M diag(alpha).
DenseMatrix left_mul_matrix(const EvolutionAlgebra& alg, const Element& a);

/// Left-normed power a^k = L_a^{k-1}(a); k must be at least 1.
Element element_power(const EvolutionAlgebra& alg, const Element& a, unsigned k);

/// The unit, which exists iff the structure matrix is diagonal with
/// nonzero diagonal; then e = sum_i (1/w_ii) e_i.
std::optional<Element> unit_of(const EvolutionAlgebra& alg);

/// Indexes i with e_i^2 = 0. The algebra is non-degenerate iff this is empty.
std::vector<int> annihilator(const EvolutionAlgebra& alg);

/// True iff every column i is exactly {(i, w_ii)} with w_ii nonzero.
bool is_nonzero_trivial(const EvolutionAlgebra& alg);

struct BasisCandidate {
    std::vector<Element> vectors; ///< coordinates in the reference basis
};

/// True iff the candidate vectors are linearly independent and every
/// distinct pair multiplies to zero.
bool verify_natural_basis(const EvolutionAlgebra& alg, const BasisCandidate& c);

/// True iff the change of coordinates from c1 to c2 is a scaled permutation.
bool bases_related(const BasisCandidate& c1, const BasisCandidate& c2);

/// The unitization is an evolution algebra iff the algebra is non-zero trivial.
bool unitization_is_evolution(const EvolutionAlgebra& alg);

} // namespace evolkit

#endif
