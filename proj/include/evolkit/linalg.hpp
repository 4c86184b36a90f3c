#ifndef EVOLKIT_LINALG_HPP
#define EVOLKIT_LINALG_HPP

#include <complex>
#include <optional>
#include <span>
#include <vector>

#include "evolkit/matrix.hpp"
#include "evolkit/poly.hpp"

namespace evolkit {

inline constexpr double kDefaultRootTol = 1e-9;
inline constexpr int kRootIterationCap = 1000;

enum class SolutionKind { unique, affine_family, inconsistent };

/// Full solution set of A x = b over the Gaussian rationals.
struct LinearSolution {
    SolutionKind kind = SolutionKind::inconsistent;
    std::optional<Vector> particular;
    std::vector<Vector> nullspace_basis;
};

/// Exact Gaussian elimination; the pivot is the first exact-nonzero entry
/// in column order.
LinearSolution solve_linear(const DenseMatrix& a, const Vector& b);

std::size_t rank(const DenseMatrix& a);

/// Monic characteristic polynomial det(xI - A) via the Faddeev-LeVerrier
/// recurrence (exact; the only divisions are by integers).
Poly char_poly(const DenseMatrix& a);

struct RationalRoots {
    std::vector<GaussianRational> roots; ///< with multiplicity
    Poly residual;                       ///< p divided by all found linear factors
};

/// All Gaussian-rational roots of p. Candidates come from the rational-root
/// theorem applied after clearing denominators, a purely-imaginary sweep via
/// the even/odd split, and exact quadratic-discriminant solving on degree-2
/// residuals. Anything deeper stays in the residual.
RationalRoots rational_roots(const Poly& p);

/// All complex roots to within tol by Durand-Kerner simultaneous iteration
/// (with a short Newton polish). Throws NumericFailure past the iteration cap.
std::vector<std::complex<double>> numeric_roots(const Poly& p, double tol = kDefaultRootTol,
                                                int iteration_cap = kRootIterationCap);

/// True iff char_poly(A) = x^n.
bool is_nilpotent_matrix(const DenseMatrix& a);

/// Indices (into the input list) of a greedy maximal linearly independent
/// subset, scanning in order.
std::vector<std::size_t> independent_subset(std::span<const Vector> vectors);

std::size_t span_dimension(std::span<const Vector> vectors);

} // namespace evolkit

#endif
