#ifndef EVOLKIT_RADICAL_HPP
#define EVOLKIT_RADICAL_HPP

#include <optional>
#include <span>
#include <vector>

#include "evolkit/algebra.hpp"

namespace evolkit {

enum class BasisKind { coordinate_span, vector_span };

/// An ideal described either by a coordinate support (span of basis
/// vectors) or by a list of independent generating vectors.
struct IdealDescriptor {
    std::vector<int> support;
    BasisKind basis_kind = BasisKind::coordinate_span;
    std::vector<Element> generators; ///< independent, for vector_span
    std::optional<Element> modular_unit;

    std::size_t dimension() const {
        return basis_kind == BasisKind::coordinate_span ? support.size() : generators.size();
    }
};

enum class RadicalClass { semisimple, radical, intermediate };

struct RadicalReport {
    std::vector<int> modular_indexes;
    std::vector<int> radical_support;
    RadicalClass classification = RadicalClass::radical;
    std::vector<GaussianRational> quotient_diag; ///< aligned with modular_indexes
};

/// Indexes i with a nonzero diagonal entry and no other nonzero entry in
/// row i of the structure matrix, i.e. e_i appears only in e_i^2.
std::vector<int> modular_indexes(const EvolutionAlgebra& alg);

/// One codimension-one ideal per modular index i0: support without i0,
/// modular unit (1/w_{i0,i0}) e_i0.
std::vector<IdealDescriptor> maximal_modular_ideals(const EvolutionAlgebra& alg);

RadicalReport jacobson_radical(const EvolutionAlgebra& alg);

struct ModularSupportCheck {
    bool valid = false;
    std::optional<Element> unit;
};

/// Validates a proper nonempty support as a modular-ideal support:
/// D(support) inside support, and every outside index lies on a cycle whose
/// other descendants fall inside the support.
ModularSupportCheck is_modular_ideal_support(const EvolutionAlgebra& alg, std::span<const int> support);

/// The ideal generated by e_i^2: span of {e_j^2 : j in D(i) or j = i}.
IdealDescriptor square_ideal(const EvolutionAlgebra& alg, int i);

struct IdealSandwichResult {
    IdealDescriptor inner; ///< span of the squares over the closed support
    IdealDescriptor outer; ///< coordinate span of the closed support
    bool equal = false;
};

/// For a support S0, with S = S0 union D(S0): the squares span sits inside
/// the coordinate span; they coincide whenever det M != 0.
IdealSandwichResult ideal_sandwich(const EvolutionAlgebra& alg, std::span<const int> support);

/// Structure constants of the quotient modulo the radical in the image
/// basis: the diagonal entries at the modular indexes (empty for a radical
/// algebra).
std::vector<GaussianRational> quotient_mod_radical(const EvolutionAlgebra& alg);

} // namespace evolkit

#endif
