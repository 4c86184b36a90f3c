#ifndef EVOLKIT_SPECTRA_HPP
#define EVOLKIT_SPECTRA_HPP

#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "evolkit/algebra.hpp"
#include "evolkit/linalg.hpp"

namespace evolkit {

enum class SpectrumKind { spectrum, m_spectrum };
enum class Certainty { exact, mixed };
enum class SpectrumMode { exact, numeric };

/// Point set of a spectrum computation. Exact points are complete whenever
/// certainty is `exact`; a nonconstant residual factor of the characteristic
/// polynomial downgrades the result to `mixed` and, in numeric mode, its
/// roots are reported as numeric points.
struct SpectrumResult {
    SpectrumKind kind = SpectrumKind::m_spectrum;
    std::vector<GaussianRational> exact_points;
    std::vector<std::complex<double>> numeric_points;
    bool contains_zero = false;
    Certainty certainty = Certainty::exact;
};

/// Some b with a + b - ab = 0, or empty when none exists.
std::optional<Element> quasi_inverse(const EvolutionAlgebra& alg, const Element& a);

/// Eigenvalues of the multiplication operator by a, united with {0} when
/// the algebra has no unit.
SpectrumResult m_spectrum(const EvolutionAlgebra& alg, const Element& a,
                          SpectrumMode mode = SpectrumMode::exact, double tol = kDefaultRootTol);

/// Subset of the m-spectrum: a nonzero candidate belongs iff the shifted
/// linear system (M diag(alpha) - lambda I) beta = alpha is inconsistent;
/// zero belongs iff the algebra has no unit or the support of a is proper.
SpectrumResult spectrum(const EvolutionAlgebra& alg, const Element& a,
                        SpectrumMode mode = SpectrumMode::exact, double tol = kDefaultRootTol);

struct SpectralRadii {
    double rho = 0;
    double rho_m = 0;
    bool rho_zero_exact = false;
    bool rho_m_zero_exact = false;
};

SpectralRadii spectral_radii(const EvolutionAlgebra& alg, const Element& a, double tol = kDefaultRootTol);

/// Restriction of the spectral computation to the support of a and its
/// first-generation descendants: index list, principal submatrix, and the
/// coefficient vector padded with exact zeros.
struct SupportRestriction {
    std::vector<int> indices;
    DenseMatrix submatrix;
    Vector padded_alpha;
};

SupportRestriction support_restriction(const EvolutionAlgebra& alg, const Element& a);

/// Whether every element of a subspace has a nilpotent multiplication
/// operator. `all_nilpotent` and `witness_found` are exact; `undetermined`
/// means the symbolic budget was exceeded and every random probe vanished.
enum class NilpotencyOutcome { all_nilpotent, witness_found, undetermined };

struct NilpotencyScan {
    NilpotencyOutcome outcome = NilpotencyOutcome::all_nilpotent;
    std::optional<Element> witness;
    bool symbolic = false;
};

NilpotencyScan scan_subspace_nilpotency(const EvolutionAlgebra& alg, std::span<const Element> generators,
                                        unsigned trials, std::uint64_t seed);

enum class VerdictValue { yes, no, probably_yes };

/// Classifier outcome. `certified` marks verdicts backed by an exact
/// certificate; a randomized-only "no" or an unresolved "probably_yes"
/// leaves it false.
struct SemisimplicityVerdict {
    VerdictValue value = VerdictValue::no;
    bool certified = false;
    std::optional<int> witness_index;        ///< generator index of the counterexample ideal
    std::optional<Element> witness_element;
    std::vector<std::pair<int, Element>> index_witnesses; ///< per-index witnesses for "yes"
};

/// Zero is the only ideal on which the m-spectral radius vanishes. Sweeps
/// the generator ideals: first the exact square test per index, then a
/// symbolic or randomized nilpotency scan of the whole generated subspace.
SemisimplicityVerdict m_semisimple_check(const EvolutionAlgebra& alg, unsigned trials,
                                         std::uint64_t seed = 1);

/// Zero is the only ideal on which the spectral radius vanishes. A "yes"
/// needs an exact witness per generator ideal; a certified "no" comes from
/// the nilpotency argument (a vanishing m-radius forces a vanishing radius).
SemisimplicityVerdict spectrally_semisimple_check(const EvolutionAlgebra& alg, unsigned trials,
                                                  std::uint64_t seed = 1);

} // namespace evolkit

#endif
