#ifndef EVOLKIT_MULTIPOLY_HPP
#define EVOLKIT_MULTIPOLY_HPP

#include <cstdint>
#include <map>
#include <vector>

#include "evolkit/rational.hpp"

namespace evolkit {

/// Sparse multivariate polynomial over the Gaussian rationals with a fixed
/// variable count. Only the few operations the nilpotency scan needs.
class MultiPoly {
public:
    using Exponents = std::vector<std::uint32_t>;

    explicit MultiPoly(std::size_t nvars) : nvars_(nvars) {}

    static MultiPoly constant(std::size_t nvars, const GaussianRational& c);
    /// Linear form sum_k coeffs[k] t_k.
    static MultiPoly linear_form(const std::vector<GaussianRational>& coeffs);

    std::size_t nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    void add_term(const Exponents& e, const GaussianRational& c);

    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly scaled(const GaussianRational& c) const;

    GaussianRational eval(const std::vector<GaussianRational>& point) const;

    /// Substitute variable `var` by a constant; the result keeps the same
    /// variable count with that slot unused.
    MultiPoly substituted(std::size_t var, const GaussianRational& value) const;

    std::uint32_t degree_in(std::size_t var) const;

private:
    std::size_t nvars_;
    std::map<Exponents, GaussianRational> terms_;
};

} // namespace evolkit

#endif
