#ifndef EVOLKIT_DESCENT_HPP
#define EVOLKIT_DESCENT_HPP

#include <span>
#include <vector>

#include "evolkit/algebra.hpp"

namespace evolkit {

/// Sorted index-set helpers shared by the reachability and ideal code.
std::vector<int> set_union_sorted(std::span<const int> a, std::span<const int> b);
std::vector<int> set_difference_sorted(std::span<const int> a, std::span<const int> b);
bool is_subset_sorted(std::span<const int> a, std::span<const int> b);
bool contains_sorted(std::span<const int> s, int v);

/// Directed graph with an edge i -> j iff the coefficient of e_j in e_i^2
/// is nonzero. Descendant sets are reachability sets in this graph.
class DescentGraph {
public:
    explicit DescentGraph(const EvolutionAlgebra& alg);
    DescentGraph(int n, std::vector<std::vector<int>> out_edges);

    int size() const { return n_; }

    /// D^1(i): the support of e_i^2.
    const std::vector<int>& first_generation(int i) const;

    /// D^m(i): endpoints of length-m walks from i; m must be at least 1.
    std::vector<int> nth_generation(int i, unsigned m) const;

    /// D(i): endpoints of walks of length >= 1 (so i itself appears only
    /// when it lies on a cycle).
    std::vector<int> descendants(int i) const;

    /// D(S) = union of D(i) over i in S.
    std::vector<int> descendants_of_set(std::span<const int> s) const;

private:
    void check_index(int i) const;

    int n_;
    std::vector<std::vector<int>> out_;
};

} // namespace evolkit

#endif
