#include "evolkit/descent.hpp"

#include <algorithm>

#include "evolkit/errors.hpp"

namespace evolkit {

std::vector<int> set_union_sorted(std::span<const int> a, std::span<const int> b) {
    std::vector<int> out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

std::vector<int> set_difference_sorted(std::span<const int> a, std::span<const int> b) {
    std::vector<int> out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

bool is_subset_sorted(std::span<const int> a, std::span<const int> b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

bool contains_sorted(std::span<const int> s, int v) {
    return std::binary_search(s.begin(), s.end(), v);
}

DescentGraph::DescentGraph(const EvolutionAlgebra& alg) : n_(alg.dim()), out_(static_cast<std::size_t>(n_)) {
    for (int i = 0; i < n_; ++i)
        for (const auto& entry : alg.column(i)) out_[static_cast<std::size_t>(i)].push_back(entry.row);
}

DescentGraph::DescentGraph(int n, std::vector<std::vector<int>> out_edges)
    : n_(n), out_(std::move(out_edges)) {
    if (out_.size() != static_cast<std::size_t>(n_)) throw InvalidInput("descent graph: edge list size mismatch");
    for (auto& edges : out_) {
        std::sort(edges.begin(), edges.end());
        edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
        for (int j : edges)
            if (j < 0 || j >= n_) throw InvalidInput("descent graph: edge endpoint out of range");
    }
}

void DescentGraph::check_index(int i) const {
    if (i < 0 || i >= n_) throw InvalidInput("descent graph: index out of range");
}

const std::vector<int>& DescentGraph::first_generation(int i) const {
    check_index(i);
    return out_[static_cast<std::size_t>(i)];
}

std::vector<int> DescentGraph::nth_generation(int i, unsigned m) const {
    check_index(i);
    if (m == 0) throw InvalidInput("nth_generation: generation must be at least 1");
    std::vector<int> frontier{i};
    for (unsigned step = 0; step < m; ++step) {
        std::vector<int> next;
        for (int j : frontier) next = set_union_sorted(next, out_[static_cast<std::size_t>(j)]);
        frontier = std::move(next);
        if (frontier.empty()) break;
    }
    return frontier;
}

std::vector<int> DescentGraph::descendants(int i) const {
    check_index(i);
    std::vector<bool> seen(static_cast<std::size_t>(n_), false);
    std::vector<int> stack = out_[static_cast<std::size_t>(i)];
    for (int j : stack) seen[static_cast<std::size_t>(j)] = true;
    while (!stack.empty()) {
        int j = stack.back();
        stack.pop_back();
        for (int k : out_[static_cast<std::size_t>(j)]) {
            if (!seen[static_cast<std::size_t>(k)]) {
                seen[static_cast<std::size_t>(k)] = true;
                stack.push_back(k);
            }
        }
    }
    std::vector<int> out;
    for (int j = 0; j < n_; ++j)
        if (seen[static_cast<std::size_t>(j)]) out.push_back(j);
    return out;
}

std::vector<int> DescentGraph::descendants_of_set(std::span<const int> s) const {
    std::vector<bool> seen(static_cast<std::size_t>(n_), false);
    std::vector<int> stack;
    for (int i : s) {
        check_index(i);
        for (int j : out_[static_cast<std::size_t>(i)])
            if (!seen[static_cast<std::size_t>(j)]) {
                seen[static_cast<std::size_t>(j)] = true;
                stack.push_back(j);
            }
    }
    while (!stack.empty()) {
        int j = stack.back();
        stack.pop_back();
        for (int k : out_[static_cast<std::size_t>(j)])
            if (!seen[static_cast<std::size_t>(k)]) {
                seen[static_cast<std::size_t>(k)] = true;
                stack.push_back(k);
            }
    }
    std::vector<int> out;
    for (int j = 0; j < n_; ++j)
        if (seen[static_cast<std::size_t>(j)]) out.push_back(j);
    return out;
}

} // namespace evolkit
