#pragma once

#include <string>
#include <vector>

#include "baxterlab/trees.hpp"

namespace baxterlab {

// Permutation of {1..n} in one-line notation.
struct Permutation {
    std::vector<int> entries;

    Permutation() = default;
    explicit Permutation(std::vector<int> e);

    size_t size() const { return entries.size(); }
    int operator[](size_t i) const { return entries[i]; } // 0-based position
    bool operator==(const Permutation &o) const = default;
    bool operator<(const Permutation &o) const { return entries < o.entries; }

    std::string str() const; // comma-separated one-line notation
    static Permutation parse(const std::string &s);
};

Permutation reverse(const Permutation &p);
Permutation complement(const Permutation &p);

size_t descent_count(const Permutation &p);
size_t rise_count(const Permutation &p);

// Avoids the vincular patterns 2-41-3 and 3-14-2.
bool is_baxter(const Permutation &p);

// a1 < a2 > a3 < a4 > ...
bool is_alternating(const Permutation &p);

// pi equals the complement of its reverse (half-turn of the 0-1 matrix).
bool is_symmetric_permutation(const Permutation &p);

FullBinaryTree max_tree(const Permutation &p);
FullBinaryTree min_tree(const Permutation &p);

// (Max(pi), Min(reverse(pi))); requires pi Baxter.
TwinBinaryPair twin_pair_of_baxter(const Permutation &p);

// Prune the sibling leaf pairs of an alternating-Baxter twin pair; the
// result is an unconstrained pair of full binary trees.
std::pair<FullBinaryTree, FullBinaryTree> prune_alternating_pair(const TwinBinaryPair &p);
TwinBinaryPair graft_alternating_pair(const FullBinaryTree &a, const FullBinaryTree &b);

} // namespace baxterlab
