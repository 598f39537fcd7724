#pragma once

#include <memory>
#include <string>
#include <vector>

#include "baxterlab/bitstring.hpp"

namespace baxterlab {

// Rooted ordered tree; children kept in left-to-right order.
struct OrderedTree {
    std::vector<OrderedTree> children;

    size_t vertex_count() const;
    bool operator==(const OrderedTree &o) const = default;
    bool operator<(const OrderedTree &o) const { return children < o.children; }

    std::string str() const;            // balanced parentheses, "(()(()))"
    static OrderedTree parse(const std::string &s);
};

// Full binary tree: every inner node has exactly two children.  Stored as a
// flat node pool; node 0 is the root.  left/right are -1 for leaves.
struct FullBinaryTree {
    struct Node {
        int left = -1;
        int right = -1;
        bool is_leaf() const { return left < 0; }
    };
    std::vector<Node> nodes;

    FullBinaryTree() { nodes.push_back({}); }

    int root() const { return 0; }
    bool leaf(int v) const { return nodes[v].is_leaf(); }
    size_t leaf_count() const;
    size_t inner_count() const { return nodes.size() - leaf_count(); }

    // expands leaf v into an inner node with two fresh leaf children
    void expand(int v);

    bool operator==(const FullBinaryTree &o) const;
    bool operator<(const FullBinaryTree &o) const { return str() < o.str(); }

    std::string str() const;            // "*" leaves, "((**)*)"
    static FullBinaryTree parse(const std::string &s);

    static FullBinaryTree single_inner();          // (**), 2 leaves
    static FullBinaryTree node(const FullBinaryTree &l, const FullBinaryTree &r);
    static FullBinaryTree left_comb(size_t inner);
    static FullBinaryTree right_comb(size_t inner);
};

// The four alternating layout types for rooted ordered trees with extreme
// root.  Root placement left/right and edge halfplane below/above.
enum class LayoutMode { sw, nw, ne, se };  // arrows in the usual notation

// An alternating layout: tree vertices placed on positions 0..n-1 of a line,
// edges as non-crossing arcs in one halfplane, every vertex one-sided.
struct AltLayout {
    size_t n = 0;
    std::vector<std::pair<int, int>> arcs; // (lo, hi) per tree edge
    LayoutMode mode = LayoutMode::ne;
    std::vector<int> positions; // optional: position per external vertex id
};

// Walk numbering of the four alternating layouts.  Clockwise walks visit
// children in reversed order, counterclockwise in natural order; the root
// class is numbered at first or last visit depending on the mode.
AltLayout alt_layout(const OrderedTree &t, LayoutMode mode);
OrderedTree tree_of_layout(const AltLayout &l);

// Bit per position, 1 iff all neighbors are to the right (a "left vertex").
// Requires >= 2 vertices.
BitString fingerprint(const OrderedTree &t, LayoutMode mode);
BitString fingerprint(const AltLayout &l);

// Bit per leaf in left-to-right order, 1 iff the leaf is a left child.
// Requires >= 2 leaves.
BitString fingerprint(const FullBinaryTree &t);

// Bit per inner node in in-order, 1 iff right-child-or-root.
BitString bodyprint(const FullBinaryTree &t);

BitString reduced_fingerprint(const FullBinaryTree &t);
BitString reduced_bodyprint(const FullBinaryTree &t);

size_t left_leaf_count(const FullBinaryTree &t);

// The fingerprint-preserving bijection between alternating trees with n
// vertices (ne-layout) and full binary trees with n leaves.
FullBinaryTree alt_to_binary(const OrderedTree &t);
OrderedTree binary_to_alt(const FullBinaryTree &t);

// Reconstructs the unique full binary tree with the given reduced bodyprint
// and reduced fingerprint; inverse of (reduced_bodyprint, reduced_fingerprint).
FullBinaryTree tree_from_prints(const BitString &beta, const BitString &alpha);

struct TwinBinaryPair {
    FullBinaryTree first, second;
    bool operator==(const TwinBinaryPair &o) const = default;
    bool operator<(const TwinBinaryPair &o) const;
};

struct TwinAlternatingPair {
    OrderedTree first, second;
    bool operator==(const TwinAlternatingPair &o) const = default;
};

// Checks the twin relation alpha(A) = reverse(alpha(B)) on reduced prints.
bool is_twin_binary(const FullBinaryTree &a, const FullBinaryTree &b);
bool is_twin_alternating(const OrderedTree &s, const OrderedTree &t);

TwinBinaryPair make_twin_binary(const FullBinaryTree &a, const FullBinaryTree &b);
TwinAlternatingPair make_twin_alternating(const OrderedTree &s, const OrderedTree &t);

TwinAlternatingPair twin_alt_from_twin_binary(const TwinBinaryPair &p);
TwinBinaryPair twin_binary_from_twin_alt(const TwinAlternatingPair &p);

} // namespace baxterlab
