#pragma once

#include <vector>

#include "baxterlab/bitstring.hpp"
#include "baxterlab/trees.hpp"

namespace baxterlab {

struct Point {
    long x = 0, y = 0;
    bool operator==(const Point &o) const = default;
    auto operator<=>(const Point &o) const = default;
};

// Upright lattice path: 1 -> step Right, 0 -> step Up.  A string with k ones
// ends k to the right of its start.
struct LatticePath {
    Point start;
    BitString steps;

    Point end() const;
    std::vector<Point> points() const; // all visited points, start included
    bool operator==(const LatticePath &o) const = default;
    bool operator<(const LatticePath &o) const;
};

LatticePath path_of_bits(const BitString &s, Point start);
BitString bits_of_path(const LatticePath &p);

bool paths_disjoint(const LatticePath &a, const LatticePath &b);

// Non-intersecting triple encoding a twin-binary pair with k+1 left and
// l+1 right leaves: starts (0,2),(1,1),(2,0), ends (k,l+2),(k+1,l+1),(k+2,l).
struct PathTriple {
    LatticePath p1, p2, p3;
    bool operator==(const PathTriple &o) const = default;
    bool operator<(const PathTriple &o) const;
};

PathTriple validate_triple(const PathTriple &t);

PathTriple twin_pair_to_triple(const TwinBinaryPair &p);
TwinBinaryPair triple_to_twin_pair(const PathTriple &t);

// True iff the triple is stable under the point reflection at the center of
// p2 (which swaps p1 and p3 and fixes p2 as a set).
bool is_symmetric_triple(const PathTriple &t);

// Pair of non-intersecting paths weakly below the diagonal y <= x:
// p1 from (0,0) to (n,n), p2 from (1,-1) to (n+1,n-1).
struct DyckPair {
    LatticePath p1, p2;
    bool operator==(const DyckPair &o) const = default;
    bool operator<(const DyckPair &o) const;
};

DyckPair validate_dyck_pair(const DyckPair &d);

bool below_diagonal(const LatticePath &p);

// alpha_star = 1+alpha_hat must be a Dyck word dominated by beta_star = 1+beta_hat_r.
DyckPair schnyder_prints_to_dyck_pair(const BitString &alpha_hat, const BitString &beta_hat_r);
std::pair<BitString, BitString> dyck_pair_to_schnyder_prints(const DyckPair &d);

} // namespace baxterlab
