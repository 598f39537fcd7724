#pragma once

#include <vector>

#include "baxterlab/permutation.hpp"
#include "baxterlab/trees.hpp"

namespace baxterlab {

struct Segment {
    bool horizontal = true;
    long coord = 0;   // y for horizontal, x for vertical
    long from = 0;    // x1 resp. y1
    long to = 0;      // x2 resp. y2
    bool operator==(const Segment &o) const = default;
    auto operator<=>(const Segment &o) const = default;
};

// Rectangulation of the diagonal point set X_n = {(i, n+1-i) : 1 <= i <= n}
// inside the square spanned by (0,0) and (n+1,n+1).  All coordinates are
// integers in this model; serialization doubles them.
struct Rectangulation {
    long n = 0;
    std::vector<Segment> segments; // sorted: horizontals then verticals

    long side() const { return n + 1; }
    bool operator==(const Rectangulation &o) const = default;
    bool operator<(const Rectangulation &o) const
    {
        return std::tie(n, segments) < std::tie(o.n, o.segments);
    }
};

struct Rect {
    long x1, y1, x2, y2;
};

// Checks non-crossing, point coverage, and that the segments subdivide the
// square into exactly n+1 rectangles; returns the input.
Rectangulation validate_rectangulation(const Rectangulation &r);

// Rectangles of the subdivision ordered along the diagonal (top-left first);
// the rectangle at diagonal position p covers the diagonal unit [p-1, p].
std::vector<Rect> rectangles(const Rectangulation &r);

Rectangulation rectangulation_of_twin_pair(const TwinBinaryPair &p);
TwinBinaryPair twin_pair_of_rectangulation(const Rectangulation &r);

// The pyramid labeling algorithm; output is Baxter.
Permutation baxter_of_rectangulation(const Rectangulation &r);

Rectangulation rectangulation_of_baxter(const Permutation &p);

} // namespace baxterlab
