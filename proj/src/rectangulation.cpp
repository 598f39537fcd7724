#include "baxterlab/rectangulation.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace baxterlab {

namespace {

// Flat view of a full binary tree with leaf spans and child sides.
struct TreeGeom {
    std::vector<int> parent, side; // side: 0 left child, 1 right child (root: 1)
    std::vector<long> lo, hi;      // span of leaf indices below each node
    std::vector<int> leaves;       // node ids of leaves in left-to-right order
    std::vector<int> inorder;      // node ids of inner vertices in in-order
    const FullBinaryTree *t = nullptr;

    void build(const FullBinaryTree &tree)
    {
        t = &tree;
        size_t n = tree.nodes.size();
        parent.assign(n, -1);
        side.assign(n, 1);
        lo.assign(n, 0);
        hi.assign(n, 0);
        leaves.clear();
        inorder.clear();
        long next = 0;
        rec(0, next);
    }

    void rec(int v, long &next)
    {
        if (t->leaf(v)) {
            lo[v] = hi[v] = next++;
            leaves.push_back(v);
            return;
        }
        int l = t->nodes[v].left, r = t->nodes[v].right;
        parent[l] = v;
        side[l] = 0;
        parent[r] = v;
        side[r] = 1;
        rec(l, next);
        inorder.push_back(v);
        rec(r, next);
        lo[v] = lo[l];
        hi[v] = hi[r];
    }

    // End apex of the maximal slope run through leaf index i.
    // Left leaves run up-right (returns span hi), right leaves up-left (span lo).
    long run_end(size_t i) const
    {
        int v = leaves[i];
        int want = side[v]; // continue while ancestors are children of the same side
        int p = parent[v];
        while (parent[p] >= 0 && side[p] == want)
            p = parent[p];
        return want == 0 ? hi[p] : lo[p];
    }
};

} // namespace

Rectangulation rectangulation_of_twin_pair(const TwinBinaryPair &p)
{
    require(is_twin_binary(p.first, p.second), errc::not_twins, "not a twin pair");
    long N = static_cast<long>(p.first.leaf_count());
    long m = N - 1; // square side; diagonal points at 1..m-1

    TreeGeom gs, gt;
    gs.build(p.first);
    gt.build(p.second);
    BitString alpha = fingerprint(p.first);

    Rectangulation r;
    r.n = m - 1;
    for (long i = 1; i <= m - 1; ++i) {
        long j = m - i; // matching leaf of the second tree
        Segment s;
        if (alpha[static_cast<size_t>(i)] == 1) {
            s.horizontal = true;
            s.coord = m - i;
            s.from = m - gt.run_end(static_cast<size_t>(j));
            s.to = gs.run_end(static_cast<size_t>(i));
        } else {
            s.horizontal = false;
            s.coord = i;
            s.from = gt.run_end(static_cast<size_t>(j));
            s.to = m - gs.run_end(static_cast<size_t>(i));
        }
        r.segments.push_back(s);
    }
    std::sort(r.segments.begin(), r.segments.end(),
              [](const Segment &a, const Segment &b) {
                  if (a.horizontal != b.horizontal)
                      return a.horizontal;
                  return std::tie(a.coord, a.from) < std::tie(b.coord, b.from);
              });
    return validate_rectangulation(r);
}

Rectangulation validate_rectangulation(const Rectangulation &r)
{
    long m = r.side();
    require(r.n >= 0, errc::bad_rectangulation, "negative point count");
    for (const Segment &s : r.segments) {
        require(s.coord > 0 && s.coord < m, errc::bad_rectangulation,
                "segment coordinate on or outside the boundary");
        require(s.from >= 0 && s.from < s.to && s.to <= m, errc::bad_rectangulation,
                "degenerate segment extent");
    }
    // pairwise: no interior crossings, no collinear overlap
    for (size_t i = 0; i < r.segments.size(); ++i)
        for (size_t j = i + 1; j < r.segments.size(); ++j) {
            const Segment &a = r.segments[i], &b = r.segments[j];
            if (a.horizontal == b.horizontal) {
                if (a.coord == b.coord)
                    require(a.to <= b.from || b.to <= a.from, errc::bad_rectangulation,
                            "collinear segments overlap");
            } else {
                const Segment &h = a.horizontal ? a : b;
                const Segment &v = a.horizontal ? b : a;
                bool cross = h.from < v.coord && v.coord < h.to && v.from < h.coord &&
                             h.coord < v.to;
                require(!cross, errc::bad_rectangulation, "segments cross");
            }
        }
    // every diagonal point on exactly one segment, strictly interior
    for (long i = 1; i <= r.n; ++i) {
        long px = i, py = m - i;
        int covering = 0;
        for (const Segment &s : r.segments) {
            bool on = s.horizontal ? (s.coord == py && s.from < px && px < s.to)
                                   : (s.coord == px && s.from < py && py < s.to);
            covering += on;
        }
        require(covering == 1, errc::bad_rectangulation,
                "diagonal point not on exactly one segment interior");
    }
    // every segment contains a point
    for (const Segment &s : r.segments) {
        bool has = false;
        for (long i = 1; i <= r.n && !has; ++i)
            has = s.horizontal ? (s.coord == m - i && s.from < i && i < s.to)
                               : (s.coord == i && s.from < m - i && m - i < s.to);
        require(has, errc::bad_rectangulation, "segment without a diagonal point");
    }
    rectangles(r); // checks the subdivision shape
    return r;
}

std::vector<Rect> rectangles(const Rectangulation &r)
{
    long m = r.side();
    if (m == 1)
        return {{0, 0, 1, 1}};
    std::vector<int> comp(static_cast<size_t>(m * m));
    std::iota(comp.begin(), comp.end(), 0);
    auto find = [&](int x) {
        while (comp[x] != x)
            x = comp[x] = comp[comp[x]];
        return x;
    };
    auto merge = [&](int a, int b) { comp[find(a)] = find(b); };
    auto cell = [&](long cx, long cy) { return static_cast<int>(cy * m + cx); };

    auto blocked_v = [&](long x, long cy) { // wall between cells (x-1,cy),(x,cy)
        for (const Segment &s : r.segments)
            if (!s.horizontal && s.coord == x && s.from <= cy && cy + 1 <= s.to)
                return true;
        return false;
    };
    auto blocked_h = [&](long y, long cx) {
        for (const Segment &s : r.segments)
            if (s.horizontal && s.coord == y && s.from <= cx && cx + 1 <= s.to)
                return true;
        return false;
    };
    for (long cy = 0; cy < m; ++cy)
        for (long cx = 0; cx < m; ++cx) {
            if (cx + 1 < m && !blocked_v(cx + 1, cy))
                merge(cell(cx, cy), cell(cx + 1, cy));
            if (cy + 1 < m && !blocked_h(cy + 1, cx))
                merge(cell(cx, cy), cell(cx, cy + 1));
        }
    std::map<int, Rect> boxes;
    std::map<int, long> areas;
    for (long cy = 0; cy < m; ++cy)
        for (long cx = 0; cx < m; ++cx) {
            int c = find(cell(cx, cy));
            auto it = boxes.find(c);
            if (it == boxes.end()) {
                boxes[c] = {cx, cy, cx + 1, cy + 1};
                areas[c] = 1;
            } else {
                Rect &b = it->second;
                b.x1 = std::min(b.x1, cx);
                b.y1 = std::min(b.y1, cy);
                b.x2 = std::max(b.x2, cx + 1);
                b.y2 = std::max(b.y2, cy + 1);
                ++areas[c];
            }
        }
    std::vector<Rect> out;
    for (auto &[c, b] : boxes) {
        require((b.x2 - b.x1) * (b.y2 - b.y1) == areas[c], errc::bad_rectangulation,
                "subdivision face is not a rectangle");
        out.push_back(b);
    }
    require(static_cast<long>(out.size()) == r.n + 1, errc::bad_rectangulation,
            "wrong number of rectangles");
    // order along the diagonal; every rectangle meets it in exactly one unit
    std::vector<std::pair<long, Rect>> tagged;
    for (const Rect &b : out) {
        long lo = std::max(b.x1, m - b.y2);
        long hi = std::min(b.x2, m - b.y1);
        require(hi - lo == 1, errc::bad_rectangulation,
                "rectangle does not meet the diagonal in a unit interval");
        tagged.emplace_back(lo, b);
    }
    std::sort(tagged.begin(), tagged.end(),
              [](const auto &a, const auto &b) { return a.first < b.first; });
    out.clear();
    for (long p = 0; p < static_cast<long>(tagged.size()); ++p) {
        require(tagged[static_cast<size_t>(p)].first == p, errc::bad_rectangulation,
                "diagonal units do not tile");
        out.push_back(tagged[static_cast<size_t>(p)].second);
    }
    return out;
}

namespace {

// Rebuilds a full binary tree from the spans of its inner vertices together
// with each vertex's split point (the gap between its subtrees' leaves).
// child_side[p] records left(0)/right(1)/root(1) for the vertex of entry p.
FullBinaryTree tree_from_spans(const std::vector<std::pair<long, long>> &spans,
                               const std::vector<long> &splits, long m,
                               std::vector<int> &child_side)
{
    std::map<std::pair<long, long>, long> by_span;
    for (size_t p = 0; p < spans.size(); ++p) {
        require(!by_span.count(spans[p]), errc::bad_rectangulation, "duplicate corner span");
        by_span[spans[p]] = static_cast<long>(p);
    }
    child_side.assign(spans.size(), 1);
    FullBinaryTree t;
    t.nodes.clear();
    auto build = [&](auto &&self, long a, long b, int side) -> int {
        int v = static_cast<int>(t.nodes.size());
        t.nodes.push_back({});
        if (a == b)
            return v; // leaf
        auto it = by_span.find({a, b});
        require(it != by_span.end(), errc::bad_rectangulation, "missing corner span");
        long p = it->second;
        child_side[static_cast<size_t>(p)] = side;
        long split = splits[static_cast<size_t>(p)];
        require(a < split && split <= b, errc::bad_rectangulation, "corner span mismatch");
        int l = self(self, a, split - 1, 0);
        int r = self(self, split, b, 1);
        t.nodes[v].left = l;
        t.nodes[v].right = r;
        return v;
    };
    build(build, 0, m, 1);
    require(t.leaf_count() == static_cast<size_t>(m + 1), errc::bad_rectangulation,
            "corner spans do not form a tree");
    return t;
}

} // namespace

TwinBinaryPair twin_pair_of_rectangulation(const Rectangulation &r)
{
    validate_rectangulation(r);
    long m = r.side();
    std::vector<Rect> rects = rectangles(r);
    // the rectangle at diagonal position p holds the in-order vertex p of the
    // first tree and, the second tree being drawn point-reflected, the
    // in-order vertex m-1-p of the second
    std::vector<std::pair<long, long>> s_spans, t_spans;
    std::vector<long> s_splits, t_splits;
    for (long p = 0; p < static_cast<long>(rects.size()); ++p) {
        const Rect &b = rects[static_cast<size_t>(p)];
        s_spans.emplace_back(m - b.y2, b.x2); // north corner, first tree
        s_splits.push_back(p + 1);
        t_spans.emplace_back(b.y1, m - b.x1); // south corner, second tree
        t_splits.push_back(m - p);
    }
    std::vector<int> side_s, side_t;
    FullBinaryTree s = tree_from_spans(s_spans, s_splits, m, side_s);
    FullBinaryTree t = tree_from_spans(t_spans, t_splits, m, side_t);
    return make_twin_binary(s, t);
}

Permutation baxter_of_rectangulation(const Rectangulation &r)
{
    validate_rectangulation(r);
    long m = r.side();
    std::vector<Rect> rects = rectangles(r);
    long K = static_cast<long>(rects.size());

    std::vector<std::pair<long, long>> t_spans, s_spans;
    std::vector<long> t_splits;
    for (long p = 0; p < K; ++p) {
        const Rect &b = rects[static_cast<size_t>(p)];
        t_spans.emplace_back(b.y1, m - b.x1);
        t_splits.push_back(m - p);
        s_spans.emplace_back(m - b.y2, b.x2);
    }
    std::vector<int> south_side;
    tree_from_spans(t_spans, t_splits, m, south_side);

    std::vector<int> label(static_cast<size_t>(K), 0);
    std::vector<char> done(static_cast<size_t>(K), 0);
    // the tip of a pyramid is the rectangle whose north corner spans the
    // whole run of unlabeled diagonal units (Claim B keeps runs complete)
    auto tip_of_run = [&](long q) {
        long a = q, b = q;
        while (a > 0 && !done[static_cast<size_t>(a - 1)])
            --a;
        while (b + 1 < K && !done[static_cast<size_t>(b + 1)])
            ++b;
        for (long x = a; x <= b; ++x)
            if (s_spans[static_cast<size_t>(x)] == std::make_pair(a, b + 1))
                return x;
        fail(errc::internal_contradiction, "pyramid without a spanning tip");
    };

    long cur = tip_of_run(0); // globally highest north corner
    label[static_cast<size_t>(cur)] = static_cast<int>(K);
    done[static_cast<size_t>(cur)] = 1;
    for (long v = static_cast<int>(K) - 1; v >= 1; --v) {
        bool go_left = (south_side[static_cast<size_t>(cur)] == 0);
        long q = go_left ? cur - 1 : cur + 1;
        while (q >= 0 && q < K && done[static_cast<size_t>(q)])
            q += go_left ? -1 : 1;
        require(q >= 0 && q < K, errc::internal_contradiction,
                "no pyramid on the chosen side");
        long tip = tip_of_run(q);
        label[static_cast<size_t>(tip)] = static_cast<int>(v);
        done[static_cast<size_t>(tip)] = 1;
        cur = tip;
    }
    return Permutation(std::vector<int>(label.begin(), label.end()));
}

Rectangulation rectangulation_of_baxter(const Permutation &p)
{
    return rectangulation_of_twin_pair(twin_pair_of_baxter(p));
}

} // namespace baxterlab
