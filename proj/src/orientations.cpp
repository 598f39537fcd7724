#include "baxterlab/orientations.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace baxterlab {

namespace {

std::vector<int> out_degrees(const PlaneMap &m, const std::vector<int> &head)
{
    require(head.size() == m.edge_count(), errc::length_mismatch,
            "orientation must cover every edge");
    std::vector<int> outdeg(m.vertex_count(), 0);
    for (size_t e = 0; e < head.size(); ++e) {
        if (head[e] < 0)
            continue;
        int d = m.edge_dart[e];
        require(head[e] == m.head(d) || head[e] == m.tail(d), errc::domain_error,
                "edge head is not an endpoint");
        int tail = head[e] == m.head(d) ? m.tail(d) : m.head(d);
        ++outdeg[tail];
    }
    return outdeg;
}

} // namespace

TwoOrientation validate_two_orientation(const Quadrangulation &q, const std::vector<int> &head)
{
    TwoOrientation o{q, head};
    auto outdeg = out_degrees(q.map, head);
    for (size_t v = 0; v < q.map.vertex_count(); ++v) {
        int want = (static_cast<int>(v) == q.pole_s || static_cast<int>(v) == q.pole_t) ? 0 : 2;
        require(outdeg[v] == want, errc::outdegree_violated,
                "vertex " + std::to_string(v) + " has outdegree " + std::to_string(outdeg[v]));
    }
    return o;
}

// ------------------------------------------------------- left-right coloring

namespace {

// Arriving at a vertex via dart d_in, the walk continues with the first
// outgoing dart clockwise (black vertices, a left turn) or counterclockwise
// (white vertices, a right turn) from the reversal dart.
template <typename Oriented>
int next_lr_dart(const PlaneMap &m, const Oriented &o, int d_in)
{
    int u = m.head(d_in);
    int r = m.opposite[d_in];
    bool black = m.color[u] == VColor::black;
    int x = black ? m.next_cw[r] : m.next_ccw[r];
    for (size_t guard = 0; guard <= m.degree(u); ++guard) {
        if (o.out(x))
            return x;
        x = black ? m.next_cw[x] : m.next_ccw[x];
    }
    fail(errc::internal_contradiction, "no outgoing dart at a non-pole vertex");
}

} // namespace

SeparatingDecomposition color_two_orientation(const TwoOrientation &o)
{
    const PlaneMap &m = o.base.map;
    std::vector<EColor> color(m.edge_count(), EColor::none);
    for (size_t e = 0; e < m.edge_count(); ++e) {
        if (color[e] != EColor::none)
            continue;
        // walk the left-right path, then color everything on it
        std::vector<int> trail;
        int d = m.edge_dart[e];
        if (o.head[e] != m.head(d))
            d = m.opposite[d];
        EColor c = EColor::none;
        for (size_t guard = 0; guard <= 2 * m.dart_count(); ++guard) {
            int eid = m.edge_of[d];
            if (color[eid] != EColor::none) {
                c = color[eid];
                break;
            }
            trail.push_back(eid);
            int u = m.head(d);
            if (u == o.base.pole_s) {
                c = EColor::red;
                break;
            }
            if (u == o.base.pole_t) {
                c = EColor::blue;
                break;
            }
            d = next_lr_dart(m, o, d);
        }
        require(c != EColor::none, errc::internal_contradiction,
                "left-right path closed a cycle");
        for (int eid : trail)
            color[eid] = c;
    }
    return validate_separating(o.base, o.head, color);
}

TwoOrientation forget_colors(const SeparatingDecomposition &sd)
{
    return validate_two_orientation(sd.base, sd.head);
}

SeparatingDecomposition validate_separating(const Quadrangulation &q,
                                            const std::vector<int> &head,
                                            const std::vector<EColor> &color)
{
    validate_two_orientation(q, head);
    const PlaneMap &m = q.map;
    require(color.size() == m.edge_count(), errc::length_mismatch,
            "coloring must cover every edge");
    SeparatingDecomposition sd{q, head, color};

    // (1) all edges at s red, all edges at t blue
    for (int d : m.vertex_darts[q.pole_s])
        require(color[m.edge_of[d]] == EColor::red, errc::invariant_violated,
                "edge at s is not red");
    for (int d : m.vertex_darts[q.pole_t])
        require(color[m.edge_of[d]] == EColor::blue, errc::invariant_violated,
                "edge at t is not blue");

    // (2) one red and one blue interval; outgoing edge first (white, clockwise)
    // or last (black) within its color interval
    for (size_t v = 0; v < m.vertex_count(); ++v) {
        if (static_cast<int>(v) == q.pole_s || static_cast<int>(v) == q.pole_t)
            continue;
        const auto &darts = m.vertex_darts[v];
        size_t deg = darts.size();
        int switches = 0;
        for (size_t i = 0; i < deg; ++i)
            switches += color[m.edge_of[darts[i]]] != color[m.edge_of[darts[(i + 1) % deg]]];
        require(switches == 2, errc::invariant_violated,
                "colors do not form two intervals at a vertex");
        bool white = m.color[v] == VColor::white;
        for (size_t i = 0; i < deg; ++i) {
            int d = darts[i];
            EColor prev = color[m.edge_of[darts[(i + deg - 1) % deg]]];
            EColor next = color[m.edge_of[darts[(i + 1) % deg]]];
            EColor cur = color[m.edge_of[d]];
            bool first_cw = cur != prev; // first of its interval in clockwise order
            bool last_cw = cur != next;
            bool should_be_out = white ? first_cw : last_cw;
            require(sd.out(d) == should_be_out, errc::invariant_violated,
                    white ? "white vertex outgoing edge must open its color interval"
                          : "black vertex outgoing edge must close its color interval");
        }
    }

    // (3) the red edges form a tree directed toward s, the blue toward t
    for (int pole : {q.pole_s, q.pole_t}) {
        EColor want = pole == q.pole_s ? EColor::red : EColor::blue;
        for (size_t v = 0; v < m.vertex_count(); ++v) {
            if (static_cast<int>(v) == q.pole_s || static_cast<int>(v) == q.pole_t)
                continue;
            int steps = 0;
            int u = static_cast<int>(v);
            while (u != pole) {
                int out_d = -1;
                for (int d : m.vertex_darts[u])
                    if (sd.out(d) && color[m.edge_of[d]] == want)
                        out_d = d;
                require(out_d >= 0, errc::invariant_violated, "missing colored out-edge");
                u = m.head(out_d);
                require(++steps <= static_cast<int>(m.vertex_count()), errc::invariant_violated,
                        "colored edges contain a cycle");
            }
        }
    }
    return sd;
}

// ------------------------------------------------------------ equatorial line

EquatorialLine equatorial_line(const SeparatingDecomposition &sd)
{
    const PlaneMap &m = sd.base.map;
    // bicolored corners per inner face
    std::vector<std::vector<std::pair<int, int>>> at_vertex(m.vertex_count());
    for (size_t f = 0; f < m.face_count(); ++f) {
        if (static_cast<int>(f) == m.outer_face)
            continue;
        const auto &orbit = m.face_darts[f];
        std::vector<int> corners;
        for (size_t i = 0; i < orbit.size(); ++i) {
            int d = orbit[i], d2 = orbit[(i + 1) % orbit.size()];
            if (sd.color[m.edge_of[d]] != sd.color[m.edge_of[d2]])
                corners.push_back(m.head(d));
        }
        require(corners.size() == 2, errc::invariant_violated,
                "inner face must have exactly two bicolored angles");
        at_vertex[corners[0]].push_back({static_cast<int>(f), corners[1]});
        at_vertex[corners[1]].push_back({static_cast<int>(f), corners[0]});
    }
    // the two non-pole outer vertices are the endpoints
    std::vector<int> ends;
    for (int d : m.face_darts[m.outer_face]) {
        int v = m.vertex_of[d];
        if (v != sd.base.pole_s && v != sd.base.pole_t)
            ends.push_back(v);
    }
    std::sort(ends.begin(), ends.end());
    require(ends.size() == 2, errc::invariant_violated, "expected two non-pole outer vertices");
    for (size_t v = 0; v < m.vertex_count(); ++v) {
        size_t want = 2;
        if (static_cast<int>(v) == sd.base.pole_s || static_cast<int>(v) == sd.base.pole_t)
            want = 0;
        else if (static_cast<int>(v) == ends[0] || static_cast<int>(v) == ends[1])
            want = 1;
        require(at_vertex[v].size() == want, errc::cycle_detected,
                "equatorial degree violated at vertex " + std::to_string(v));
    }

    EquatorialLine line;
    std::set<int> used;
    int v = ends[0];
    line.vertices.push_back(v);
    while (true) {
        int next_f = -1, next_v = -1;
        for (auto [f, w] : at_vertex[v])
            if (!used.count(f)) {
                next_f = f;
                next_v = w;
                break;
            }
        if (next_f < 0)
            break;
        used.insert(next_f);
        line.faces.push_back(next_f);
        line.vertices.push_back(next_v);
        v = next_v;
    }
    require(v == ends[1] && line.faces.size() == m.face_count() - 1,
            errc::cycle_detected, "equatorial line is not a single spanning path");
    require(line.vertices.size() == m.vertex_count() - 2, errc::cycle_detected,
            "equatorial line misses an inner vertex");
    return line;
}

// ---------------------------------------------------------- embedded contours

namespace {

// Contour walk of an embedded spanning tree inside its host map.  tree_dart
// marks the darts of the tree; the walk scans next_cw (clockwise contour,
// the sw-layout) or next_ccw (counterclockwise, ne) from the arrival dart
// and numbers every tree vertex at its first or last visit by class.
struct TreeWalk {
    const PlaneMap &m;
    const std::vector<char> &tree_dart;
    bool cw;
    bool black_first;
    std::vector<int> pos;
    int counter = 0;

    TreeWalk(const PlaneMap &mm, const std::vector<char> &td, bool use_cw, bool bf)
        : m(mm), tree_dart(td), cw(use_cw), black_first(bf), pos(mm.vertex_count(), -1)
    {
    }

    bool first_class(int v) const
    {
        return (m.color[v] == VColor::black) == black_first;
    }

    int next_tree(int x) const
    {
        int y = cw ? m.next_cw[x] : m.next_ccw[x];
        while (!tree_dart[y])
            y = cw ? m.next_cw[y] : m.next_ccw[y];
        return y;
    }

    // in_dart: the tree dart at v toward the parent, or -1 for the root,
    // which instead starts its sweep at start_dart
    void visit(int v, int in_dart, int start_dart)
    {
        if (first_class(v))
            pos[v] = counter++;
        if (in_dart >= 0) {
            for (int d = next_tree(in_dart); d != in_dart; d = next_tree(d))
                visit(m.head(d), m.opposite[d], -1);
        } else {
            int d = start_dart;
            do {
                visit(m.head(d), m.opposite[d], -1);
                d = next_tree(d);
            } while (d != start_dart);
        }
        if (!first_class(v))
            pos[v] = counter++;
    }
};

// Positions of the red tree's sw-layout (rooted at s) or the blue tree's
// ne-layout (rooted at t), walked on the embedding.  The start dart is the
// first tree dart past the root's outer-face corner, in walk direction.
AltLayout embedded_layout(const SeparatingDecomposition &sd, EColor which)
{
    const PlaneMap &m = sd.base.map;
    std::vector<char> tdart(m.dart_count(), 0);
    size_t tree_edges = 0;
    for (size_t e = 0; e < m.edge_count(); ++e)
        if (sd.color[e] == which) {
            tdart[m.edge_dart[e]] = 1;
            tdart[m.opposite[m.edge_dart[e]]] = 1;
            ++tree_edges;
        }
    bool red = which == EColor::red;
    int root = red ? sd.base.pole_s : sd.base.pole_t;
    int d_root = -1;
    for (int d : m.face_darts[m.outer_face])
        if (m.head(d) == root)
            d_root = d;
    require(d_root >= 0, errc::internal_contradiction, "pole not on outer face");

    // the outer corner at the root spans clockwise from opp(d_root) to
    // next_ccw(opp(d_root))
    int start = red ? m.next_ccw[m.opposite[d_root]] : m.opposite[d_root];
    require(tdart[start], errc::internal_contradiction, "contour start dart not in tree");

    TreeWalk walk(m, tdart, /*cw=*/red, /*black_first=*/red);
    walk.visit(root, -1, start);

    AltLayout lay;
    lay.mode = red ? LayoutMode::sw : LayoutMode::ne;
    lay.n = tree_edges + 1;
    for (size_t e = 0; e < m.edge_count(); ++e)
        if (sd.color[e] == which) {
            int d = m.edge_dart[e];
            int a = walk.pos[m.tail(d)], b = walk.pos[m.head(d)];
            lay.arcs.emplace_back(std::min(a, b), std::max(a, b));
        }
    std::sort(lay.arcs.begin(), lay.arcs.end());
    lay.positions = walk.pos;
    return lay;
}

} // namespace

TwinAlternatingPair twin_alt_of_separating(const SeparatingDecomposition &sd)
{
    AltLayout red = embedded_layout(sd, EColor::red);
    AltLayout blue = embedded_layout(sd, EColor::blue);
    const PlaneMap &m = sd.base.map;
    // the two layouts must agree on the shared vertices, blue shifted by one
    for (size_t v = 0; v < m.vertex_count(); ++v) {
        if (static_cast<int>(v) == sd.base.pole_s || static_cast<int>(v) == sd.base.pole_t)
            continue;
        require(red.positions[v] == blue.positions[v] + 1, errc::internal_contradiction,
                "red and blue spine orders disagree");
    }
    OrderedTree s_plus = tree_of_layout(red);
    OrderedTree t_plus = tree_of_layout(blue);
    auto deaugment = [](OrderedTree &t) {
        require(!t.children.empty() && t.children.back().children.empty(),
                errc::internal_contradiction, "augmentation leaf missing");
        t.children.pop_back();
    };
    deaugment(s_plus);
    deaugment(t_plus);
    return make_twin_alternating(s_plus, t_plus);
}

// ------------------------------------------------- twin pair -> 2-orientation

TwoOrientation two_orientation_of_twin_alt(const TwinAlternatingPair &p)
{
    require(is_twin_alternating(p.first, p.second), errc::not_twins, "not a twin pair");
    size_t n = p.first.vertex_count();
    require(n >= 2, errc::domain_error, "need at least two vertices per tree");

    OrderedTree s_plus = p.first;
    s_plus.children.push_back(OrderedTree());
    OrderedTree t_plus = p.second;
    t_plus.children.push_back(OrderedTree());

    AltLayout lay_s = alt_layout(s_plus, LayoutMode::sw); // positions 0..n
    AltLayout lay_t = alt_layout(t_plus, LayoutMode::ne); // shift by one

    struct Arc {
        int lo, hi;
        bool blue;
    };
    std::vector<Arc> arcs;
    for (auto [a, b] : lay_s.arcs)
        arcs.push_back({a, b, false});
    for (auto [a, b] : lay_t.arcs)
        arcs.push_back({a + 1, b + 1, true});

    size_t nv = n + 2;
    std::vector<std::vector<int>> rot(nv);
    std::vector<int> opposite(2 * arcs.size());
    for (size_t e = 0; e < arcs.size(); ++e) {
        opposite[2 * e] = static_cast<int>(2 * e + 1);
        opposite[2 * e + 1] = static_cast<int>(2 * e);
    }
    // clockwise order around a spine vertex: red arcs to the right by
    // increasing far end, red to the left increasing, blue to the left
    // decreasing, blue to the right decreasing
    for (size_t v = 0; v < nv; ++v) {
        std::vector<std::pair<int, int>> br, bl, al, ar; // (key, dart)
        for (size_t e = 0; e < arcs.size(); ++e) {
            const Arc &a = arcs[e];
            if (!a.blue && a.lo == static_cast<int>(v))
                br.push_back({a.hi, static_cast<int>(2 * e)});
            if (!a.blue && a.hi == static_cast<int>(v))
                bl.push_back({a.lo, static_cast<int>(2 * e + 1)});
            if (a.blue && a.hi == static_cast<int>(v))
                al.push_back({-a.lo, static_cast<int>(2 * e + 1)});
            if (a.blue && a.lo == static_cast<int>(v))
                ar.push_back({-a.hi, static_cast<int>(2 * e)});
        }
        for (auto *grp : {&br, &bl, &al, &ar}) {
            std::sort(grp->begin(), grp->end());
            for (auto [key, d] : *grp)
                rot[v].push_back(d);
        }
    }
    require(!rot[0].empty(), errc::internal_contradiction, "pole s has no edges");
    int outer_dart = opposite[rot[0].back()];

    PlaneMap m = map_from_rotations(rot, opposite, outer_dart);
    Quadrangulation q = validate_quadrangulation(m, 0, static_cast<int>(nv) - 1);

    // orient both trees toward their roots
    std::vector<int> head(arcs.size(), -1);
    for (bool blue : {false, true}) {
        int root = blue ? static_cast<int>(nv) - 1 : 0;
        // BFS over the tree's arcs from the root
        std::vector<int> parent(nv, -1);
        std::vector<char> seen(nv, 0);
        seen[root] = 1;
        std::vector<int> stack{root};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (size_t e = 0; e < arcs.size(); ++e) {
                if (arcs[e].blue != blue)
                    continue;
                int o = -1;
                if (arcs[e].lo == v)
                    o = arcs[e].hi;
                else if (arcs[e].hi == v)
                    o = arcs[e].lo;
                if (o < 0 || seen[o])
                    continue;
                seen[o] = 1;
                head[e] = v; // toward the root
                stack.push_back(o);
            }
        }
    }
    // translate arc heads (spine positions) to map edge ids: edge e of the
    // map was built from arc e, and spine positions are the vertex ids
    return validate_two_orientation(q, head);
}

// -------------------------------------------------------------- book embedding

BookEmbedding book_embedding(const SeparatingDecomposition &sd)
{
    const PlaneMap &m = sd.base.map;
    AltLayout red = embedded_layout(sd, EColor::red);
    BookEmbedding be;
    be.spine.assign(m.vertex_count(), -1);
    for (size_t v = 0; v < m.vertex_count(); ++v)
        if (static_cast<int>(v) != sd.base.pole_t)
            be.spine[red.positions[v]] = static_cast<int>(v);
    be.spine.back() = sd.base.pole_t;
    be.page_of = sd.color;

    // consistency with the equatorial line (up to direction)
    EquatorialLine line = equatorial_line(sd);
    std::vector<int> interior(be.spine.begin() + 1, be.spine.end() - 1);
    std::vector<int> rev(line.vertices.rbegin(), line.vertices.rend());
    require(line.vertices == interior || rev == interior, errc::internal_contradiction,
            "spine disagrees with the equatorial line");

    // pages must be non-crossing
    std::vector<int> spos(m.vertex_count());
    for (size_t i = 0; i < be.spine.size(); ++i)
        spos[be.spine[i]] = static_cast<int>(i);
    std::vector<std::pair<int, int>> reds, blues;
    for (size_t e = 0; e < m.edge_count(); ++e) {
        int d = m.edge_dart[e];
        int a = spos[m.tail(d)], b = spos[m.head(d)];
        auto arc = std::make_pair(std::min(a, b), std::max(a, b));
        (sd.color[e] == EColor::red ? reds : blues).push_back(arc);
    }
    for (auto *page : {&reds, &blues})
        for (size_t i = 0; i < page->size(); ++i)
            for (size_t j = i + 1; j < page->size(); ++j) {
                auto [a, b] = (*page)[i];
                auto [c, d] = (*page)[j];
                require(!(a < c && c < b && b < d) && !(c < a && a < d && d < b),
                        errc::invariant_violated, "page arcs cross");
            }

    // each white vertex is left in the blue tree and right in the red tree,
    // each black vertex the other way around
    for (size_t v = 0; v < m.vertex_count(); ++v) {
        if (static_cast<int>(v) == sd.base.pole_s || static_cast<int>(v) == sd.base.pole_t)
            continue;
        bool white = m.color[v] == VColor::white;
        for (int d : m.vertex_darts[v]) {
            bool right_neighbor = spos[m.head(d)] > spos[static_cast<int>(v)];
            bool blue = sd.color[m.edge_of[d]] == EColor::blue;
            // left in a tree = all that tree's neighbors to the right
            bool expect_right = blue ? white : !white;
            require(right_neighbor == expect_right, errc::invariant_violated,
                    "alternating property violated on the spine");
        }
    }
    return be;
}

// ------------------------------------------------------------- pole symmetry

TwoOrientation pole_invert(const TwoOrientation &o)
{
    TwoOrientation r = o;
    std::swap(r.base.pole_s, r.base.pole_t);
    return r;
}

std::string canonical_form(const TwoOrientation &o)
{
    const PlaneMap &m = o.base.map;
    EdgeOverlay ov;
    ov.head = o.head;
    ov.ecolor.assign(m.edge_count(), 0);
    std::vector<int> marks(m.vertex_count(), 0);
    marks[o.base.pole_s] = 1;
    marks[o.base.pole_t] = 2;
    return canonical_form(m, m.face_darts[m.outer_face], &ov, &marks);
}

bool is_pole_symmetric(const TwoOrientation &o)
{
    return canonical_form(o) == canonical_form(pole_invert(o));
}

// ------------------------------------------------ 3-orientations and Schnyder

ThreeOrientation validate_three_orientation(const Triangulation &t,
                                            const std::vector<int> &head)
{
    const PlaneMap &m = t.map;
    require(head.size() == m.edge_count(), errc::length_mismatch,
            "orientation must cover every edge");
    for (size_t e = 0; e < m.edge_count(); ++e) {
        int d = m.edge_dart[e];
        bool outer_edge = m.face_of[d] == m.outer_face ||
                          m.face_of[m.opposite[d]] == m.outer_face;
        require(outer_edge == (head[e] < 0), errc::outdegree_violated,
                "exactly the outer edges must stay unoriented");
    }
    auto outdeg = out_degrees(m, head);
    for (size_t v = 0; v < m.vertex_count(); ++v) {
        bool special = static_cast<int>(v) == t.a1 || static_cast<int>(v) == t.a2 ||
                       static_cast<int>(v) == t.a3;
        require(outdeg[v] == (special ? 0 : 3), errc::outdegree_violated,
                "inner vertices have outdegree three, outer vertices zero");
    }
    return ThreeOrientation{t, head};
}

namespace {

// The straight outgoing dart: the middle of the three outgoing darts met
// when scanning clockwise from the reversal of the incoming dart.
int straight_dart(const PlaneMap &m, const ThreeOrientation &o, int d_in)
{
    int u = m.head(d_in);
    int x = m.opposite[d_in];
    std::vector<int> outs;
    for (size_t i = 0; i < m.degree(u); ++i) {
        x = m.next_cw[x];
        if (o.out(x))
            outs.push_back(x);
    }
    require(outs.size() == 3, errc::internal_contradiction, "expected outdegree three");
    return outs[1];
}

} // namespace

SchnyderWood color_three_orientation(const ThreeOrientation &o)
{
    const PlaneMap &m = o.base.map;
    std::vector<EColor> color(m.edge_count(), EColor::none);
    for (size_t e = 0; e < m.edge_count(); ++e) {
        if (!o.inner_edge(static_cast<int>(e)) || color[e] != EColor::none)
            continue;
        std::vector<int> trail;
        int d = m.edge_dart[e];
        if (o.head[e] != m.head(d))
            d = m.opposite[d];
        EColor c = EColor::none;
        for (size_t guard = 0; guard <= 2 * m.dart_count(); ++guard) {
            int eid = m.edge_of[d];
            if (color[eid] != EColor::none) {
                c = color[eid];
                break;
            }
            trail.push_back(eid);
            int u = m.head(d);
            if (u == o.base.a1) {
                c = EColor::red;
                break;
            }
            if (u == o.base.a2) {
                c = EColor::green;
                break;
            }
            if (u == o.base.a3) {
                c = EColor::blue;
                break;
            }
            d = straight_dart(m, o, d);
        }
        require(c != EColor::none, errc::straight_path_cycle, "straight path closed a cycle");
        for (int eid : trail)
            color[eid] = c;
    }
    return validate_schnyder(o.base, o.head, color);
}

ThreeOrientation forget_schnyder_colors(const SchnyderWood &w)
{
    return validate_three_orientation(w.base, w.head);
}

SchnyderWood validate_schnyder(const Triangulation &t, const std::vector<int> &head,
                               const std::vector<EColor> &color)
{
    validate_three_orientation(t, head);
    const PlaneMap &m = t.map;
    require(color.size() == m.edge_count(), errc::length_mismatch,
            "coloring must cover every edge");
    SchnyderWood w{t, head, color};

    // rule (1): inner edges at a1 red, at a2 green, at a3 blue
    const std::pair<int, EColor> specials[3] = {
        {t.a1, EColor::red}, {t.a2, EColor::green}, {t.a3, EColor::blue}};
    for (auto [a, c] : specials)
        for (int d : m.vertex_darts[a]) {
            int e = m.edge_of[d];
            if (head[e] < 0)
                continue;
            require(color[e] == c && head[e] == a, errc::invariant_violated,
                    "edges at a special vertex must carry its color, incoming");
        }
    for (size_t e = 0; e < m.edge_count(); ++e)
        require((head[e] < 0) == (color[e] == EColor::none), errc::invariant_violated,
                "exactly the inner edges are colored");

    // rule (2): outgoing red, green, blue in clockwise order; incoming edges
    // between two outgoing ones carry the third color
    auto third = [](EColor a, EColor b) {
        int v = static_cast<int>(EColor::red) + static_cast<int>(EColor::green) +
                static_cast<int>(EColor::blue) - static_cast<int>(a) - static_cast<int>(b);
        return static_cast<EColor>(v);
    };
    for (size_t v = 0; v < m.vertex_count(); ++v) {
        if (static_cast<int>(v) == t.a1 || static_cast<int>(v) == t.a2 ||
            static_cast<int>(v) == t.a3)
            continue;
        const auto &darts = m.vertex_darts[v];
        std::vector<size_t> outs;
        for (size_t i = 0; i < darts.size(); ++i)
            if (w.out(darts[i]))
                outs.push_back(i);
        require(outs.size() == 3, errc::outdegree_violated, "inner vertex outdegree != 3");
        EColor c0 = color[m.edge_of[darts[outs[0]]]];
        EColor c1 = color[m.edge_of[darts[outs[1]]]];
        EColor c2 = color[m.edge_of[darts[outs[2]]]];
        bool cw_rgb = (c0 == EColor::red && c1 == EColor::green && c2 == EColor::blue) ||
                      (c0 == EColor::green && c1 == EColor::blue && c2 == EColor::red) ||
                      (c0 == EColor::blue && c1 == EColor::red && c2 == EColor::green);
        require(cw_rgb, errc::invariant_violated,
                "outgoing colors must be red, green, blue clockwise");
        for (int k = 0; k < 3; ++k) {
            size_t from = outs[k], to = outs[(k + 1) % 3];
            EColor want = third(color[m.edge_of[darts[from]]], color[m.edge_of[darts[to]]]);
            for (size_t i = (from + 1) % darts.size(); i != to; i = (i + 1) % darts.size())
                require(color[m.edge_of[darts[i]]] == want, errc::invariant_violated,
                        "incoming edges must carry the third color");
        }
    }

    // property (3): each color class is a tree on the inner vertices rooted
    // at its special vertex
    for (auto [a, c] : specials) {
        for (size_t v = 0; v < m.vertex_count(); ++v) {
            if (static_cast<int>(v) == t.a1 || static_cast<int>(v) == t.a2 ||
                static_cast<int>(v) == t.a3)
                continue;
            int u = static_cast<int>(v), steps = 0;
            while (u != a) {
                int out_d = -1;
                for (int d : m.vertex_darts[u])
                    if (w.out(d) && color[m.edge_of[d]] == c)
                        out_d = d;
                require(out_d >= 0, errc::invariant_violated, "missing colored out-edge");
                u = m.head(out_d);
                require(++steps <= static_cast<int>(m.vertex_count()),
                        errc::invariant_violated, "colored edges contain a cycle");
            }
        }
    }
    return w;
}

} // namespace baxterlab
