#include "baxterlab/planemap.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

namespace baxterlab {

void PlaneMap::finalize()
{
    size_t nd = opposite.size();
    require(nd >= 2 && nd % 2 == 0, errc::bad_rotation_system, "need an even number of darts");
    require(next_cw.size() == nd && vertex_of.size() == nd, errc::bad_rotation_system,
            "dart arrays size mismatch");
    std::vector<char> seen(nd, 0);
    for (size_t d = 0; d < nd; ++d) {
        int o = opposite[d];
        require(o >= 0 && static_cast<size_t>(o) < nd && o != static_cast<int>(d) &&
                    opposite[o] == static_cast<int>(d),
                errc::bad_rotation_system, "opposite is not a fixed-point-free involution");
        int c = next_cw[d];
        require(c >= 0 && static_cast<size_t>(c) < nd, errc::bad_rotation_system,
                "next_cw out of range");
        require(vertex_of[c] == vertex_of[d], errc::bad_rotation_system,
                "next_cw leaves the vertex");
    }
    next_ccw.assign(nd, -1);
    for (size_t d = 0; d < nd; ++d) {
        require(next_ccw[next_cw[d]] == -1, errc::bad_rotation_system,
                "next_cw is not a permutation");
        next_ccw[next_cw[d]] = static_cast<int>(d);
    }

    int nv = 0;
    for (size_t d = 0; d < nd; ++d)
        nv = std::max(nv, vertex_of[d] + 1);
    vertex_darts.assign(nv, {});
    std::fill(seen.begin(), seen.end(), 0);
    for (size_t d0 = 0; d0 < nd; ++d0) {
        if (seen[d0])
            continue;
        int v = vertex_of[d0];
        require(vertex_darts[v].empty(), errc::bad_rotation_system,
                "vertex darts split into several rotation cycles");
        int d = static_cast<int>(d0);
        do {
            seen[d] = 1;
            vertex_darts[v].push_back(d);
            d = next_cw[d];
        } while (d != static_cast<int>(d0));
    }
    for (int v = 0; v < nv; ++v)
        require(!vertex_darts[v].empty(), errc::bad_rotation_system, "vertex without darts");

    for (size_t d = 0; d < nd; ++d)
        require(vertex_of[d] != vertex_of[opposite[d]], errc::not_simple,
                "loop edges are not supported");

    // faces: orbits of d -> ccw_next(opposite(d))
    face_of.assign(nd, -1);
    face_darts.clear();
    for (size_t d0 = 0; d0 < nd; ++d0) {
        if (face_of[d0] >= 0)
            continue;
        int f = static_cast<int>(face_darts.size());
        face_darts.emplace_back();
        int d = static_cast<int>(d0);
        do {
            face_of[d] = f;
            face_darts[f].push_back(d);
            d = next_ccw[opposite[d]];
        } while (d != static_cast<int>(d0));
    }
    require(outer_dart >= 0 && static_cast<size_t>(outer_dart) < nd, errc::bad_rotation_system,
            "outer dart out of range");
    outer_face = face_of[outer_dart];

    // connectivity
    {
        std::vector<char> vis(nv, 0);
        std::queue<int> q;
        q.push(vertex_of[0]);
        vis[vertex_of[0]] = 1;
        int cnt = 1;
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int d : vertex_darts[v]) {
                int w = head(d);
                if (!vis[w]) {
                    vis[w] = 1;
                    ++cnt;
                    q.push(w);
                }
            }
        }
        require(cnt == nv, errc::not_connected, "map is not connected");
    }

    long euler = static_cast<long>(nv) - static_cast<long>(edge_count()) +
                 static_cast<long>(face_darts.size());
    require(euler == 2, errc::bad_rotation_system, "Euler relation violated");

    if (color.empty())
        color.assign(nv, VColor::none);
    require(color.size() == static_cast<size_t>(nv), errc::bad_rotation_system,
            "color table size mismatch");

    // edge ids in order of the lower dart
    edge_of.assign(nd, -1);
    edge_dart.clear();
    for (size_t d = 0; d < nd; ++d)
        if (static_cast<int>(d) < opposite[d]) {
            edge_of[d] = edge_of[opposite[d]] = static_cast<int>(edge_dart.size());
            edge_dart.push_back(static_cast<int>(d));
        }
}

bool PlaneMap::simple() const
{
    std::set<std::pair<int, int>> es;
    for (size_t d = 0; d < dart_count(); ++d) {
        int u = vertex_of[d], v = head(static_cast<int>(d));
        if (u == v)
            return false;
        if (u < v && !es.insert({u, v}).second)
            return false;
    }
    return true;
}

PlaneMap map_from_rotations(const std::vector<std::vector<int>> &vertex_darts,
                            const std::vector<int> &opposite, int outer_dart,
                            const std::vector<VColor> &colors)
{
    PlaneMap m;
    m.opposite = opposite;
    m.next_cw.assign(opposite.size(), -1);
    m.vertex_of.assign(opposite.size(), -1);
    for (size_t v = 0; v < vertex_darts.size(); ++v) {
        const auto &list = vertex_darts[v];
        require(!list.empty(), errc::bad_rotation_system, "vertex without darts");
        for (size_t i = 0; i < list.size(); ++i) {
            int d = list[i];
            require(d >= 0 && static_cast<size_t>(d) < opposite.size() && m.vertex_of[d] < 0,
                    errc::bad_rotation_system, "dart listed twice or out of range");
            m.vertex_of[d] = static_cast<int>(v);
            m.next_cw[d] = list[(i + 1) % list.size()];
        }
    }
    for (int v : m.vertex_of)
        require(v >= 0, errc::bad_rotation_system, "dart not listed at any vertex");
    m.outer_dart = outer_dart;
    m.color = colors;
    m.finalize();
    return m;
}

// ----------------------------------------------------------------- validation

Quadrangulation validate_quadrangulation(const PlaneMap &m, int s, int t)
{
    Quadrangulation q;
    q.map = m;
    q.map.finalize();
    PlaneMap &mm = q.map;
    for (size_t f = 0; f < mm.face_count(); ++f)
        require(mm.face_degree(static_cast<int>(f)) == 4, errc::non_quad_face,
                "face of degree != 4");
    require(mm.simple(), errc::not_simple, "quadrangulation must be simple");

    int nv = static_cast<int>(mm.vertex_count());
    require(s >= 0 && s < nv && t >= 0 && t < nv && s != t, errc::poles_invalid,
            "poles must be two distinct vertices");
    // bipartition by BFS from s; s is black
    std::vector<VColor> col(nv, VColor::none);
    std::queue<int> bfs;
    col[s] = VColor::black;
    bfs.push(s);
    while (!bfs.empty()) {
        int v = bfs.front();
        bfs.pop();
        for (int d : mm.vertex_darts[v]) {
            int w = mm.head(d);
            VColor want = col[v] == VColor::black ? VColor::white : VColor::black;
            if (col[w] == VColor::none) {
                col[w] = want;
                bfs.push(w);
            } else
                require(col[w] == want, errc::not_bipartite, "odd cycle found");
        }
    }
    for (int v = 0; v < nv; ++v)
        if (mm.color[v] != VColor::none)
            require(mm.color[v] == col[v], errc::not_bipartite,
                    "stored colors disagree with the bipartition");
    mm.color = col;
    require(col[t] == VColor::black, errc::poles_invalid, "poles must both be black");
    bool s_outer = false, t_outer = false;
    for (int d : mm.face_darts[mm.outer_face]) {
        s_outer |= mm.vertex_of[d] == s;
        t_outer |= mm.vertex_of[d] == t;
    }
    require(s_outer && t_outer, errc::poles_invalid, "poles must lie on the outer face");
    q.pole_s = s;
    q.pole_t = t;

    long n = static_cast<long>(mm.vertex_count()) - 2;
    require(static_cast<long>(mm.edge_count()) == 2 * n &&
                static_cast<long>(mm.face_count()) == n,
            errc::non_quad_face, "quadrangulation count relation violated");
    return q;
}

Triangulation validate_triangulation(const PlaneMap &m, int a1, int a2, int a3)
{
    Triangulation t;
    t.map = m;
    t.map.finalize();
    PlaneMap &mm = t.map;
    for (size_t f = 0; f < mm.face_count(); ++f)
        require(mm.face_degree(static_cast<int>(f)) == 3, errc::invariant_violated,
                "face of degree != 3");
    require(mm.simple(), errc::not_simple, "triangulation must be simple");
    // outer orbit visits the boundary clockwise
    std::vector<int> outer;
    for (int d : mm.face_darts[mm.outer_face])
        outer.push_back(mm.vertex_of[d]);
    require(outer.size() == 3, errc::poles_invalid, "outer face must be a triangle");
    bool ok = false;
    for (int r = 0; r < 3; ++r)
        ok |= (outer[r] == a1 && outer[(r + 1) % 3] == a2 && outer[(r + 2) % 3] == a3);
    require(ok, errc::poles_invalid, "a1,a2,a3 must be the outer vertices clockwise");
    t.a1 = a1;
    t.a2 = a2;
    t.a3 = a3;
    return t;
}

namespace {

// cut-vertex test on the underlying multigraph
bool two_connected(const PlaneMap &m)
{
    int nv = static_cast<int>(m.vertex_count());
    if (nv < 3)
        return m.edge_count() >= 2; // a double edge counts as 2-connected
    std::vector<int> num(nv, -1), low(nv, 0);
    int timer = 0;
    bool has_cut = false;
    int root = m.vertex_of[0];
    auto dfs = [&](auto &&self, int v, int parent_edge) -> void {
        num[v] = low[v] = timer++;
        int children = 0;
        for (int d : m.vertex_darts[v]) {
            if (m.edge_of[d] == parent_edge)
                continue; // parallel copies still act as back edges
            int w = m.head(d);
            if (num[w] < 0) {
                ++children;
                self(self, w, m.edge_of[d]);
                low[v] = std::min(low[v], low[w]);
                if (v != root && low[w] >= num[v])
                    has_cut = true;
            } else
                low[v] = std::min(low[v], num[w]);
        }
        if (v == root && children > 1)
            has_cut = true;
    };
    dfs(dfs, root, -2);
    return !has_cut;
}

} // namespace

RootedMap validate_rooted_map(const PlaneMap &m, int root_dart)
{
    RootedMap g;
    g.map = m;
    g.map.finalize();
    require(root_dart >= 0 && static_cast<size_t>(root_dart) < g.map.dart_count(),
            errc::bad_rotation_system, "root dart out of range");
    require(g.map.face_left(root_dart) == g.map.outer_face, errc::poles_invalid,
            "root edge must have the outer face on its left");
    require(two_connected(g.map), errc::not_two_connected, "rooted map must be 2-connected");
    g.root_dart = root_dart;
    return g;
}

// ----------------------------------------------------------------------- dual

PlaneMap dual(const PlaneMap &m)
{
    PlaneMap d;
    size_t nd = m.dart_count();
    d.opposite = m.opposite;
    d.vertex_of.assign(nd, -1);
    d.next_cw.assign(nd, -1);
    for (size_t x = 0; x < nd; ++x)
        d.vertex_of[x] = m.face_of[x];
    // the dual rotation (ccw) is the face-tracing permutation
    std::vector<int> dual_ccw(nd);
    for (size_t x = 0; x < nd; ++x)
        dual_ccw[x] = m.next_ccw[m.opposite[x]];
    for (size_t x = 0; x < nd; ++x)
        d.next_cw[dual_ccw[x]] = static_cast<int>(x);
    d.outer_dart = m.outer_dart;
    d.finalize();
    return d;
}

// ----------------------------------------------------------------- completion

namespace {

PlaneMap build_completion(const RootedMap &g, bool remove_poles)
{
    const PlaneMap &m = g.map;
    int nv = static_cast<int>(m.vertex_count());
    int nf = static_cast<int>(m.face_count());
    size_t nd = m.dart_count();

    // completion darts per primal dart d: 4d+0 at tail(d), 4d+1 at the
    // edge-vertex (primal half), 4d+2 at face_left(d), 4d+3 at the
    // edge-vertex (dual half)
    std::vector<int> opp(4 * nd);
    for (size_t d = 0; d < nd; ++d) {
        opp[4 * d + 0] = static_cast<int>(4 * d + 1);
        opp[4 * d + 1] = static_cast<int>(4 * d + 0);
        opp[4 * d + 2] = static_cast<int>(4 * d + 3);
        opp[4 * d + 3] = static_cast<int>(4 * d + 2);
    }
    std::vector<std::vector<int>> rot(nv + nf + static_cast<int>(m.edge_count()));
    for (int v = 0; v < nv; ++v)
        for (int d : m.vertex_darts[v])
            rot[v].push_back(4 * d + 0);
    for (int f = 0; f < nf; ++f) {
        // clockwise around the dual vertex = reversed face orbit
        for (auto it = m.face_darts[f].rbegin(); it != m.face_darts[f].rend(); ++it)
            rot[nv + f].push_back(4 * (*it) + 2);
    }
    for (size_t e = 0; e < m.edge_count(); ++e) {
        int d0 = m.edge_dart[e];
        int od = m.opposite[d0];
        // clockwise around the crossing: head, right face, tail, left face
        rot[nv + nf + static_cast<int>(e)] = {4 * od + 1, 4 * od + 3, 4 * d0 + 1, 4 * d0 + 3};
    }
    int outer = 4 * g.root_dart + 2; // at the outer face's dual vertex

    if (!remove_poles) {
        PlaneMap c = map_from_rotations(rot, opp, outer);
        return c;
    }

    // drop s, t and their incident (primal-half) edges, compress ids
    int s = g.s(), t = g.t();
    std::vector<char> drop_dart(4 * nd, 0);
    for (size_t d = 0; d < nd; ++d) {
        int tl = m.vertex_of[d];
        if (tl == s || tl == t) {
            drop_dart[4 * d + 0] = 1;
            drop_dart[4 * d + 1] = 1;
        }
    }
    std::vector<int> dart_id(4 * nd, -1);
    int next_id = 0;
    for (size_t x = 0; x < 4 * nd; ++x)
        if (!drop_dart[x])
            dart_id[x] = next_id++;
    std::vector<int> vertex_id(rot.size(), -1);
    int next_v = 0;
    for (size_t v = 0; v < rot.size(); ++v) {
        if (static_cast<int>(v) == s || static_cast<int>(v) == t)
            continue;
        vertex_id[v] = next_v++;
    }
    std::vector<std::vector<int>> rot2(next_v);
    std::vector<int> opp2(next_id);
    for (size_t v = 0; v < rot.size(); ++v) {
        if (vertex_id[v] < 0)
            continue;
        for (int x : rot[v])
            if (!drop_dart[x])
                rot2[vertex_id[v]].push_back(dart_id[x]);
    }
    for (size_t x = 0; x < 4 * nd; ++x)
        if (!drop_dart[x])
            opp2[dart_id[x]] = dart_id[opp[x]];
    require(!drop_dart[outer], errc::internal_contradiction, "outer dart removed");
    return map_from_rotations(rot2, opp2, dart_id[outer]);
}

} // namespace

PlaneMap completion(const RootedMap &g)
{
    return build_completion(g, false);
}

PlaneMap special_completion(const RootedMap &g)
{
    return build_completion(g, true);
}

int completion_dual_vertex(const RootedMap &g, int face)
{
    return static_cast<int>(g.map.vertex_count()) + face;
}

int completion_edge_vertex(const RootedMap &g, int edge)
{
    return static_cast<int>(g.map.vertex_count()) + static_cast<int>(g.map.face_count()) + edge;
}

// ------------------------------------------------------------- canonical form

namespace {

std::string bfs_code(const PlaneMap &m, int root, const EdgeOverlay *overlay,
                     const std::vector<int> *marks)
{
    size_t nv = m.vertex_count();
    std::vector<int> id(nv, -1);
    std::vector<int> entry(nv, -1);
    std::vector<int> order;
    id[m.vertex_of[root]] = 0;
    entry[m.vertex_of[root]] = root;
    order.push_back(m.vertex_of[root]);
    std::string code;
    auto emit = [&code](int x) {
        code += std::to_string(x);
        code += ',';
    };
    for (size_t i = 0; i < order.size(); ++i) {
        int v = order[i];
        emit(static_cast<int>(m.color[v]));
        if (marks)
            emit((*marks)[v]);
        int d = entry[v];
        for (size_t j = 0; j < m.degree(v); ++j, d = m.next_cw[d]) {
            int w = m.head(d);
            if (id[w] < 0) {
                id[w] = static_cast<int>(order.size());
                entry[w] = m.opposite[d];
                order.push_back(w);
            }
            emit(id[w]);
            if (overlay) {
                int e = m.edge_of[d];
                int h = overlay->head[e];
                emit(h < 0 ? 9 : (h == m.head(d) ? 1 : 0));
                emit(overlay->ecolor[e]);
            }
        }
        code += ';';
    }
    return code;
}

} // namespace

std::string canonical_form(const PlaneMap &m, const std::vector<int> &root_darts,
                           const EdgeOverlay *overlay, const std::vector<int> *vertex_marks)
{
    require(!root_darts.empty(), errc::domain_error, "need at least one root dart");
    std::string best;
    for (int d : root_darts) {
        std::string c = bfs_code(m, d, overlay, vertex_marks);
        if (best.empty() || c < best)
            best = c;
    }
    return best;
}

std::string canonical_form(const PlaneMap &m)
{
    return canonical_form(m, m.face_darts[m.outer_face]);
}

} // namespace baxterlab
