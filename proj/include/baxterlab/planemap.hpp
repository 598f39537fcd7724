#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "baxterlab/error.hpp"

namespace baxterlab {

enum class VColor : uint8_t { none, black, white };

// Combinatorial plane map as a rotation system on darts.  Darts are dense
// integers; opposite is a fixed-point-free involution pairing the two darts
// of each edge, next_cw the clockwise order around each vertex.  Faces are
// the orbits of d -> ccw_next(opposite(d)); the face of a dart under this
// tracing is the face to its left when the dart points tail -> head.
struct PlaneMap {
    std::vector<int> opposite;
    std::vector<int> next_cw;
    std::vector<int> vertex_of;
    int outer_dart = 0; // lies on the outer face orbit
    std::vector<VColor> color; // per vertex, optional bipartition colors

    // derived, filled by finalize()
    std::vector<int> next_ccw;
    std::vector<int> face_of;
    std::vector<std::vector<int>> face_darts;   // orbit per face, in trace order
    std::vector<std::vector<int>> vertex_darts; // per vertex, clockwise order
    int outer_face = 0;

    size_t dart_count() const { return opposite.size(); }
    size_t vertex_count() const { return vertex_darts.size(); }
    size_t edge_count() const { return opposite.size() / 2; }
    size_t face_count() const { return face_darts.size(); }

    int head(int d) const { return vertex_of[opposite[d]]; }
    int tail(int d) const { return vertex_of[d]; }
    int face_left(int d) const { return face_of[d]; }
    size_t degree(int v) const { return vertex_darts[v].size(); }
    size_t face_degree(int f) const { return face_darts[f].size(); }

    // Edge ids: index into the edges() list; edge e owns darts with
    // edge_of[d] == e, and dart(e) is the lower-numbered one.
    std::vector<int> edge_of;
    std::vector<int> edge_dart;

    bool simple() const; // no loops, no parallel edges

    // validates involution/permutation consistency, connectivity, Euler
    // relation; computes faces and per-vertex dart lists
    void finalize();
};

// Builds a map from per-vertex clockwise dart lists and the opposite
// involution (the file-format view of a rotation system).
PlaneMap map_from_rotations(const std::vector<std::vector<int>> &vertex_darts,
                            const std::vector<int> &opposite, int outer_dart,
                            const std::vector<VColor> &colors = {});

struct Quadrangulation {
    PlaneMap map;
    int pole_s = 0, pole_t = 0;
};

struct Triangulation {
    PlaneMap map;
    int a1 = 0, a2 = 0, a3 = 0; // outer vertices in clockwise order
};

struct RootedMap {
    PlaneMap map;
    int root_dart = 0; // oriented s -> t, outer face on its left
    int s() const { return map.vertex_of[root_dart]; }
    int t() const { return map.head(root_dart); }
};

// Validation per the definitions; throws on violation.
Quadrangulation validate_quadrangulation(const PlaneMap &m, int s, int t);
Triangulation validate_triangulation(const PlaneMap &m, int a1, int a2, int a3);
RootedMap validate_rooted_map(const PlaneMap &m, int root_dart);

PlaneMap dual(const PlaneMap &m);

// Superimposition of a map and its dual: primal vertices, then dual
// vertices (offset nv), then degree-4 edge-vertices (offset nv+nf).
PlaneMap completion(const RootedMap &g);
// Completion with the two poles and their incident edges removed; vertex
// ids keep the completion numbering scheme minus the poles.
PlaneMap special_completion(const RootedMap &g);
// id helpers for completion vertices
int completion_dual_vertex(const RootedMap &g, int face);
int completion_edge_vertex(const RootedMap &g, int edge);

// Per-edge annotations carried along with a map.
struct EdgeOverlay {
    std::vector<int> head;               // vertex id per edge, -1 = unoriented
    std::vector<uint8_t> ecolor;         // 0 none, 1 red, 2 blue, 3 green
};

// Minimum BFS code over the given root darts; equal codes iff the maps are
// isomorphic by an isomorphism mapping some allowed root dart to another
// while preserving rotations, colors and overlay annotations.
std::string canonical_form(const PlaneMap &m, const std::vector<int> &root_darts,
                           const EdgeOverlay *overlay = nullptr,
                           const std::vector<int> *vertex_marks = nullptr);

// canonical form over all outer darts (outer-face preserving isomorphism)
std::string canonical_form(const PlaneMap &m);

} // namespace baxterlab
