#pragma once

#include <vector>

#include "baxterlab/planemap.hpp"
#include "baxterlab/trees.hpp"

namespace baxterlab {

enum class EColor : uint8_t { none = 0, red = 1, blue = 2, green = 3 };

// Orientation of a quadrangulation: head[e] per edge; every non-pole vertex
// has outdegree exactly two, the poles are sinks.
struct TwoOrientation {
    Quadrangulation base;
    std::vector<int> head; // per edge id
    bool out(int dart) const
    {
        return head[base.map.edge_of[dart]] == base.map.head(dart);
    }
};

struct SeparatingDecomposition {
    Quadrangulation base;
    std::vector<int> head;
    std::vector<EColor> color; // per edge id
    bool out(int dart) const
    {
        return head[base.map.edge_of[dart]] == base.map.head(dart);
    }
};

TwoOrientation validate_two_orientation(const Quadrangulation &q, const std::vector<int> &head);
SeparatingDecomposition validate_separating(const Quadrangulation &q,
                                            const std::vector<int> &head,
                                            const std::vector<EColor> &color);

// Theorem: coloring by the pole each left-right path reaches.
SeparatingDecomposition color_two_orientation(const TwoOrientation &o);
TwoOrientation forget_colors(const SeparatingDecomposition &sd);

// Alternating sequence v0, f1, v1, f2, ..., fm, vm of inner-vertex and
// inner-face ids; endpoints are the two non-pole outer vertices.
struct EquatorialLine {
    std::vector<int> vertices; // m+1 vertices
    std::vector<int> faces;    // m faces, faces[i] between vertices[i], vertices[i+1]
};

EquatorialLine equatorial_line(const SeparatingDecomposition &sd);

struct BookEmbedding {
    std::vector<int> spine;      // vertex ids, s first, t last
    std::vector<EColor> page_of; // per edge id: red page or blue page
};

BookEmbedding book_embedding(const SeparatingDecomposition &sd);

TwoOrientation pole_invert(const TwoOrientation &o);
bool is_pole_symmetric(const TwoOrientation &o);

std::string canonical_form(const TwoOrientation &o);

// Twin-alternating pair on n vertices <-> 2-orientation of a quadrangulation
// on n+2 vertices (the gluing of the two augmented alternating layouts).
TwoOrientation two_orientation_of_twin_alt(const TwinAlternatingPair &p);
TwinAlternatingPair twin_alt_of_separating(const SeparatingDecomposition &sd);

// 3-orientations and Schnyder woods ------------------------------------------

struct ThreeOrientation {
    Triangulation base;
    std::vector<int> head; // per edge id; -1 for the three outer edges
    bool inner_edge(int e) const { return head[e] >= 0; }
    bool out(int dart) const
    {
        int e = base.map.edge_of[dart];
        return head[e] >= 0 && head[e] == base.map.head(dart);
    }
};

struct SchnyderWood {
    Triangulation base;
    std::vector<int> head;
    std::vector<EColor> color; // per edge id; none for outer edges
    bool out(int dart) const
    {
        int e = base.map.edge_of[dart];
        return head[e] >= 0 && head[e] == base.map.head(dart);
    }
};

ThreeOrientation validate_three_orientation(const Triangulation &t,
                                            const std::vector<int> &head);
SchnyderWood validate_schnyder(const Triangulation &t, const std::vector<int> &head,
                               const std::vector<EColor> &color);

// Colors each inner edge by the special vertex its straight path reaches.
SchnyderWood color_three_orientation(const ThreeOrientation &o);
ThreeOrientation forget_schnyder_colors(const SchnyderWood &w);

} // namespace baxterlab
