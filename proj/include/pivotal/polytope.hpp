#pragma once

#include "pivotal/errors.hpp"
#include "pivotal/lp.hpp"
#include "pivotal/rational.hpp"

#include <set>
#include <string>
#include <utility>
#include <vector>

namespace pivotal {

/// A vertex-presented polytope: exact vertex coordinates plus its graph.
struct Polytope {
    int                              dim = 0;  // ambient dimension
    std::vector<QVec>                vertices;
    std::vector<std::pair<int, int>> edges;  // i < j
    std::string                      name;

    std::vector<std::vector<int>> neighbors;  // adjacency lists, sorted

    std::size_t vertexCount() const { return vertices.size(); }
    void        rebuildNeighbors();

    /// Affine dimension of the vertex set (<= ambient dim).
    std::size_t intrinsicDim() const;

    /// Every vertex has exactly intrinsicDim() incident edges.
    bool isSimple() const;
};

/// Edge test via exact LP: {i,j} is an edge iff some linear function is
/// maximized exactly on that segment.
std::vector<std::pair<int, int>> compute_edges(const std::vector<QVec>& vertices);

/// Assemble a polytope from vertex coordinates; edges are computed (or taken
/// as given) and vertexhood is checked unless trusted by the caller.
Polytope makePolytope(std::vector<QVec> vertices, std::string name = "",
                      bool checkVertices = true);

/// Acyclic orientation of the graph of P by an edge-generic objective.
struct Orientation {
    const Polytope* polytope = nullptr;
    QVec            c;
    QVec            values;                           // c . v per vertex
    std::vector<std::pair<int, int>> directedEdges;   // (tail, head), c increases
    std::vector<std::vector<int>>    improving;       // improving neighbors per vertex
    std::vector<std::vector<int>>    worsening;       // the reversed lists
    int                              sink   = -1;     // argmax of c
    int                              source = -1;     // argmin of c

    const Polytope& P() const { return *polytope; }
    std::size_t     vertexCount() const { return polytope->vertexCount(); }
};

Orientation orient(const Polytope& P, const QVec& c);
Orientation orient(Polytope&&, const QVec&) = delete;  // P must outlive the orientation

/// In-degree distribution of a generic orientation of a simple polytope.
std::vector<std::size_t> h_vector(const Orientation& ori);

// Builder catalog.
Polytope simplex(int d);                          // conv(e_1..e_d) in R^d
Polytope cube(int d);                             // [0,1]^d
Polytope cross_polytope(int d);                   // conv(+-e_i)
Polytope product(const Polytope& P, const Polytope& Q);
Polytope prism(const Polytope& P);                // P x [0,1]
Polytope zonotope(const std::vector<QVec>& generators);
Polytope edge_zonotope(const Polytope& P);

/// Unnormalized edge directions {u-v, v-u : uv in E(P)}, deduplicated.
std::vector<QVec> edge_directions(const Polytope& P);

struct Facet {
    QVec          normal;  // outer normal in ambient coordinates
    Rational      rhs;     // max of normal . x over P
    std::set<int> vertexSet;
};

/// All facets by exhaustive hyperplane search through vertex subsets, within
/// the affine hull of P. Guarded at intrinsic dimension 4.
std::vector<Facet> facets_bruteforce(const Polytope& P);

/// Vertex set of the smallest face containing the given vertices.
std::set<int> smallest_face(const Polytope& P, const std::set<int>& S);

// JSON interchange ({"dim": d, "vertices": [...], "edges": [[i,j]...],
// "name": ...}; rationals as "p/q" strings or bare integers).
Polytope    polytopeFromJson(const std::string& text);
std::string polytopeToJson(const Polytope& P);

}  // namespace pivotal
