#pragma once

#include "pivotal/pivot_rules.hpp"

#include <optional>

namespace pivotal {

class NotCoherent : public std::runtime_error {
  public:
    explicit NotCoherent(const std::string& what) : std::runtime_error(what) {}
};

/// Set-valued arborescence: the label of a face. Directed context fixes c and
/// uses improving neighbors; undirected context allows v itself as a choice.
struct MultiArborescence {
    std::vector<std::vector<int>> choice;  // sorted, nonempty per vertex
    bool                          directed = true;
    int                           root     = -1;  // sink in the directed context

    bool operator==(const MultiArborescence& o) const = default;

    bool allSingletons() const {
        for (const auto& s : choice)
            if (s.size() != 1) return false;
        return true;
    }
    Arborescence asArborescence() const;
};

/// Vertex label of a constructed polytope: whichever of the three combinatorial
/// objects produced the point.
struct VertexLabel {
    std::optional<Arborescence>     arborescence;
    std::optional<std::vector<int>> ordering;  // sweep order (point indices)
    std::optional<std::vector<int>> path;      // monotone path (vertex indices)
};

struct ConstructedPolytope {
    int                              dim = 0;
    std::vector<QVec>                points;  // hull vertices, lexicographic
    std::vector<VertexLabel>         labels;  // aligned with points
    std::vector<std::pair<int, int>> edges;
    bool                             edgesKnown = false;
    std::string                      name;

    std::size_t vertexCount() const { return points.size(); }
    /// Neighbor lists when edgesKnown; otherwise empty.
    std::vector<std::vector<int>> neighborLists() const;
};

/// Sum of normalized parent directions of the map; the root contributes 0.
QVec phi_point(const Polytope& P, const Normalization& N, const Arborescence& A,
               const QVec* c = nullptr);

/// The local Minkowski summand at v: normalized improving directions, plus
/// the zero vector in the undirected (neighbotope) variant.
std::vector<QVec> local_summand(const Orientation& ori, const Normalization& N, int v,
                                bool includeZero = false);

/// Witness weight realizing A via the argmax rule, or Incoherent.
WitnessResult is_coherent(const Orientation& ori, const Normalization& N,
                          const Arborescence& A);

/// Cartesian product of improving-neighbor choices.
std::vector<Arborescence> enumerate_all_arborescences(const Orientation& ori);

struct CoherentItem {
    Arborescence arborescence;
    QVec         witness;
    QVec         phi;
};

/// All coherent arborescences with witnesses, sorted lexicographically by
/// their phi points. Enumerated by BFS on the normal fan of the pivot rule
/// polytope: every facet of the current weight cone is crossed exactly and
/// each newly reached cone is certified by its own witness.
std::vector<CoherentItem> enumerate_coherent(const Orientation& ori, const Normalization& N);

/// Independent route: enumerate realizable orderings of the normalized
/// improving directions and induce the per-vertex argmax by rank.
std::vector<Arborescence> enumerate_coherent_via_orderings(const Orientation& ori,
                                                           const Normalization& N);

ConstructedPolytope pivot_polytope(const Orientation& ori, const Normalization& N);

/// Undirected analogue over arborescences of G(P); N must not depend on c.
ConstructedPolytope neighbotope(const Polytope& P, const Normalization& N);

/// Branching-label validation for neighbotope vertices.
void validateGraphArborescence(const Arborescence& A, const Polytope& P);

/// Full argmax sets for a (possibly non-generic) weight.
MultiArborescence face_for_weight(const Orientation& ori, const Normalization& N, const QVec& w);

/// The finest coherent coarsening of A: implicit equalities of the weight
/// cone W_A are found by LP, a relative interior point is picked, and its
/// face_for_weight is returned.
MultiArborescence finest_coherent_coarsening(const Orientation& ori, const Normalization& N,
                                             const Arborescence& A);

bool refines(const MultiArborescence& M, const MultiArborescence& Mprime);
bool differ_by_rerouting(const Arborescence& A, const Arborescence& Aprime);

/// Exact adjacency test on the pivot polytope via the union's tie equalities.
bool are_adjacent_vertices(const Orientation& ori, const Normalization& N, const Arborescence& A,
                           const Arborescence& Aprime);

/// Number of multi-arborescences of a simple oriented polytope.
BigInt multiarb_count(const Orientation& ori);

/// Total arborescence count 1^{h_1} ... d^{h_d} of a simple polytope.
BigInt arborescence_count_formula(const Orientation& ori);

/// (#coherent, product formula minus 2(n - m - 2)); asserts the strict
/// inequality whenever n > d+1 >= 4.
std::pair<BigInt, BigInt> ub_theorem_margin(const Orientation& ori, const Normalization& N);

std::string         constructedToJson(const ConstructedPolytope& C);
ConstructedPolytope constructedFromJson(const std::string& text);

/// Generic Minkowski option system: choosing one option per slot proposes a
/// vertex of the sum of the conv(options). Used by the pivot polytope, the
/// neighbotope and the graphical neighbotopes.
struct OptionSystem {
    int                            dim = 0;
    std::vector<std::vector<QVec>> options;  // each list nonempty, points distinct
};

struct OptionFanResult {
    std::vector<std::vector<int>>    choices;  // option index per slot
    std::vector<QVec>                witnesses;
    std::vector<QVec>                points;   // sum of the chosen options
    std::vector<std::pair<int, int>> edges;    // facet-sharing pairs
};

/// Vertex enumeration of the Minkowski sum by BFS over its normal fan.
OptionFanResult enumerate_option_fan(const OptionSystem& S, std::size_t guard);

}  // namespace pivotal
