#pragma once

#include "pivotal/pivot_polytopes.hpp"

namespace pivotal {

class NotNormallyEquivalent : public std::runtime_error {
  public:
    explicit NotNormallyEquivalent(const std::string& what) : std::runtime_error(what) {}
};

/// Vertex sequence from the source to the sink along strictly improving edges.
using MonotonePath = std::vector<int>;

void validateMonotonePath(const MonotonePath& W, const Orientation& ori);

/// DFS enumeration of all monotone source-to-sink paths (guarded).
std::vector<MonotonePath> monotone_paths(const Orientation& ori);

/// Phi_W = sum_i [c.(v_i - v_{i-1}) / c.(v_k - v_0)] (v_i - v_{i-1}).
QVec path_point(const Orientation& ori, const MonotonePath& W);

/// Hull of the path points; vertices are the coherent paths.
ConstructedPolytope monotone_path_polytope(const Orientation& ori);

/// Glue the w-shadow paths under -c and c through r = P^w; checked against
/// the w-maximal path point.
MonotonePath coherent_path_for_weight(const Orientation& ori, const QVec& w);

/// A finite point configuration, pairwise distinct.
using SweepConfiguration = std::vector<QVec>;

/// All realizable strict orderings by linear functionals, as index lists in
/// increasing functional value.
std::vector<std::vector<int>> sweeps(const SweepConfiguration& cfg);

/// SP(p_1..p_n) = sum_{i<j} [p_i - p_j, p_j - p_i]; one vertex per sweep.
ConstructedPolytope sweep_polytope(const SweepConfiguration& cfg);

/// Uniform view for the fan comparisons below.
struct VertexSetView {
    std::vector<QVec>             points;
    std::vector<std::vector<int>> neighbors;  // empty lists when edges unknown
    bool                          hasNeighbors = false;
    std::string                   name;
};
VertexSetView view(const Polytope& P);
VertexSetView view(const ConstructedPolytope& C);

/// True iff the normal fan of P refines that of Q (Shephard: Q is a weak
/// Minkowski summand of P). Certified per vertex of P with finitely many LPs.
bool is_weak_summand(const VertexSetView& Q, const VertexSetView& P);

/// Mutual refinement: identical normal fans.
bool normally_equivalent(const VertexSetView& P, const VertexSetView& Q);

/// Normally equivalent to the zonotope of its own edge directions.
bool is_belt(const VertexSetView& P, const std::vector<QVec>& edgeDirections);
bool is_belt(const Polytope& P);

/// Cellularity of a c-multi-arborescence via the smallest-face chain.
bool is_cellular(const Orientation& ori, const MultiArborescence& M);

/// Max-slope pivot polytopes of normally equivalent polytopes coincide as
/// point sets.
bool ms_invariance_check(const Polytope& P, const Polytope& Pprime, const QVec& c);

}  // namespace pivotal
