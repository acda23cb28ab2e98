#pragma once

#include "pivotal/pivot_polytopes.hpp"

#include <map>
#include <string>
#include <vector>

namespace pivotal {

class NonGenericPotentials : public std::runtime_error {
  public:
    NonGenericPotentials(const std::string& a, const std::string& b)
        : std::runtime_error("potentials tie on nodes " + a + " and " + b) {}
};

class NotRealizable : public std::runtime_error {
  public:
    explicit NotRealizable(const std::string& what) : std::runtime_error(what) {}
};

class GraphMismatch : public std::runtime_error {
  public:
    explicit GraphMismatch(const std::string& what) : std::runtime_error(what) {}
};

class NonPositiveWeight : public std::runtime_error {
  public:
    explicit NonPositiveWeight(const std::string& what) : std::runtime_error(what) {}
};

/// Simple undirected graph with named nodes.
struct NodeGraph {
    std::vector<std::string>      nodes;
    std::vector<std::vector<int>> adj;  // sorted index lists

    std::size_t size() const { return nodes.size(); }
    int         indexOf(const std::string& name) const;
};

NodeGraph makeGraph(std::vector<std::string> nodes,
                    const std::vector<std::pair<int, int>>& edges);
NodeGraph pathGraph(int n);
NodeGraph completeBipartite(int m, int n);
NodeGraph graphOfPolytope(const Polytope& P);

/// Map v -> image(v) in adj(v) u {v} whose iteration stabilizes; sinks are
/// the fixed points.
struct Branching {
    std::vector<int> image;

    bool operator==(const Branching& o) const = default;
    bool operator<(const Branching& o) const { return image < o.image; }

    std::vector<int> sinks() const;
};

void validateBranching(const Branching& br, const NodeGraph& G);

using Potentials = QVec;  // node potentials indexed like G.nodes

/// The greedy marking algorithm for distinct potentials; verified against the
/// pointwise argmax definition before returning.
Branching greedy_branching(const NodeGraph& G, const Potentials& c);

Rational         potential_energy(const NodeGraph& G, const Potentials& c, const Branching& br);
std::vector<int> reduced_indegree(const Branching& br);

/// All greedy branchings: total-order sweep up to |V| = 8, then chamber
/// enumeration over the relevant potential-difference walls.
std::vector<Branching> enumerate_greedy_branchings(const NodeGraph& G);

/// Count of all branchings (eventually-fixed maps into closed neighborhoods).
BigInt count_all_branchings(const NodeGraph& G);

/// Branchings with exactly one sink.
BigInt count_arborescences(const NodeGraph& G);

/// Recover a greedy branching from its reduced in-degree sequence.
Branching recover_branching(const NodeGraph& G, const std::vector<int>& rdeg);

/// f(S) = |S| + |N_G(S)|.
int polymatroid_f(const NodeGraph& G, const std::vector<int>& S);

/// f is a polymatroid and every shifted greedy vertex lies in its base
/// polytope (checked exhaustively; guarded by 2^|V| enumeration).
bool base_polytope_check(const NodeGraph& G);

/// The projected greedy vertices pi(rdeg) equal the GI neighbotope vertex set.
bool project_to_polytope(const NodeGraph& GofP, const Polytope& P);

/// Minkowski sum of conv{(e_u - e_v)/N(uv)} over closed neighborhoods.
ConstructedPolytope normalized_graphical_neighbotope(
    const NodeGraph& G, const std::map<std::pair<int, int>, Rational>& weights);

/// Unnormalized graphical neighbotope NP(G) (all weights 1).
ConstructedPolytope graphical_neighbotope(const NodeGraph& G);

// Graph JSON: {"nodes": [...], "edges": [[u,v]...], "potentials": {...}?};
// branching JSON mirrors the arborescence format with node names.
NodeGraph   graphFromJson(const std::string& text, Potentials* potentialsOut = nullptr);
std::string graphToJson(const NodeGraph& G, const Potentials* potentials = nullptr);
std::string branchingToJson(const NodeGraph& G, const Branching& br);

}  // namespace pivotal
