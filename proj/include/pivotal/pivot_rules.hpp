#pragma once

#include "pivotal/polytope.hpp"

#include <map>
#include <string>
#include <vector>

namespace pivotal {

class TieDetected : public std::runtime_error {
  public:
    TieDetected(int vertex, int a, int b)
        : std::runtime_error("argmax tie at vertex " + std::to_string(vertex) + " between " +
                             std::to_string(a) + " and " + std::to_string(b)),
          vertex(vertex), first(a), second(b) {}
    int vertex, first, second;
};

class SinkHasNoStep : public std::runtime_error {
  public:
    explicit SinkHasNoStep(int v)
        : std::runtime_error("vertex " + std::to_string(v) + " is the sink") {}
};

class MSRequiresImproving : public std::runtime_error {
  public:
    MSRequiresImproving() : std::runtime_error("max-slope normalization needs c.(u-v) > 0") {}
};

class UnsupportedNormalization : public std::runtime_error {
  public:
    explicit UnsupportedNormalization(const std::string& what) : std::runtime_error(what) {}
};

class NotEdgeGeneric : public std::runtime_error {
  public:
    explicit NotEdgeGeneric(const std::string& what) : std::runtime_error(what) {}
};

enum class NormTag { GI, L1, L2, LInf, MS, Custom };

/// The normalization N of a normalized-weight rule. GI is constant 1, the
/// Lp family uses |u-v|_p (L2 handled symbolically), MS divides by the
/// objective gain, and Custom carries explicit positive values with a
/// default kappa for unlisted directions.
struct Normalization {
    NormTag                  tag = NormTag::GI;
    std::map<QVec, Rational> customValues;
    Rational                 kappa = 1;

    static Normalization gi() { return {NormTag::GI, {}, 1}; }
    static Normalization l1() { return {NormTag::L1, {}, 1}; }
    static Normalization l2() { return {NormTag::L2, {}, 1}; }
    static Normalization linf() { return {NormTag::LInf, {}, 1}; }
    static Normalization ms() { return {NormTag::MS, {}, 1}; }
    static Normalization custom(std::map<QVec, Rational> values, Rational kappa);

    /// False only for L2, whose values are square roots of rationals.
    bool rationalValued() const { return tag != NormTag::L2; }
    /// True for MS, whose value depends on the objective.
    bool dependsOnObjective() const { return tag == NormTag::MS; }

    /// N(dir) for the rational-valued kinds. MS needs the objective c.
    Rational value(const QVec& dir, const QVec* c = nullptr) const;

    std::string label() const;
};

/// a / sqrt(s) with s > 0; total order decided exactly by sign split and
/// squared cross-multiplication.
struct SlopeValue {
    Rational num;
    Rational sq = 1;

    static SlopeValue zero() { return {0, 1}; }
};

int  slopeCompare(const SlopeValue& a, const SlopeValue& b);  // -1 / 0 / +1
bool slopeLess(const SlopeValue& a, const SlopeValue& b);

/// w.(dir)/N(dir) as a SlopeValue. dir == 0 evaluates to 0 (the "stay put"
/// option of the undirected argmax).
SlopeValue slope_value(const Normalization& N, const QVec& w, const QVec& dir, const QVec* c);

/// Map v -> parent(v) with the optimum as the unique fixed point.
struct Arborescence {
    std::vector<int> parent;
    int              root = -1;

    bool operator==(const Arborescence& o) const = default;
    bool operator<(const Arborescence& o) const {
        return std::tie(root, parent) < std::tie(o.root, o.parent);
    }
};

/// Checks fixed point, membership of parents in the allowed neighbor sets and
/// that iterating parent reaches the root; throws std::logic_error otherwise.
void validateArborescence(const Arborescence& A, const Orientation& ori);

/// The normalized-weight argmax step at a non-sink vertex.
int nw_step(const Orientation& ori, const Normalization& N, const QVec& w, int v);

/// Full argmax set at v (ties allowed); empty weight classes never occur.
std::vector<int> nw_argmax_set(const Orientation& ori, const Normalization& N, const QVec& w,
                               int v);

/// The arborescence of the rule (N, w) on the oriented program.
Arborescence arborescence(const Orientation& ori, const Normalization& N, const QVec& w);

/// Undirected variant: argmax over N(P,v) u {v} with weight c. Rejects MS.
/// Equals arborescence(orient(P,c), N, c); both routes are computed and
/// compared.
Arborescence branching_for_objective(const Polytope& P, const Normalization& N, const QVec& c);

/// Iterate the max-slope parent map from start to the sink.
std::vector<int> shadow_vertex_path(const Orientation& ori, const QVec& w, int start);

/// Prop-style realization: a Custom normalization making A the arborescence
/// for weight w = c. Requires an edge-generic polytope; certified by a round
/// trip before returning.
Normalization realize_arborescence(const Polytope& P, const QVec& c, const Arborescence& A);

// JSON {"root": i, "parent": {"0": 3, ...}} and DOT with c-levels as ranks.
std::string  arborescenceToJson(const Arborescence& A);
Arborescence arborescenceFromJson(const std::string& text);
std::string  arborescenceToDot(const Arborescence& A, const Orientation& ori);

}  // namespace pivotal
