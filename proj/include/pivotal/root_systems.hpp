#pragma once

#include "pivotal/paths_sweeps.hpp"

#include <set>

namespace pivotal {

class InvalidRank : public std::runtime_error {
  public:
    explicit InvalidRank(const std::string& what) : std::runtime_error(what) {}
};

class NotPositiveRoot : public std::runtime_error {
  public:
    explicit NotPositiveRoot(const std::string& what) : std::runtime_error(what) {}
};

class UnsupportedType : public std::runtime_error {
  public:
    explicit UnsupportedType(const std::string& what) : std::runtime_error(what) {}
};

class CaseNotCovered : public std::runtime_error {
  public:
    explicit CaseNotCovered(const std::string& what) : std::runtime_error(what) {}
};

enum class RootType { A, B, C, D, G2, F4, E6, E7, E8 };

RootType    rootTypeFromString(const std::string& s);
std::string rootTypeToString(RootType t);

/// A crystallographic root system in explicit rational coordinates. Systems
/// with half-integer standard coordinates (F4, E6-E8) are scaled by 2, which
/// changes no comparability, reflection or sweep structure.
struct RootSystem {
    RootType          type;
    int               rank       = 0;
    int               ambientDim = 0;
    std::vector<QVec> roots;     // Phi, sorted
    std::vector<QVec> positive;  // Phi+, sorted
    std::vector<QVec> simple;    // Delta = indecomposable positive roots
    QVec              chamber;   // c with Phi+ = {x in Phi : c.x > 0}

    int  rootIndex(const QVec& r) const;  // -1 when absent
    bool isRoot(const QVec& r) const { return rootIndex(r) >= 0; }
    bool isPositive(const QVec& r) const;
};

RootSystem build_root_system(RootType type, int rank);

/// Reflection of x in the hyperplane orthogonal to alpha.
QVec reflect(const QVec& alpha, const QVec& x);

/// Number of elements of the Weyl group.
BigInt weylOrder(RootType type, int rank);

/// Root poset comparison by expanding beta - alpha in the simple basis.
bool is_incomparable(const RootSystem& Phi, const QVec& alpha, const QVec& beta);

/// The interval-combinatorics criteria for the infinite families; must agree
/// with is_incomparable everywhere.
bool classify_incomparable(const RootSystem& Phi, const QVec& alpha, const QVec& beta);

std::vector<std::pair<QVec, QVec>> incomparable_pairs(const RootSystem& Phi);

/// Signed permutation in window notation: entry w_i = +-m means
/// w(e_i) = +-e_m. Plain permutations have no signs.
struct SignedPermutation {
    std::vector<int> window;  // values in {+-1..+-n}, |values| a permutation

    int  size() const { return static_cast<int>(window.size()); }
    QVec apply(const QVec& x) const;
    int  barCount() const;
    std::string toString() const;  // "3 -1 2" with "-" as the bar marker
};

/// A Weyl group element w with w(Delta) intersecting Phi+ exactly in
/// {alpha, beta}, built from the appendix case tables and verified before
/// returning. Types A-D only; D witnesses have an even number of bars.
SignedPermutation witness(const RootSystem& Phi, const QVec& alpha, const QVec& beta);

/// Apply the window to every simple root and collect the positive images.
std::set<QVec> positiveSimpleImages(const RootSystem& Phi, const SignedPermutation& w);

struct DfsReport {
    std::size_t statesVisited    = 0;  // equals the Weyl group order
    std::size_t incomparableCount = 0;
    std::set<std::pair<QVec, QVec>> pairsFound;  // {wDelta cap Phi+} of size two
    bool allIncomparableCovered = false;
};

/// Walk all simple systems w(Delta), collecting those whose positive part has
/// exactly two elements. Small groups use a hash-set DFS over simple systems;
/// large ones (E6-E8) an equivalent reverse search over the chamber orbit
/// that needs no visited set. allowLarge gates the long-running groups.
DfsReport dfs_verify_comp_roots(const RootSystem& Phi, bool allowLarge = false);

/// The visited-set route and the reverse-search route, individually, for
/// cross-validation.
DfsReport dfs_verify_visited(const RootSystem& Phi);
DfsReport dfs_verify_reverse(const RootSystem& Phi);

/// Z_Phi = 1/2 sum over Phi of [-alpha, alpha]; edge directions are Phi.
Polytope coxeter_zonotope(const RootSystem& Phi);

/// Theorem check at desk scale (rank <= 3): the GI neighbotope of Z_Phi is
/// normally equivalent to the sweep polytope of Phi.
bool verify_np_roots(const RootSystem& Phi);

std::string rootSystemToJson(const RootSystem& Phi);

}  // namespace pivotal
