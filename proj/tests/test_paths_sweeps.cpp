#include <doctest.h>

#include "pivotal/paths_sweeps.hpp"

#include <random>
#include <set>

using namespace pivotal;

namespace {

QVec qv(std::initializer_list<int> xs) {
    QVec v;
    for (int x : xs) v.emplace_back(x);
    return v;
}

std::vector<QVec> constructedEdgeDirections(const ConstructedPolytope& C) {
    std::set<QVec> dirs;
    for (auto [i, j] : C.edges) {
        dirs.insert(sub(C.points[j], C.points[i]));
        dirs.insert(sub(C.points[i], C.points[j]));
    }
    return {dirs.begin(), dirs.end()};
}

}  // namespace

TEST_CASE("monotone path counts") {
    auto S = simplex(4);
    auto C2 = cube(2);
    CHECK(monotone_paths(orient(S, qv({1, 2, 3, 4}))).size() == 4);
    CHECK(monotone_paths(orient(C2, qv({1, 2}))).size() == 2);
    auto seg = makePolytope({qv({0}), qv({1})});
    CHECK(monotone_paths(orient(seg, qv({1}))).size() == 1);
}

TEST_CASE("path_point examples") {
    auto seg = makePolytope({qv({0, 0}), qv({3, 1})});
    auto ori = orient(seg, qv({1, 0}));
    // The section average of the single edge is its midpoint.
    QVec mid{Rational(3, 2), Rational(1, 2)};
    CHECK(path_point(ori, {0, 1}) == mid);

    // Tetrahedron: all four paths are coherent, the polytope is a quadrilateral.
    auto S    = simplex(4);
    auto oriS = orient(S, qv({1, 2, 3, 4}));
    auto Mon  = monotone_path_polytope(oriS);
    CHECK(Mon.points.size() == 4);

    // Cube: six paths, all coherent, a hexagon combinatorially.
    auto C3   = cube(3);
    auto oriC = orient(C3, qv({1, 2, 4}));
    auto MonC = monotone_path_polytope(oriC);
    CHECK(MonC.points.size() == 6);
    CHECK(monotone_paths(oriC).size() == 6);

    // The path coefficients sum to one: each point is a convex combination of
    // normalized steps, so c . Phi never exceeds the total c-gain.
    for (const auto& W : monotone_paths(oriS)) {
        QVec     phi  = path_point(oriS, W);
        Rational gain = dot(oriS.c, phi);
        CHECK(gain <= oriS.values[oriS.sink] - oriS.values[oriS.source]);
        CHECK(gain > 0);
    }
}

TEST_CASE("coherent_path_for_weight") {
    auto C   = cube(2);
    auto ori = orient(C, qv({1, 2}));
    CHECK(coherent_path_for_weight(ori, qv({1, -2})) == MonotonePath{0, 1, 3});

    // A weight whose maximizer is the source starts there.
    CHECK(coherent_path_for_weight(ori, qv({-1, -3})) == MonotonePath{0, 1, 3});
    CHECK(coherent_path_for_weight(ori, qv({-2, -1})).front() == ori.source);

    // Four weight samples on the tetrahedron reach all four coherent paths.
    auto S    = simplex(4);
    auto oriS = orient(S, qv({1, 2, 3, 4}));
    std::set<MonotonePath>             found;
    std::mt19937_64                    rng(777);
    std::uniform_int_distribution<int> coord(-40, 40);
    int                                sampled = 0;
    while (sampled < 40) {
        QVec w(4);
        for (auto& x : w) x = coord(rng);
        try {
            found.insert(coherent_path_for_weight(oriS, w));
            ++sampled;
        } catch (const TieDetected&) {
        }
    }
    CHECK(found.size() == 4);
}

TEST_CASE("sweeps") {
    auto orders = sweeps({qv({1, 0}), qv({-1, 0}), qv({0, 1}), qv({0, -1})});
    CHECK(orders.size() == 8);

    CHECK(sweeps({qv({0, 0}), qv({1, 1}), qv({2, 2})}).size() == 2);

    CHECK(sweeps({qv({1, 0, 0}), qv({0, 1, 0}), qv({0, 0, 1})}).size() == 6);

    CHECK_THROWS_AS(sweeps({qv({1, 0}), qv({1, 0})}), std::invalid_argument);
}

TEST_CASE("sweep_polytope") {
    SweepConfiguration edCube2 = {qv({1, 0}), qv({-1, 0}), qv({0, 1}), qv({0, -1})};
    auto               SP      = sweep_polytope(edCube2);
    CHECK(SP.points.size() == 8);
    CHECK(SP.points.size() == sweeps(edCube2).size());
    CHECK(SP.edgesKnown);
    CHECK(SP.edges.size() == 8);  // octagon
    for (const auto& label : SP.labels) CHECK(label.ordering.has_value());
    for (const auto& p : SP.points) CHECK(hull_vertex_test(p, SP.points));
}

TEST_CASE("weak summand basics") {
    auto sq = makePolytope({qv({0, 0}), qv({1, 0}), qv({0, 1}), qv({1, 1})});
    CHECK(is_weak_summand(view(sq), view(sq)));

    Polytope point;
    point.dim      = 2;
    point.vertices = {qv({2, 3})};
    point.rebuildNeighbors();
    CHECK(is_weak_summand(view(point), view(sq)));
    CHECK_FALSE(is_weak_summand(view(sq), view(point)));

    // A triangle and a square do not refine each other.
    auto tri = makePolytope({qv({0, 0}), qv({1, 0}), qv({0, 1})});
    CHECK_FALSE(is_weak_summand(view(tri), view(sq)));
    CHECK_FALSE(is_weak_summand(view(sq), view(tri)));

    // Minkowski sum: both summands are weak summands of the sum.
    auto hex = zonotope({qv({1, 0}), qv({0, 1}), qv({1, 1})});
    auto segH = zonotope({qv({1, 0})});
    CHECK(is_weak_summand(view(segH), view(hex)));
    CHECK(normally_equivalent(view(hex), view(hex)));
}

TEST_CASE("monotone path polytope is a weak summand of the max-slope pivot polytope") {
    struct Inst {
        Polytope P;
        QVec     c;
    };
    std::vector<Inst> instances;
    instances.push_back({simplex(4), qv({1, 2, 3, 4})});
    instances.push_back({cube(3), qv({1, 2, 4})});
    instances.push_back({prism(simplex(3)), qv({1, 2, 4, 8})});
    for (const auto& inst : instances) {
        auto ori = orient(inst.P, inst.c);
        auto Mon = monotone_path_polytope(ori);
        auto PP  = pivot_polytope(ori, Normalization::ms());
        CHECK(is_weak_summand(view(Mon), view(PP)));
    }
}

TEST_CASE("on zonotopes the monotone path polytope is normally equivalent to MS") {
    struct Inst {
        Polytope P;
        QVec     c;
    };
    std::vector<Inst> instances;
    instances.push_back({cube(2), qv({1, 2})});
    instances.push_back({cube(3), qv({1, 2, 4})});
    instances.push_back({zonotope({qv({1, 0}), qv({0, 1}), qv({1, 1})}), qv({2, 3})});
    for (const auto& inst : instances) {
        auto ori = orient(inst.P, inst.c);
        auto Mon = monotone_path_polytope(ori);
        auto PP  = pivot_polytope(ori, Normalization::ms());
        CHECK(normally_equivalent(view(Mon), view(PP)));
    }
}

TEST_CASE("pivot polytopes and neighbotopes are weak summands of sweep polytopes") {
    // Directed: Pi vs SP(ED^N(P,c)).
    {
        auto S4  = simplex(4);
        auto ori = orient(S4, qv({1, 2, 3, 4}));
        for (auto N : {Normalization::gi(), Normalization::ms()}) {
            auto              PP = pivot_polytope(ori, N);
            std::set<QVec>    ed;
            for (std::size_t v = 0; v < ori.vertexCount(); ++v) {
                if (static_cast<int>(v) == ori.sink) continue;
                for (const auto& d : local_summand(ori, N, static_cast<int>(v))) ed.insert(d);
            }
            auto SP = sweep_polytope(SweepConfiguration(ed.begin(), ed.end()));
            CHECK(is_weak_summand(view(PP), view(SP)));
        }
    }
    // Undirected: N^N(P) vs SP(ED^N(P)).
    {
        auto P   = cube(2);
        auto NP  = neighbotope(P, Normalization::gi());
        auto ed  = edge_directions(P);
        auto SP  = sweep_polytope(SweepConfiguration(ed.begin(), ed.end()));
        CHECK(is_weak_summand(view(NP), view(SP)));
    }
}

TEST_CASE("P is a weak summand of its GI neighbotope; equivalence iff 2-neighborly") {
    auto S  = simplex(3);
    auto NS = neighbotope(S, Normalization::gi());
    CHECK(is_weak_summand(view(S), view(NS)));
    CHECK(normally_equivalent(view(S), view(NS)));  // simplices are 2-neighborly

    auto C  = cube(2);
    auto NC = neighbotope(C, Normalization::gi());
    CHECK(is_weak_summand(view(C), view(NC)));
    CHECK_FALSE(normally_equivalent(view(C), view(NC)));
}

TEST_CASE("the 12 vs 14 vertex zonotope example") {
    QVec     half(2);
    half[0] = Rational(1, 2);
    half[1] = 1;
    auto Z  = zonotope({qv({1, 1}), qv({-1, 1}), half});
    auto NP = neighbotope(Z, Normalization::gi());
    CHECK(NP.points.size() == 12);
    auto ed = edge_directions(Z);
    auto SP = sweep_polytope(SweepConfiguration(ed.begin(), ed.end()));
    CHECK(SP.points.size() == 14);
    CHECK(is_weak_summand(view(NP), view(SP)));
    CHECK_FALSE(normally_equivalent(view(NP), view(SP)));
}

TEST_CASE("a GI neighbotope that is not a belt polytope") {
    auto Z  = zonotope({qv({1, 0, 0}), qv({0, 1, 0}), qv({0, 0, 1}), qv({1, 1, 4})});
    auto NP = neighbotope(Z, Normalization::gi());
    CHECK_FALSE(is_belt(view(NP), constructedEdgeDirections(NP)));

    // Zonotopes themselves are belt polytopes.
    CHECK(is_belt(Z));
}

TEST_CASE("cellularity") {
    auto C   = cube(3);
    auto ori = orient(C, qv({1, 2, 4}));

    // Every c-arborescence is cellular.
    int checked = 0;
    for (const auto& A : enumerate_all_arborescences(ori)) {
        MultiArborescence M;
        M.directed = true;
        M.root     = A.root;
        for (int p : A.parent) M.choice.push_back({p});
        CHECK(is_cellular(ori, M));
        ++checked;
    }
    CHECK(checked == 24);

    // Coherent multi-arborescences from non-generic weights are cellular.
    for (QVec w : {qv({1, 1, 2}), qv({1, 1, 1}), qv({0, 1, 1}), qv({2, 1, 1})}) {
        auto M = face_for_weight(ori, Normalization::ms(), w);
        CHECK(is_cellular(ori, M));
    }

    // Hand-built violation: ties span the bottom face but one of its vertices
    // escapes upward.
    MultiArborescence bad;
    bad.directed = true;
    bad.root     = 7;
    bad.choice.resize(8);
    bad.choice[0] = {1, 2};  // (0,0,0) -> {(1,0,0),(0,1,0)} spans the bottom face
    bad.choice[1] = {5};     // (1,0,0) -> (1,0,1) leaves the bottom face
    bad.choice[2] = {3};
    bad.choice[3] = {7};
    bad.choice[4] = {5};
    bad.choice[5] = {7};
    bad.choice[6] = {7};
    bad.choice[7] = {7};
    CHECK_FALSE(is_cellular(ori, bad));
}

TEST_CASE("max-slope pivot polytope is a normal-equivalence invariant") {
    auto hex = zonotope({qv({1, 0}), qv({0, 1}), qv({1, 1})});
    QVec c   = qv({2, 3});

    // Translation.
    std::vector<QVec> shifted;
    for (const auto& v : hex.vertices) shifted.push_back(add(v, qv({5, -7})));
    auto hexShift = makePolytope(shifted, "shifted", false);
    CHECK(ms_invariance_check(hex, hexShift, c));

    // Dilation.
    std::vector<QVec> doubled;
    for (const auto& v : hex.vertices) doubled.push_back(scaled(v, 2));
    auto hex2 = makePolytope(doubled, "doubled", false);
    CHECK(ms_invariance_check(hex, hex2, c));

    // A normally equivalent non-homothetic deformation: rescale the zonotope
    // generators without changing their directions.
    auto hexDeformed = zonotope({qv({3, 0}), qv({0, 2}), qv({5, 5})});
    CHECK(ms_invariance_check(hex, hexDeformed, c));

    auto sq = makePolytope({qv({0, 0}), qv({1, 0}), qv({0, 1}), qv({1, 1})});
    CHECK_THROWS_AS(ms_invariance_check(hex, sq, c), NotNormallyEquivalent);
}
