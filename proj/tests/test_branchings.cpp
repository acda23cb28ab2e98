#include <doctest.h>

#include "pivotal/branchings.hpp"

#include <random>

using namespace pivotal;

namespace {

QVec qv(std::initializer_list<int> xs) {
    QVec v;
    for (int x : xs) v.emplace_back(x);
    return v;
}

BigInt fib(int n) {
    BigInt a = 0, b = 1;
    for (int i = 0; i < n; ++i) {
        BigInt t = a + b;
        a        = b;
        b        = t;
    }
    return a;
}

// a(0)=0, a(1)=1, a(2)=2, a(n+3) = 2a(n+2) + a(n+1) - a(n).
BigInt greedyPathCount(int n) {
    std::vector<BigInt> a = {0, 1, 2};
    while (static_cast<int>(a.size()) <= n)
        a.push_back(2 * a[a.size() - 1] + a[a.size() - 2] - a[a.size() - 3]);
    return a[n];
}

std::vector<Branching> allBranchings(const NodeGraph& G) {
    std::vector<Branching> out;
    std::vector<int>       img(G.size(), -1);
    auto rec = [&](auto&& self, std::size_t v) -> void {
        if (v == G.size()) {
            Branching br;
            br.image = img;
            try {
                validateBranching(br, G);
                out.push_back(br);
            } catch (const std::logic_error&) {
            }
            return;
        }
        img[v] = static_cast<int>(v);
        self(self, v + 1);
        for (int u : G.adj[v]) {
            img[v] = u;
            self(self, v + 1);
        }
    };
    rec(rec, 0);
    return out;
}

}  // namespace

TEST_CASE("greedy_branching basics") {
    auto single = makeGraph({"x"}, {});
    auto br     = greedy_branching(single, qv({5}));
    CHECK(br.image == std::vector<int>{0});

    auto P3  = pathGraph(3);
    auto br3 = greedy_branching(P3, qv({1, 3, 2}));
    CHECK(br3.image == std::vector<int>{1, 1, 1});
    CHECK(potential_energy(P3, qv({1, 3, 2}), br3) == 3);

    CHECK_THROWS_AS(greedy_branching(P3, qv({1, 1, 2})), NonGenericPotentials);
}

TEST_CASE("K22 greedy branching is determined by (a, b, S)") {
    auto G  = completeBipartite(2, 2);  // nodes a1 a2 b1 b2
    auto br = greedy_branching(G, qv({4, 1, 3, 2}));
    // c_a1=4 > c_b1=3: everything in B goes to a1, a1 stays, a2 (1 < 3) goes to b1.
    CHECK(br.image == std::vector<int>{0, 2, 0, 0});
    auto rdeg = reduced_indegree(br);
    CHECK(rdeg == std::vector<int>{2, -1, 0, -1});
    CHECK(potential_energy(G, qv({4, 1, 3, 2}), br) == Rational(2 + 0 + 1 + 2));
}

TEST_CASE("potential energy identities") {
    auto G = pathGraph(4);
    // Identity branching: all sinks, zero energy.
    Branching id;
    id.image = {0, 1, 2, 3};
    CHECK(potential_energy(G, qv({4, 7, 1, 3}), id) == 0);
    CHECK(reduced_indegree(id) == std::vector<int>{0, 0, 0, 0});

    // The reduced in-degree of any branching sums to zero.
    for (const auto& br : allBranchings(G)) {
        auto rdeg = reduced_indegree(br);
        int  sum  = 0;
        for (int x : rdeg) sum += x;
        CHECK(sum == 0);
    }
}

TEST_CASE("greedy branching counts on paths and bipartite graphs") {
    // Greedy counts follow a(n); total branchings follow F(2n).
    for (int n = 1; n <= 7; ++n) {
        auto G = pathGraph(n);
        CHECK(BigInt(enumerate_greedy_branchings(G).size()) == greedyPathCount(n));
        CHECK(count_all_branchings(G) == fib(2 * n));
    }
    // K2 is the path on two nodes.
    CHECK(enumerate_greedy_branchings(pathGraph(2)).size() == 2);

    // The triple count mn(2^{m-1} + 2^{n-1}) double-counts the branchings
    // with a whole color class of sinks (the second maximum is then
    // irrelevant); distinct branchings number m(n-1) + n(m-1) fewer.
    for (int m = 2; m <= 3; ++m)
        for (int n = 2; n <= 3; ++n) {
            auto   G = completeBipartite(m, n);
            BigInt triples =
                BigInt(m) * n * ((BigInt(1) << (m - 1)) + (BigInt(1) << (n - 1)));
            BigInt expected = triples - m * (n - 1) - n * (m - 1);
            CHECK(BigInt(enumerate_greedy_branchings(G).size()) == expected);
        }
    auto G44 = completeBipartite(4, 4);
    CHECK(BigInt(enumerate_greedy_branchings(G44).size()) == BigInt(4 * 4 * (8 + 8) - 24));
}

TEST_CASE("rooted arborescence count of the square graph") {
    auto C4 = graphOfPolytope(cube(2));
    CHECK(count_arborescences(C4) == 16);  // 4 spanning trees x 4 roots
    CHECK(count_all_branchings(C4) == BigInt(allBranchings(C4).size()));
}

TEST_CASE("greedy equals brute-force maximum potential energy") {
    std::mt19937_64 rng(13579);
    std::vector<NodeGraph> graphs;
    graphs.push_back(pathGraph(5));
    graphs.push_back(completeBipartite(2, 3));
    graphs.push_back(graphOfPolytope(cube(2)));
    graphs.push_back(makeGraph({"a", "b", "c", "d", "e"},
                               {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 2}}));
    for (const auto& G : graphs) {
        auto all = allBranchings(G);
        for (int trial = 0; trial < 5; ++trial) {
            QVec c(G.size());
            std::vector<int> perm(G.size());
            std::iota(perm.begin(), perm.end(), 1);
            std::shuffle(perm.begin(), perm.end(), rng);
            for (std::size_t v = 0; v < G.size(); ++v) c[v] = perm[v];
            auto     best  = greedy_branching(G, c);
            Rational bestE = potential_energy(G, c, best);
            for (const auto& br : all) CHECK(potential_energy(G, c, br) <= bestE);
        }
    }
}

TEST_CASE("forced choice for twin nodes") {
    // In K_{m,n}, nodes of one color class share their neighborhood, so a
    // greedy branching sends them to the same target whenever both leave the
    // pair.
    auto G = completeBipartite(3, 3);
    for (const auto& br : enumerate_greedy_branchings(G)) {
        for (int v = 0; v < 3; ++v)
            for (int u = 0; u < 3; ++u) {
                if (u == v) continue;
                bool vOut = br.image[v] != v && br.image[v] != u;
                bool uOut = br.image[u] != u && br.image[u] != v;
                if (vOut && uOut) CHECK(br.image[v] == br.image[u]);
            }
    }
}

TEST_CASE("recover_branching") {
    auto single = makeGraph({"z"}, {});
    CHECK(recover_branching(single, {0}).image == std::vector<int>{0});

    auto star = makeGraph({"c", "l1", "l2", "l3"}, {{0, 1}, {0, 2}, {0, 3}});
    auto br   = recover_branching(star, {3, -1, -1, -1});
    CHECK(br.image == std::vector<int>{0, 0, 0, 0});

    // Round trip over every greedy branching of K22 and P5.
    for (const auto& G : {completeBipartite(2, 2), pathGraph(5)}) {
        for (const auto& g : enumerate_greedy_branchings(G)) {
            auto rdeg = reduced_indegree(g);
            auto rec  = recover_branching(G, rdeg);
            CHECK(reduced_indegree(rec) == rdeg);
        }
    }

    CHECK_THROWS_AS(recover_branching(star, {2, 0, -1, -1}), NotRealizable);
}

TEST_CASE("polymatroid and base polytope") {
    auto G = completeBipartite(2, 2);
    CHECK(polymatroid_f(G, {}) == 0);
    CHECK(polymatroid_f(G, {0}) == 3);
    CHECK(polymatroid_f(G, {0, 1, 2, 3}) == 4);
    CHECK(base_polytope_check(G));
    CHECK(base_polytope_check(pathGraph(5)));
    CHECK(base_polytope_check(graphOfPolytope(cube(2))));
}

TEST_CASE("projection to the GI neighbotope") {
    auto S = simplex(3);
    CHECK(project_to_polytope(graphOfPolytope(S), S));

    auto C = cube(2);
    CHECK(project_to_polytope(graphOfPolytope(C), C));
    CHECK(neighbotope(C, Normalization::gi()).points.size() == 8);

    auto X = cross_polytope(2);
    CHECK(project_to_polytope(graphOfPolytope(X), X));
    CHECK(neighbotope(X, Normalization::gi()).points.size() == 8);

    CHECK_THROWS_AS(project_to_polytope(pathGraph(4), C), GraphMismatch);
}

TEST_CASE("graphical neighbotope") {
    auto G  = completeBipartite(2, 2);
    auto NP = graphical_neighbotope(G);
    CHECK(NP.points.size() == 12);
    CHECK(NP.points.size() == enumerate_greedy_branchings(G).size());

    // Hypergraph-polytope identity: NP{G} equals the sum of the closed
    // neighborhood simplices translated by -(1,...,1).
    OptionSystem hyper;
    hyper.dim = static_cast<int>(G.size());
    for (std::size_t v = 0; v < G.size(); ++v) {
        std::vector<QVec> opts;
        for (int u : G.adj[v]) opts.push_back(unitVec(G.size(), u));
        opts.push_back(unitVec(G.size(), v));
        hyper.options.push_back(std::move(opts));
    }
    auto fan = enumerate_option_fan(hyper, 100000);
    std::set<QVec> hyperPts;
    for (const auto& p : fan.points) {
        QVec shifted = p;
        for (auto& x : shifted) x -= 1;
        hyperPts.insert(shifted);
    }
    CHECK(hyperPts == std::set<QVec>(NP.points.begin(), NP.points.end()));
}

TEST_CASE("normalized graphical neighbotope") {
    auto K2 = pathGraph(2);
    std::map<std::pair<int, int>, Rational> w2{{{0, 1}, Rational(2)}};
    auto scaled2 = normalized_graphical_neighbotope(K2, w2);
    REQUIRE(scaled2.points.size() == 2);
    QVec lo{Rational(-1, 2), Rational(1, 2)};
    QVec hi{Rational(1, 2), Rational(-1, 2)};
    CHECK(scaled2.points == std::vector<QVec>{lo, hi});

    auto P3 = pathGraph(3);
    std::map<std::pair<int, int>, Rational> ones;
    std::map<std::pair<int, int>, Rational> mixed{{{0, 1}, Rational(1)}, {{1, 2}, Rational(2)}};
    auto NP1 = normalized_graphical_neighbotope(P3, ones);
    auto NP2 = normalized_graphical_neighbotope(P3, mixed);
    CHECK(NP1.points.size() == 5);
    CHECK(NP2.points.size() == NP1.points.size());
    CHECK(NP1.points != NP2.points);

    std::map<std::pair<int, int>, Rational> bad{{{0, 1}, Rational(0)}};
    CHECK_THROWS_AS(normalized_graphical_neighbotope(K2, bad), NonPositiveWeight);
}

TEST_CASE("the two greedy routes agree on small graphs") {
    for (const auto& G : {pathGraph(4), completeBipartite(2, 3), graphOfPolytope(cube(2))}) {
        auto viaOrders = enumerate_greedy_branchings(G);
        auto fan = enumerate_option_fan(
            [&] {
                OptionSystem S;
                S.dim = static_cast<int>(G.size());
                for (std::size_t v = 0; v < G.size(); ++v) {
                    std::vector<QVec> opts;
                    for (int u : G.adj[v]) {
                        QVec d = zeroVec(G.size());
                        d[u]   = 1;
                        d[v]   = -1;
                        opts.push_back(std::move(d));
                    }
                    opts.push_back(zeroVec(G.size()));
                    S.options.push_back(std::move(opts));
                }
                return S;
            }(),
            100000);
        CHECK(fan.choices.size() == viaOrders.size());
    }
}

TEST_CASE("graph JSON round trip") {
    auto       G = completeBipartite(2, 2);
    Potentials c = qv({4, 1, 3, 2});
    auto       txt = graphToJson(G, &c);
    Potentials c2;
    auto       G2 = graphFromJson(txt, &c2);
    CHECK(G2.nodes == G.nodes);
    CHECK(G2.adj == G.adj);
    CHECK(c2 == c);

    auto br = greedy_branching(G, c);
    auto bj = branchingToJson(G, br);
    CHECK(bj.find("\"sinks\"") != std::string::npos);
}
