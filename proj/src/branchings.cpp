#include "pivotal/branchings.hpp"

#include <json.hpp>

#include <algorithm>
#include <numeric>
#include <set>

namespace pivotal {

int NodeGraph::indexOf(const std::string& name) const {
    for (std::size_t i = 0; i < nodes.size(); ++i)
        if (nodes[i] == name) return static_cast<int>(i);
    throw GraphMismatch("unknown node '" + name + "'");
}

NodeGraph makeGraph(std::vector<std::string> nodes,
                    const std::vector<std::pair<int, int>>& edges) {
    NodeGraph G;
    G.nodes = std::move(nodes);
    G.adj.assign(G.nodes.size(), {});
    for (auto [u, v] : edges) {
        if (u == v) throw GraphMismatch("loops are not allowed");
        if (u < 0 || v < 0 || u >= static_cast<int>(G.size()) || v >= static_cast<int>(G.size()))
            throw GraphMismatch("edge endpoint out of range");
        G.adj[u].push_back(v);
        G.adj[v].push_back(u);
    }
    for (auto& list : G.adj) {
        std::sort(list.begin(), list.end());
        if (std::adjacent_find(list.begin(), list.end()) != list.end())
            throw GraphMismatch("parallel edge");
    }
    return G;
}

NodeGraph pathGraph(int n) {
    std::vector<std::string> names;
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i <= n; ++i) names.push_back(std::to_string(i));
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return makeGraph(std::move(names), edges);
}

NodeGraph completeBipartite(int m, int n) {
    std::vector<std::string> names;
    for (int i = 1; i <= m; ++i) names.push_back("a" + std::to_string(i));
    for (int j = 1; j <= n; ++j) names.push_back("b" + std::to_string(j));
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) edges.emplace_back(i, m + j);
    return makeGraph(std::move(names), edges);
}

NodeGraph graphOfPolytope(const Polytope& P) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < P.vertexCount(); ++i) names.push_back("v" + std::to_string(i));
    return makeGraph(std::move(names), P.edges);
}

std::vector<int> Branching::sinks() const {
    std::vector<int> s;
    for (std::size_t v = 0; v < image.size(); ++v)
        if (image[v] == static_cast<int>(v)) s.push_back(static_cast<int>(v));
    return s;
}

void validateBranching(const Branching& br, const NodeGraph& G) {
    if (br.image.size() != G.size()) throw GraphMismatch("branching size mismatch");
    for (std::size_t v = 0; v < G.size(); ++v) {
        int u = br.image[v];
        if (u == static_cast<int>(v)) continue;
        if (!std::binary_search(G.adj[v].begin(), G.adj[v].end(), u))
            throw std::logic_error("branching image is not a neighbor");
    }
    for (std::size_t v = 0; v < G.size(); ++v) {
        int cur = static_cast<int>(v);
        for (std::size_t steps = 0; br.image[cur] != cur; ++steps) {
            cur = br.image[cur];
            if (steps > G.size()) throw std::logic_error("branching iteration does not stabilize");
        }
    }
}

Branching greedy_branching(const NodeGraph& G, const Potentials& c) {
    if (c.size() != G.size()) throw GraphMismatch("potential count mismatch");
    for (std::size_t u = 0; u < G.size(); ++u)
        for (std::size_t v = u + 1; v < G.size(); ++v)
            if (c[u] == c[v]) throw NonGenericPotentials(G.nodes[u], G.nodes[v]);

    // Marking pass in order of decreasing potential.
    std::vector<int> order(G.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return c[a] > c[b]; });

    Branching         br;
    br.image.assign(G.size(), -1);
    std::vector<bool> directed(G.size(), false);
    for (int u : order) {
        if (!directed[u]) {
            br.image[u] = u;
            directed[u] = true;
        }
        for (int v : G.adj[u])
            if (!directed[v]) {
                br.image[v] = u;
                directed[v] = true;
            }
    }

    // The marking pass must agree with the pointwise argmax definition.
    for (std::size_t v = 0; v < G.size(); ++v) {
        int best = static_cast<int>(v);
        for (int u : G.adj[v])
            if (c[u] > c[best]) best = u;
        if (br.image[v] != best)
            throw std::logic_error("greedy marking disagrees with the argmax definition");
    }
    validateBranching(br, G);
    return br;
}

Rational potential_energy(const NodeGraph& G, const Potentials& c, const Branching& br) {
    validateBranching(br, G);
    if (c.size() != G.size()) throw GraphMismatch("potential count mismatch");
    Rational direct = 0;
    for (std::size_t v = 0; v < G.size(); ++v) direct += c[br.image[v]] - c[v];
    auto     rdeg = reduced_indegree(br);
    Rational viaDegrees = 0;
    for (std::size_t v = 0; v < G.size(); ++v) viaDegrees += Rational(rdeg[v]) * c[v];
    if (direct != viaDegrees) throw std::logic_error("energy formulas disagree");
    return direct;
}

std::vector<int> reduced_indegree(const Branching& br) {
    std::vector<int> rdeg(br.image.size(), -1);
    for (int u : br.image) ++rdeg[u];
    return rdeg;
}

namespace {

// Greedy marking is invariant under the potentials' order type, so ranks
// stand in for values.
Branching greedyFromOrder(const NodeGraph& G, const std::vector<int>& order) {
    Branching         br;
    br.image.assign(G.size(), -1);
    std::vector<bool> directed(G.size(), false);
    for (int u : order) {
        if (!directed[u]) {
            br.image[u] = u;
            directed[u] = true;
        }
        for (int v : G.adj[u])
            if (!directed[v]) {
                br.image[v] = u;
                directed[v] = true;
            }
    }
    return br;
}

OptionSystem graphOptionSystem(const NodeGraph& G,
                               const std::map<std::pair<int, int>, Rational>* weights) {
    OptionSystem S;
    S.dim = static_cast<int>(G.size());
    for (std::size_t v = 0; v < G.size(); ++v) {
        std::vector<QVec> opts;
        for (int u : G.adj[v]) {
            QVec d = zeroVec(G.size());
            Rational w = 1;
            if (weights) {
                auto key = std::make_pair(std::min<int>(u, static_cast<int>(v)),
                                          std::max<int>(u, static_cast<int>(v)));
                auto it  = weights->find(key);
                if (it != weights->end()) w = it->second;
                if (w <= 0)
                    throw NonPositiveWeight("edge weight must be positive on {" +
                                            G.nodes[key.first] + "," + G.nodes[key.second] + "}");
            }
            d[u] = 1 / w;
            d[v] = -1 / w;
            opts.push_back(std::move(d));
        }
        opts.push_back(zeroVec(G.size()));  // the stay-put option
        S.options.push_back(std::move(opts));
    }
    return S;
}

Branching choiceToBranching(const NodeGraph& G, const std::vector<int>& choice) {
    Branching br;
    br.image.assign(G.size(), -1);
    for (std::size_t v = 0; v < G.size(); ++v) {
        const auto& nb = G.adj[v];
        br.image[v] = choice[v] < static_cast<int>(nb.size()) ? nb[choice[v]]
                                                              : static_cast<int>(v);
    }
    return br;
}

}  // namespace

std::vector<Branching> enumerate_greedy_branchings(const NodeGraph& G) {
    std::set<Branching> found;
    if (G.size() <= 8) {
        std::vector<int> order(G.size());
        std::iota(order.begin(), order.end(), 0);
        do {
            found.insert(greedyFromOrder(G, order));
        } while (std::next_permutation(order.begin(), order.end()));
    } else {
        // Chamber route: greedy branchings are the vertices of the graphical
        // neighbotope.
        auto fan = enumerate_option_fan(graphOptionSystem(G, nullptr),
                                        enumeration_guard(500000));
        for (const auto& choice : fan.choices) found.insert(choiceToBranching(G, choice));
    }
    for (const auto& br : found) validateBranching(br, G);
    return {found.begin(), found.end()};
}

namespace {

template <typename Visit>
void forEachMap(const NodeGraph& G, std::size_t guard, Visit&& visit) {
    BigInt total = 1;
    for (const auto& nb : G.adj) total *= BigInt(nb.size() + 1);
    if (total > BigInt(guard))
        throw EnumerationGuard("branching map space " + total.str() + " exceeds guard");
    Branching br;
    br.image.assign(G.size(), -1);
    auto rec = [&](auto&& self, std::size_t v) -> void {
        if (v == G.size()) {
            visit(br);
            return;
        }
        br.image[v] = static_cast<int>(v);
        self(self, v + 1);
        for (int u : G.adj[v]) {
            br.image[v] = u;
            self(self, v + 1);
        }
    };
    rec(rec, 0);
}

bool stabilizes(const Branching& br) {
    for (std::size_t v = 0; v < br.image.size(); ++v) {
        int cur = static_cast<int>(v);
        for (std::size_t steps = 0; br.image[cur] != cur; ++steps) {
            cur = br.image[cur];
            if (steps > br.image.size()) return false;
        }
    }
    return true;
}

}  // namespace

BigInt count_all_branchings(const NodeGraph& G) {
    BigInt count = 0;
    forEachMap(G, enumeration_guard(2000000), [&](const Branching& br) {
        if (stabilizes(br)) ++count;
    });
    return count;
}

BigInt count_arborescences(const NodeGraph& G) {
    BigInt count = 0;
    forEachMap(G, enumeration_guard(2000000), [&](const Branching& br) {
        if (stabilizes(br) && br.sinks().size() == 1) ++count;
    });
    return count;
}

Branching recover_branching(const NodeGraph& G, const std::vector<int>& rdeg) {
    if (rdeg.size() != G.size()) throw GraphMismatch("rdeg size mismatch");
    Branching         br;
    br.image.assign(G.size(), -1);
    std::vector<bool> marked(G.size(), false), directed(G.size(), false);
    std::vector<int>  markOrder;

    auto undirectedNeighbors = [&](int u) {
        int cnt = 0;
        for (int v : G.adj[u])
            if (!marked[v] && !directed[v]) ++cnt;
        return cnt;
    };
    // A node marked now absorbs its undirected neighbors; it adds itself to
    // its own in-image only when it is still undirected. Matching the target
    // in-degree therefore subtracts one for already-directed candidates.
    auto expectedRdeg = [&](int u) {
        return undirectedNeighbors(u) - (directed[u] ? 1 : 0);
    };

    for (;;) {
        bool allMarked = std::all_of(marked.begin(), marked.end(), [](bool b) { return b; });
        if (allMarked) break;
        int u = -1;
        for (std::size_t cand = 0; cand < G.size(); ++cand)
            if (!marked[cand] && rdeg[cand] == expectedRdeg(static_cast<int>(cand))) {
                u = static_cast<int>(cand);
                break;
            }
        if (u < 0) {
            for (std::size_t cand = 0; cand < G.size(); ++cand)
                if (!directed[cand]) {
                    u = static_cast<int>(cand);
                    break;
                }
        }
        if (u < 0) break;  // everything directed
        marked[u] = true;
        markOrder.push_back(u);
        for (int v : G.adj[u])
            if (!marked[v] && !directed[v]) {
                br.image[v] = u;
                directed[v] = true;
            }
        if (!directed[u]) {
            br.image[u] = u;
            directed[u] = true;
        }
    }
    for (int x : br.image)
        if (x < 0) throw NotRealizable("recovery left a node undirected");

    if (reduced_indegree(br) != rdeg)
        throw NotRealizable("sequence matches no greedy branching");
    validateBranching(br, G);

    // The recovered branching is greedy for the marking order itself.
    std::vector<int> order = markOrder;
    for (std::size_t v = 0; v < G.size(); ++v)
        if (std::find(order.begin(), order.end(), static_cast<int>(v)) == order.end())
            order.push_back(static_cast<int>(v));
    if (!(greedyFromOrder(G, order) == br))
        throw NotRealizable("recovered branching is not greedy for its marking order");
    return br;
}

int polymatroid_f(const NodeGraph& G, const std::vector<int>& S) {
    std::vector<bool> inS(G.size(), false);
    for (int v : S) inS[v] = true;
    std::set<int> outside;
    for (int v : S)
        for (int u : G.adj[v])
            if (!inS[u]) outside.insert(u);
    return static_cast<int>(S.size() + outside.size());
}

bool base_polytope_check(const NodeGraph& G) {
    const std::size_t n = G.size();
    if (n > 16) throw EnumerationGuard("base polytope check guarded at 16 nodes");
    const std::size_t full = std::size_t{1} << n;
    std::vector<int>  f(full, 0);
    for (std::size_t mask = 0; mask < full; ++mask) {
        std::vector<int> S;
        for (std::size_t v = 0; v < n; ++v)
            if (mask & (std::size_t{1} << v)) S.push_back(static_cast<int>(v));
        f[mask] = polymatroid_f(G, S);
    }
    if (f[0] != 0) return false;
    // Monotone: adding one element never decreases f.
    for (std::size_t mask = 0; mask < full; ++mask)
        for (std::size_t v = 0; v < n; ++v) {
            std::size_t up = mask | (std::size_t{1} << v);
            if (up != mask && f[up] < f[mask]) return false;
        }
    // Submodular over all pairs (|V| <= 8 keeps this exhaustive and fast).
    if (n <= 8) {
        for (std::size_t A = 0; A < full; ++A)
            for (std::size_t B = 0; B < full; ++B)
                if (f[A | B] + f[A & B] > f[A] + f[B]) return false;
    }
    // Every shifted greedy vertex lies in the base polytope.
    for (const auto& br : enumerate_greedy_branchings(G)) {
        auto rdeg = reduced_indegree(br);
        std::vector<int> x(n);
        for (std::size_t v = 0; v < n; ++v) x[v] = rdeg[v] + 1;
        int totalX = std::accumulate(x.begin(), x.end(), 0);
        if (totalX != f[full - 1] || f[full - 1] != static_cast<int>(n)) return false;
        for (std::size_t mask = 0; mask < full; ++mask) {
            int xa = 0;
            for (std::size_t v = 0; v < n; ++v)
                if (mask & (std::size_t{1} << v)) xa += x[v];
            if (xa > f[mask]) return false;
        }
    }
    return true;
}

bool project_to_polytope(const NodeGraph& GofP, const Polytope& P) {
    if (GofP.size() != P.vertexCount()) throw GraphMismatch("node count differs from vertex count");
    for (std::size_t v = 0; v < P.vertexCount(); ++v)
        if (GofP.adj[v] != P.neighbors[v])
            throw GraphMismatch("adjacency differs from the polytope graph");

    std::set<QVec> projected;
    for (const auto& br : enumerate_greedy_branchings(GofP)) {
        auto rdeg = reduced_indegree(br);
        QVec p    = zeroVec(P.dim);
        for (std::size_t v = 0; v < P.vertexCount(); ++v)
            addInPlace(p, scaled(P.vertices[v], Rational(rdeg[v])));
        projected.insert(std::move(p));
    }
    std::vector<QVec> pts(projected.begin(), projected.end());
    std::vector<QVec> hullVertices;
    for (const auto& p : pts)
        if (hull_vertex_test(p, pts)) hullVertices.push_back(p);

    auto NP = neighbotope(P, Normalization::gi());
    return hullVertices == NP.points;  // both sorted lexicographically
}

ConstructedPolytope normalized_graphical_neighbotope(
    const NodeGraph& G, const std::map<std::pair<int, int>, Rational>& weights) {
    for (const auto& [edge, w] : weights) {
        if (w <= 0)
            throw NonPositiveWeight("edge weight must be positive on {" +
                                    std::to_string(edge.first) + "," +
                                    std::to_string(edge.second) + "}");
        if (edge.first >= edge.second || edge.first < 0 ||
            edge.second >= static_cast<int>(G.size()))
            throw GraphMismatch("weight key is not an ordered node pair");
    }
    auto fan = enumerate_option_fan(graphOptionSystem(G, &weights),
                                    enumeration_guard(500000));

    ConstructedPolytope C;
    C.dim  = static_cast<int>(G.size());
    C.name = "graphical-neighbotope";
    std::vector<int> order(fan.points.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return fan.points[a] < fan.points[b]; });
    std::vector<int> rank(order.size());
    for (std::size_t r = 0; r < order.size(); ++r) rank[order[r]] = static_cast<int>(r);
    for (int id : order) {
        C.points.push_back(fan.points[id]);
        Branching br = choiceToBranching(G, fan.choices[id]);
        validateBranching(br, G);
        VertexLabel label;
        Arborescence asArb;
        asArb.parent = br.image;
        asArb.root   = br.sinks().empty() ? -1 : br.sinks().front();
        label.arborescence = std::move(asArb);
        C.labels.push_back(std::move(label));
    }
    std::set<std::pair<int, int>> edges;
    for (auto [a, b] : fan.edges) {
        int x = rank[a], y = rank[b];
        edges.insert({std::min(x, y), std::max(x, y)});
    }
    C.edges.assign(edges.begin(), edges.end());
    C.edgesKnown = true;
    return C;
}

ConstructedPolytope graphical_neighbotope(const NodeGraph& G) {
    return normalized_graphical_neighbotope(G, {});
}

namespace {

Rational ratFromJson(const nlohmann::json& j) {
    if (j.is_number_integer()) return Rational(static_cast<long long>(j.get<long long>()));
    if (j.is_string()) return parseRational(j.get<std::string>());
    throw std::invalid_argument("rational must be an integer or a 'p/q' string");
}

}  // namespace

NodeGraph graphFromJson(const std::string& text, Potentials* potentialsOut) {
    auto j = nlohmann::json::parse(text);
    std::vector<std::string> names;
    for (const auto& n : j.at("nodes"))
        names.push_back(n.is_string() ? n.get<std::string>() : std::to_string(n.get<long long>()));
    NodeGraph lookup;
    lookup.nodes = names;
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : j.at("edges")) {
        auto endpoint = [&](const nlohmann::json& x) {
            if (x.is_number_integer()) return x.get<int>();
            return lookup.indexOf(x.get<std::string>());
        };
        edges.emplace_back(endpoint(e.at(0)), endpoint(e.at(1)));
    }
    NodeGraph G = makeGraph(std::move(names), edges);
    if (potentialsOut) {
        potentialsOut->assign(G.size(), Rational(0));
        if (j.contains("potentials"))
            for (auto it = j["potentials"].begin(); it != j["potentials"].end(); ++it)
                (*potentialsOut)[G.indexOf(it.key())] = ratFromJson(it.value());
    }
    return G;
}

std::string graphToJson(const NodeGraph& G, const Potentials* potentials) {
    nlohmann::json j;
    j["nodes"] = G.nodes;
    j["edges"] = nlohmann::json::array();
    for (std::size_t v = 0; v < G.size(); ++v)
        for (int u : G.adj[v])
            if (static_cast<int>(v) < u) j["edges"].push_back({G.nodes[v], G.nodes[u]});
    if (potentials) {
        nlohmann::json p = nlohmann::json::object();
        for (std::size_t v = 0; v < G.size(); ++v)
            p[G.nodes[v]] = rationalToString((*potentials)[v]);
        j["potentials"] = p;
    }
    return j.dump(2);
}

std::string branchingToJson(const NodeGraph& G, const Branching& br) {
    nlohmann::json j;
    nlohmann::json image = nlohmann::json::object();
    for (std::size_t v = 0; v < G.size(); ++v) image[G.nodes[v]] = G.nodes[br.image[v]];
    j["image"] = image;
    j["sinks"] = nlohmann::json::array();
    for (int s : br.sinks()) j["sinks"].push_back(G.nodes[s]);
    return j.dump(2);
}

}  // namespace pivotal
