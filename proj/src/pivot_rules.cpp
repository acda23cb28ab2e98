#include "pivotal/pivot_rules.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>

namespace pivotal {

Normalization Normalization::custom(std::map<QVec, Rational> values, Rational kappa) {
    for (const auto& [dir, val] : values)
        if (val <= 0)
            throw UnsupportedNormalization("custom normalization value must be positive on " +
                                           vecToString(dir));
    if (kappa <= 0) throw UnsupportedNormalization("custom kappa must be positive");
    return {NormTag::Custom, std::move(values), std::move(kappa)};
}

Rational Normalization::value(const QVec& dir, const QVec* c) const {
    switch (tag) {
        case NormTag::GI: return 1;
        case NormTag::L1: {
            Rational s = 0;
            for (const auto& x : dir) s += abs(x);
            return s;
        }
        case NormTag::LInf: {
            Rational m = 0;
            for (const auto& x : dir) m = std::max(m, Rational(abs(x)));
            return m;
        }
        case NormTag::MS: {
            if (!c) throw UnsupportedNormalization("max-slope needs the objective");
            Rational g = dot(*c, dir);
            if (g <= 0) throw MSRequiresImproving();
            return g;
        }
        case NormTag::Custom: {
            auto it = customValues.find(dir);
            return it == customValues.end() ? kappa : it->second;
        }
        case NormTag::L2:
            throw UnsupportedNormalization("L2 values are irrational; use slope_value");
    }
    throw std::logic_error("unreachable");
}

std::string Normalization::label() const {
    switch (tag) {
        case NormTag::GI: return "gi";
        case NormTag::L1: return "l1";
        case NormTag::L2: return "l2";
        case NormTag::LInf: return "linf";
        case NormTag::MS: return "ms";
        case NormTag::Custom: return "custom";
    }
    return "?";
}

int slopeCompare(const SlopeValue& a, const SlopeValue& b) {
    int sa = a.num > 0 ? 1 : (a.num < 0 ? -1 : 0);
    int sb = b.num > 0 ? 1 : (b.num < 0 ? -1 : 0);
    if (sa != sb) return sa < sb ? -1 : 1;
    if (sa == 0) return 0;
    // Same strict sign: compare num^2 / sq with the shared sign.
    Rational lhs = a.num * a.num * b.sq;
    Rational rhs = b.num * b.num * a.sq;
    if (lhs == rhs) return 0;
    bool less = (sa > 0) ? (lhs < rhs) : (lhs > rhs);
    return less ? -1 : 1;
}

bool slopeLess(const SlopeValue& a, const SlopeValue& b) { return slopeCompare(a, b) < 0; }

SlopeValue slope_value(const Normalization& N, const QVec& w, const QVec& dir, const QVec* c) {
    if (isZero(dir)) return SlopeValue::zero();
    if (N.tag == NormTag::L2) return {dot(w, dir), dot(dir, dir)};
    return {dot(w, dir) / N.value(dir, c), 1};
}

std::vector<int> nw_argmax_set(const Orientation& ori, const Normalization& N, const QVec& w,
                               int v) {
    const auto& cand = ori.improving[v];
    if (cand.empty()) throw SinkHasNoStep(v);
    std::vector<int> best;
    SlopeValue       bestVal;
    for (int u : cand) {
        SlopeValue s = slope_value(N, w, sub(ori.P().vertices[u], ori.P().vertices[v]), &ori.c);
        if (best.empty()) {
            best    = {u};
            bestVal = s;
            continue;
        }
        int cmp = slopeCompare(s, bestVal);
        if (cmp > 0) {
            best    = {u};
            bestVal = s;
        } else if (cmp == 0) {
            best.push_back(u);
        }
    }
    return best;
}

int nw_step(const Orientation& ori, const Normalization& N, const QVec& w, int v) {
    auto best = nw_argmax_set(ori, N, w, v);
    if (best.size() > 1) throw TieDetected(v, best[0], best[1]);
    return best.front();
}

void validateArborescence(const Arborescence& A, const Orientation& ori) {
    const std::size_t n = ori.vertexCount();
    if (A.parent.size() != n || A.root < 0 || A.root >= static_cast<int>(n))
        throw std::logic_error("arborescence shape mismatch");
    if (A.parent[A.root] != A.root) throw std::logic_error("root is not a fixed point");
    for (std::size_t v = 0; v < n; ++v) {
        if (static_cast<int>(v) == A.root) continue;
        int p = A.parent[v];
        if (p == static_cast<int>(v)) throw std::logic_error("second fixed point");
        const auto& ok = ori.improving[v];
        if (!std::binary_search(ok.begin(), ok.end(), p))
            throw std::logic_error("parent is not an improving neighbor");
    }
    for (std::size_t v = 0; v < n; ++v) {
        int         cur   = static_cast<int>(v);
        std::size_t steps = 0;
        while (cur != A.root) {
            cur = A.parent[cur];
            if (++steps > n) throw std::logic_error("parent map does not reach the root");
        }
    }
}

Arborescence arborescence(const Orientation& ori, const Normalization& N, const QVec& w) {
    Arborescence A;
    A.root = ori.sink;
    A.parent.assign(ori.vertexCount(), -1);
    A.parent[A.root] = A.root;
    for (std::size_t v = 0; v < ori.vertexCount(); ++v) {
        if (static_cast<int>(v) == A.root) continue;
        A.parent[v] = nw_step(ori, N, w, static_cast<int>(v));
    }
    validateArborescence(A, ori);
    return A;
}

Arborescence branching_for_objective(const Polytope& P, const Normalization& N, const QVec& c) {
    if (N.dependsOnObjective())
        throw UnsupportedNormalization("branching_for_objective needs N independent of c");
    Orientation  ori = orient(P, c);
    Arborescence viaRule = arborescence(ori, N, c);

    // Direct undirected argmax over N(P,v) u {v}; the u = v term scores 0.
    Arborescence direct;
    direct.root = ori.sink;
    direct.parent.assign(P.vertexCount(), -1);
    for (std::size_t v = 0; v < P.vertexCount(); ++v) {
        int        bestU   = static_cast<int>(v);
        SlopeValue bestVal = SlopeValue::zero();
        for (int u : P.neighbors[v]) {
            SlopeValue s = slope_value(N, c, sub(P.vertices[u], P.vertices[v]), &c);
            int        cmp = slopeCompare(s, bestVal);
            if (cmp > 0) {
                bestU   = u;
                bestVal = s;
            } else if (cmp == 0 && bestU != static_cast<int>(v)) {
                throw TieDetected(static_cast<int>(v), bestU, u);
            }
        }
        direct.parent[v] = bestU;
    }
    if (!(direct == viaRule))
        throw std::logic_error("undirected argmax disagrees with the oriented rule");
    return viaRule;
}

std::vector<int> shadow_vertex_path(const Orientation& ori, const QVec& w, int start) {
    Normalization    ms = Normalization::ms();
    std::vector<int> path{start};
    int              cur = start;
    while (cur != ori.sink) {
        cur = nw_step(ori, ms, w, cur);
        path.push_back(cur);
        if (path.size() > ori.vertexCount()) throw std::logic_error("shadow path cycles");
    }
    for (std::size_t i = 1; i < path.size(); ++i)
        if (!(ori.values[path[i - 1]] < ori.values[path[i]]))
            throw std::logic_error("shadow path is not c-monotone");
    return path;
}

Normalization realize_arborescence(const Polytope& P, const QVec& c, const Arborescence& A) {
    // Edge-genericity: direction vectors of distinct edges differ (up to the
    // intrinsic +- of an unordered edge).
    std::map<QVec, std::pair<int, int>> seen;
    for (auto [i, j] : P.edges) {
        for (const QVec& dvec : {sub(P.vertices[j], P.vertices[i]),
                                 sub(P.vertices[i], P.vertices[j])}) {
            auto [it, fresh] = seen.emplace(dvec, std::make_pair(i, j));
            if (!fresh && it->second != std::make_pair(i, j))
                throw NotEdgeGeneric("edges {" + std::to_string(i) + "," + std::to_string(j) +
                                     "} and {" + std::to_string(it->second.first) + "," +
                                     std::to_string(it->second.second) +
                                     "} share a direction");
        }
    }

    Orientation ori = orient(P, c);
    validateArborescence(A, ori);

    std::map<QVec, Rational> values;
    Rational                 maxGain = 0, minGain = 0;
    bool                     first = true;
    for (std::size_t v = 0; v < P.vertexCount(); ++v) {
        if (static_cast<int>(v) == A.root) continue;
        values[sub(P.vertices[A.parent[v]], P.vertices[v])] = 1;
        for (int u : ori.improving[v]) {
            Rational g = ori.values[u] - ori.values[v];
            if (first) {
                maxGain = minGain = g;
                first             = false;
            } else {
                maxGain = std::max(maxGain, g);
                minGain = std::min(minGain, g);
            }
        }
    }
    // kappa beyond max/min gain ratio makes every non-tree improving step
    // score strictly below every tree step.
    Rational kappa = 1 + maxGain / minGain;
    auto     N     = Normalization::custom(std::move(values), kappa);

    if (!(arborescence(ori, N, c) == A))
        throw std::logic_error("realization round trip failed");
    return N;
}

std::string arborescenceToJson(const Arborescence& A) {
    nlohmann::json j;
    j["root"] = A.root;
    nlohmann::json p = nlohmann::json::object();
    for (std::size_t v = 0; v < A.parent.size(); ++v)
        p[std::to_string(v)] = A.parent[v];
    j["parent"] = p;
    return j.dump(2);
}

Arborescence arborescenceFromJson(const std::string& text) {
    auto         j = nlohmann::json::parse(text);
    Arborescence A;
    A.root = j.at("root").get<int>();
    const auto& p = j.at("parent");
    A.parent.assign(p.size(), -1);
    for (auto it = p.begin(); it != p.end(); ++it) {
        std::size_t v = std::stoul(it.key());
        if (v >= A.parent.size()) throw std::invalid_argument("parent key out of range");
        A.parent[v] = it.value().get<int>();
    }
    for (int x : A.parent)
        if (x < 0) throw std::invalid_argument("parent map misses a vertex");
    return A;
}

std::string arborescenceToDot(const Arborescence& A, const Orientation& ori) {
    std::ostringstream os;
    os << "digraph arborescence {\n  rankdir=BT;\n";
    // Vertices tied at the same objective value share a rank.
    std::map<Rational, std::vector<int>> levels;
    for (std::size_t v = 0; v < A.parent.size(); ++v) levels[ori.values[v]].push_back(static_cast<int>(v));
    for (const auto& [val, verts] : levels) {
        os << "  { rank=same;";
        for (int v : verts) os << " v" << v << ";";
        os << " }  // c = " << rationalToString(val) << "\n";
    }
    for (std::size_t v = 0; v < A.parent.size(); ++v) {
        os << "  v" << v << " [label=\"" << vecToString(ori.P().vertices[v]) << "\"];\n";
        if (static_cast<int>(v) != A.root) os << "  v" << v << " -> v" << A.parent[v] << ";\n";
    }
    os << "}\n";
    return os.str();
}

}  // namespace pivotal
