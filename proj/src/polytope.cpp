#include "pivotal/polytope.hpp"

#include "pivotal/chambers.hpp"
#include "pivotal/linalg.hpp"

#include <json.hpp>

#include <algorithm>
#include <map>

namespace pivotal {

void Polytope::rebuildNeighbors() {
    neighbors.assign(vertices.size(), {});
    for (auto [i, j] : edges) {
        neighbors[i].push_back(j);
        neighbors[j].push_back(i);
    }
    for (auto& list : neighbors) std::sort(list.begin(), list.end());
}

std::size_t Polytope::intrinsicDim() const { return affineDim(vertices); }

bool Polytope::isSimple() const {
    std::size_t d = intrinsicDim();
    for (const auto& list : neighbors)
        if (list.size() != d) return false;
    return true;
}

std::vector<std::pair<int, int>> compute_edges(const std::vector<QVec>& vertices) {
    const int n = static_cast<int>(vertices.size());
    for (const auto& v : vertices)
        if (!hull_vertex_test(v, vertices))
            throw NotAVertex("compute_edges: point " + vecToString(v) + " is not a hull vertex");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            std::vector<QVec> strict;
            for (int k = 0; k < n; ++k)
                if (k != i && k != j) strict.push_back(sub(vertices[i], vertices[k]));
            std::vector<QVec> tight = {sub(vertices[i], vertices[j])};
            if (strict.empty() || relative_interior_witness(strict, tight).found)
                edges.emplace_back(i, j);
        }
    }
    return edges;
}

Polytope makePolytope(std::vector<QVec> vertices, std::string name, bool checkVertices) {
    if (vertices.empty()) throw EmptyInput("polytope needs at least one vertex");
    for (const auto& v : vertices) checkDim(v, vertices.front());
    std::sort(vertices.begin(), vertices.end());
    if (std::adjacent_find(vertices.begin(), vertices.end()) != vertices.end())
        throw NotAVertex("duplicate vertex in input");
    if (checkVertices)
        for (const auto& v : vertices)
            if (!hull_vertex_test(v, vertices))
                throw NotAVertex("point " + vecToString(v) + " is not a hull vertex");
    Polytope P;
    P.dim      = static_cast<int>(vertices.front().size());
    P.vertices = std::move(vertices);
    P.name     = std::move(name);
    P.edges    = compute_edges(P.vertices);
    P.rebuildNeighbors();
    return P;
}

Orientation orient(const Polytope& P, const QVec& c) {
    Orientation ori;
    ori.polytope = &P;
    ori.c        = c;
    ori.values.reserve(P.vertexCount());
    for (const auto& v : P.vertices) ori.values.push_back(dot(c, v));
    ori.improving.assign(P.vertexCount(), {});
    ori.worsening.assign(P.vertexCount(), {});
    for (auto [i, j] : P.edges) {
        if (ori.values[i] == ori.values[j])
            throw NonGenericObjective("objective ties on edge {" + std::to_string(i) + "," +
                                      std::to_string(j) + "}");
        int tail = ori.values[i] < ori.values[j] ? i : j;
        int head = tail == i ? j : i;
        ori.directedEdges.emplace_back(tail, head);
        ori.improving[tail].push_back(head);
        ori.worsening[head].push_back(tail);
    }
    for (std::size_t v = 0; v < P.vertexCount(); ++v) {
        std::sort(ori.improving[v].begin(), ori.improving[v].end());
        std::sort(ori.worsening[v].begin(), ori.worsening[v].end());
        if (ori.improving[v].empty()) {
            if (ori.sink != -1) throw std::logic_error("orientation has two sinks");
            ori.sink = static_cast<int>(v);
        }
        if (ori.worsening[v].empty()) {
            if (ori.source != -1) throw std::logic_error("orientation has two sources");
            ori.source = static_cast<int>(v);
        }
    }
    return ori;
}

std::vector<std::size_t> h_vector(const Orientation& ori) {
    const Polytope& P = ori.P();
    if (!P.isSimple()) throw NotSimple("h_vector requires a simple polytope");
    std::size_t              d = P.intrinsicDim();
    std::vector<std::size_t> h(d + 1, 0);
    for (std::size_t v = 0; v < P.vertexCount(); ++v) ++h[ori.worsening[v].size()];
    return h;
}

Polytope simplex(int d) {
    if (d < 1) throw std::invalid_argument("simplex: d >= 1");
    Polytope P;
    P.dim = d;
    for (int i = 0; i < d; ++i) P.vertices.push_back(unitVec(d, i));
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j) P.edges.emplace_back(i, j);
    P.name = "simplex(" + std::to_string(d) + ")";
    P.rebuildNeighbors();
    return P;
}

Polytope cube(int d) {
    if (d < 1) throw std::invalid_argument("cube: d >= 1");
    Polytope P;
    P.dim = d;
    for (int mask = 0; mask < (1 << d); ++mask) {
        QVec v(d);
        for (int i = 0; i < d; ++i) v[i] = (mask >> i) & 1;
        P.vertices.push_back(std::move(v));
    }
    for (int a = 0; a < (1 << d); ++a)
        for (int i = 0; i < d; ++i) {
            int b = a | (1 << i);
            if (b != a) P.edges.emplace_back(a, b);
        }
    P.name = "cube(" + std::to_string(d) + ")";
    P.rebuildNeighbors();
    return P;
}

Polytope cross_polytope(int d) {
    if (d < 1) throw std::invalid_argument("cross_polytope: d >= 1");
    Polytope P;
    P.dim = d;
    for (int i = 0; i < d; ++i) P.vertices.push_back(unitVec(d, i));
    for (int i = 0; i < d; ++i) P.vertices.push_back(unitVec(d, i, -1));
    for (int i = 0; i < 2 * d; ++i)
        for (int j = i + 1; j < 2 * d; ++j)
            if (j != i + d) P.edges.emplace_back(i, j);
    if (d == 1) P.edges.emplace_back(0, 1);
    P.name = "cross(" + std::to_string(d) + ")";
    P.rebuildNeighbors();
    return P;
}

Polytope product(const Polytope& P, const Polytope& Q) {
    Polytope R;
    R.dim         = P.dim + Q.dim;
    const int nQ  = static_cast<int>(Q.vertexCount());
    for (const auto& v : P.vertices)
        for (const auto& w : Q.vertices) {
            QVec x = v;
            x.insert(x.end(), w.begin(), w.end());
            R.vertices.push_back(std::move(x));
        }
    auto id = [nQ](int i, int j) { return i * nQ + j; };
    for (auto [i, i2] : P.edges)
        for (int j = 0; j < nQ; ++j) R.edges.emplace_back(id(i, j), id(i2, j));
    for (auto [j, j2] : Q.edges)
        for (int i = 0; i < static_cast<int>(P.vertexCount()); ++i)
            R.edges.emplace_back(id(i, j), id(i, j2));
    for (auto& [a, b] : R.edges)
        if (a > b) std::swap(a, b);
    std::sort(R.edges.begin(), R.edges.end());
    R.name = P.name + "x" + Q.name;
    R.rebuildNeighbors();
    return R;
}

Polytope prism(const Polytope& P) {
    Polytope seg;
    seg.dim      = 1;
    seg.vertices = {QVec{Rational(0)}, QVec{Rational(1)}};
    seg.edges    = {{0, 1}};
    seg.name     = "segment";
    seg.rebuildNeighbors();
    Polytope R = product(P, seg);
    R.name     = "prism(" + P.name + ")";
    return R;
}

Polytope zonotope(const std::vector<QVec>& generators) {
    if (generators.empty()) throw EmptyInput("zonotope: no generators");
    for (const auto& z : generators)
        if (isZero(z)) throw ZeroGenerator("zonotope: zero generator");
    ChamberGraph g = enumerate_chambers(generators, enumeration_guard(200000));

    Polytope P;
    P.dim = static_cast<int>(generators.front().size());
    for (std::size_t c = 0; c < g.chambers.size(); ++c) {
        QVec v = zeroVec(P.dim);
        for (std::size_t a = 0; a < generators.size(); ++a) {
            int s = g.atomSign(static_cast<int>(c), static_cast<int>(a));
            addInPlace(v, s > 0 ? generators[a] : negated(generators[a]));
        }
        P.vertices.push_back(std::move(v));
    }
    P.edges = g.adjacency;
    for (auto& [a, b] : P.edges)
        if (a > b) std::swap(a, b);
    std::sort(P.edges.begin(), P.edges.end());
    P.edges.erase(std::unique(P.edges.begin(), P.edges.end()), P.edges.end());
    P.name = "zonotope";
    P.rebuildNeighbors();
    return P;
}

Polytope edge_zonotope(const Polytope& P) {
    std::vector<QVec> gens;
    for (auto [i, j] : P.edges) gens.push_back(sub(P.vertices[j], P.vertices[i]));
    Polytope Z = zonotope(gens);
    Z.name     = "EZ(" + P.name + ")";
    return Z;
}

std::vector<QVec> edge_directions(const Polytope& P) {
    std::set<QVec> dirs;
    for (auto [i, j] : P.edges) {
        dirs.insert(sub(P.vertices[j], P.vertices[i]));
        dirs.insert(sub(P.vertices[i], P.vertices[j]));
    }
    return {dirs.begin(), dirs.end()};
}

std::vector<Facet> facets_bruteforce(const Polytope& P) {
    const std::size_t k = P.intrinsicDim();
    if (k > 4) throw DimensionGuard("facets_bruteforce guarded at intrinsic dimension 4");
    const std::size_t n = P.vertexCount();
    if (k == 0) return {};

    // Work in affine coordinates over a basis of the hull's direction space.
    std::vector<QVec> diffs;
    for (std::size_t i = 1; i < n; ++i) diffs.push_back(sub(P.vertices[i], P.vertices[0]));
    std::vector<QVec> basis;
    for (const auto& dvec : diffs) {
        basis.push_back(dvec);
        if (rankOf(basis) != basis.size()) basis.pop_back();
        if (basis.size() == k) break;
    }
    std::vector<QVec> coords(n);
    for (std::size_t i = 0; i < n; ++i) {
        auto x = expressInBasis(basis, sub(P.vertices[i], P.vertices[0]));
        if (!x) throw std::logic_error("vertex outside affine hull basis");
        coords[i] = *x;
    }

    std::map<std::pair<QVec, Rational>, std::set<int>> found;
    // Enumerate k-subsets spanning a hyperplane of the k-dim affine hull.
    auto consider = [&](const std::vector<int>& pts) {
        std::vector<QVec> span;
        for (std::size_t t = 1; t < pts.size(); ++t)
            span.push_back(sub(coords[pts[t]], coords[pts[0]]));
        if (rankOf(span) != k - 1) return;
        auto ns = nullspaceOf(span, k);
        if (ns.size() != 1) return;
        QVec     normal = canonicalLine(ns.front());
        Rational rhs    = dot(normal, coords[pts[0]]);
        int      side   = 0;
        for (std::size_t i = 0; i < n; ++i) {
            Rational val = dot(normal, coords[i]);
            if (val > rhs) {
                if (side < 0) return;
                side = 1;
            } else if (val < rhs) {
                if (side > 0) return;
                side = -1;
            }
        }
        if (side == 0) return;  // all vertices on the hyperplane: not a facet
        if (side > 0) {
            normal = negated(normal);
            rhs    = -rhs;
        }
        std::set<int> onFacet;
        for (std::size_t i = 0; i < n; ++i)
            if (dot(normal, coords[i]) == rhs) onFacet.insert(static_cast<int>(i));
        found.emplace(std::make_pair(normal, rhs), std::move(onFacet));
    };
    // Iterate combinations.
    std::vector<int> pts(k);
    std::vector<int> state(k);
    for (std::size_t t = 0; t < k; ++t) state[t] = static_cast<int>(t);
    if (n >= k) {
        for (;;) {
            for (std::size_t t = 0; t < k; ++t) pts[t] = state[t];
            consider(pts);
            int t = static_cast<int>(k) - 1;
            while (t >= 0 && state[t] == static_cast<int>(n - k + t)) --t;
            if (t < 0) break;
            ++state[t];
            for (std::size_t u = t + 1; u < k; ++u) state[u] = state[u - 1] + 1;
        }
    }

    std::vector<Facet> facets;
    for (auto& [key, verts] : found) {
        // Lift the affine-coordinate normal back to ambient space.
        const QVec&       ncoef = key.first;
        const std::size_t d     = P.vertices.front().size();
        // Gram matrix solve: ambient normal a = B z with (B^T B) z = ncoef.
        std::vector<QVec> gramRows(k, QVec(k));
        for (std::size_t r = 0; r < k; ++r)
            for (std::size_t c = 0; c < k; ++c) gramRows[r][c] = dot(basis[r], basis[c]);
        std::vector<QVec> gramCols(k, QVec(k));
        for (std::size_t r = 0; r < k; ++r)
            for (std::size_t c = 0; c < k; ++c) gramCols[c][r] = gramRows[r][c];
        auto z = expressInBasis(gramCols, ncoef);
        if (!z) throw std::logic_error("gram system unsolvable");
        QVec ambient = zeroVec(d);
        for (std::size_t r = 0; r < k; ++r) addInPlace(ambient, scaled(basis[r], (*z)[r]));
        Facet f;
        f.normal    = ambient;
        f.rhs       = dot(ambient, P.vertices[*verts.begin()]);
        f.vertexSet = verts;
        facets.push_back(std::move(f));
    }
    return facets;
}

std::set<int> smallest_face(const Polytope& P, const std::set<int>& S) {
    if (S.empty()) throw EmptyInput("smallest_face: empty vertex set");
    auto          facets = facets_bruteforce(P);
    std::set<int> result;
    for (std::size_t i = 0; i < P.vertexCount(); ++i) result.insert(static_cast<int>(i));
    for (const auto& f : facets) {
        bool contains = std::includes(f.vertexSet.begin(), f.vertexSet.end(), S.begin(), S.end());
        if (!contains) continue;
        std::set<int> inter;
        std::set_intersection(result.begin(), result.end(), f.vertexSet.begin(),
                              f.vertexSet.end(), std::inserter(inter, inter.begin()));
        result = std::move(inter);
    }
    return result;
}

namespace {

nlohmann::json rationalJson(const Rational& r) {
    if (denominator(r) == 1 && abs(numerator(r)) < 1000000000) {
        return nlohmann::json(static_cast<long long>(numerator(r)));
    }
    return nlohmann::json(rationalToString(r));
}

Rational rationalFromJson(const nlohmann::json& j) {
    if (j.is_number_integer()) return Rational(static_cast<long long>(j.get<long long>()));
    if (j.is_string()) return parseRational(j.get<std::string>());
    throw std::invalid_argument("rational must be an integer or a 'p/q' string");
}

}  // namespace

Polytope polytopeFromJson(const std::string& text) {
    auto j = nlohmann::json::parse(text);
    if (!j.contains("dim") || !j.contains("vertices"))
        throw std::invalid_argument("polytope JSON needs 'dim' and 'vertices'");
    int               dim = j["dim"].get<int>();
    std::vector<QVec> verts;
    for (const auto& row : j["vertices"]) {
        QVec v;
        for (const auto& x : row) v.push_back(rationalFromJson(x));
        if (static_cast<int>(v.size()) != dim)
            throw std::invalid_argument("vertex dimension disagrees with 'dim'");
        verts.push_back(std::move(v));
    }
    std::string name = j.value("name", std::string{});
    if (!j.contains("edges")) return makePolytope(std::move(verts), name);

    Polytope P;
    P.dim      = dim;
    P.vertices = std::move(verts);
    P.name     = name;
    for (const auto& v : P.vertices)
        if (!hull_vertex_test(v, P.vertices))
            throw NotAVertex("point " + vecToString(v) + " is not a hull vertex");
    for (const auto& e : j["edges"]) {
        int a = e.at(0).get<int>(), b = e.at(1).get<int>();
        if (a == b || a < 0 || b < 0 || a >= static_cast<int>(P.vertexCount()) ||
            b >= static_cast<int>(P.vertexCount()))
            throw std::invalid_argument("bad edge indices");
        P.edges.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::sort(P.edges.begin(), P.edges.end());
    P.rebuildNeighbors();
    return P;
}

std::string polytopeToJson(const Polytope& P) {
    nlohmann::json j;
    j["dim"] = P.dim;
    j["vertices"] = nlohmann::json::array();
    for (const auto& v : P.vertices) {
        nlohmann::json row = nlohmann::json::array();
        for (const auto& x : v) row.push_back(rationalJson(x));
        j["vertices"].push_back(row);
    }
    j["edges"] = nlohmann::json::array();
    for (auto [a, b] : P.edges) j["edges"].push_back({a, b});
    if (!P.name.empty()) j["name"] = P.name;
    return j.dump(2);
}

}  // namespace pivotal
