#include "pivotal/paths_sweeps.hpp"

#include "pivotal/chambers.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace pivotal {

void validateMonotonePath(const MonotonePath& W, const Orientation& ori) {
    if (W.empty() || W.front() != ori.source || W.back() != ori.sink)
        throw std::logic_error("path must run from the source to the sink");
    for (std::size_t i = 1; i < W.size(); ++i) {
        const auto& nb = ori.improving[W[i - 1]];
        if (!std::binary_search(nb.begin(), nb.end(), W[i]))
            throw std::logic_error("path step is not an improving edge");
    }
}

std::vector<MonotonePath> monotone_paths(const Orientation& ori) {
    std::size_t               guard = enumeration_guard(20000);
    std::vector<MonotonePath> out;
    MonotonePath              cur{ori.source};
    auto dfs = [&](auto&& self, int v) -> void {
        if (v == ori.sink) {
            if (out.size() >= guard)
                throw EnumerationGuard("monotone path count exceeds guard " +
                                       std::to_string(guard));
            out.push_back(cur);
            return;
        }
        for (int u : ori.improving[v]) {
            cur.push_back(u);
            self(self, u);
            cur.pop_back();
        }
    };
    dfs(dfs, ori.source);
    std::sort(out.begin(), out.end());
    return out;
}

QVec path_point(const Orientation& ori, const MonotonePath& W) {
    validateMonotonePath(W, ori);
    QVec phi = zeroVec(ori.P().dim);
    if (W.size() == 1) return ori.P().vertices[W.front()];  // one-vertex program
    Rational total = ori.values[W.back()] - ori.values[W.front()];
    // Average of the section over the c-range: each edge contributes its
    // midpoint weighted by the fraction of the range it covers.
    for (std::size_t i = 1; i < W.size(); ++i) {
        QVec     mid  = scaled(add(ori.P().vertices[W[i]], ori.P().vertices[W[i - 1]]),
                               Rational(1, 2));
        Rational gain = ori.values[W[i]] - ori.values[W[i - 1]];
        addInPlace(phi, scaled(mid, gain / total));
    }
    return phi;
}

ConstructedPolytope monotone_path_polytope(const Orientation& ori) {
    auto                paths = monotone_paths(ori);
    std::vector<QVec>   pts;
    for (const auto& W : paths) pts.push_back(path_point(ori, W));
    std::vector<QVec> dedup = pts;
    std::sort(dedup.begin(), dedup.end());
    dedup.erase(std::unique(dedup.begin(), dedup.end()), dedup.end());

    ConstructedPolytope C;
    C.dim  = ori.P().dim;
    C.name = "monotone-path-polytope(" + ori.P().name + ")";
    std::map<QVec, MonotonePath> labelOf;
    for (std::size_t k = 0; k < paths.size(); ++k)
        if (!labelOf.count(pts[k])) labelOf.emplace(pts[k], paths[k]);
    for (const auto& p : dedup) {
        if (!hull_vertex_test(p, dedup)) continue;
        C.points.push_back(p);
        VertexLabel label;
        label.path = labelOf.at(p);
        C.labels.push_back(std::move(label));
    }
    return C;  // edges not computed for path polytopes
}

MonotonePath coherent_path_for_weight(const Orientation& ori, const QVec& w) {
    // r = P^w, unique for a generic weight.
    int      r = 0;
    Rational best = dot(w, ori.P().vertices[0]);
    for (std::size_t v = 1; v < ori.vertexCount(); ++v) {
        Rational val = dot(w, ori.P().vertices[v]);
        if (val > best) {
            r    = static_cast<int>(v);
            best = val;
        } else if (val == best) {
            throw TieDetected(static_cast<int>(v), r, static_cast<int>(v));
        }
    }
    auto up   = shadow_vertex_path(ori, w, r);
    auto down = shadow_vertex_path(orient(ori.P(), negated(ori.c)), w, r);
    MonotonePath W(down.rbegin(), down.rend());
    W.insert(W.end(), up.begin() + 1, up.end());
    validateMonotonePath(W, ori);

    // The glued path must be the w-maximal path point.
    QVec     phiW  = path_point(ori, W);
    Rational target = dot(w, phiW);
    for (const auto& other : monotone_paths(ori)) {
        Rational val = dot(w, path_point(ori, other));
        if (val > target || (val == target && other != W))
            throw std::logic_error("glued shadow path is not the w-maximal path");
    }
    return W;
}

std::vector<std::vector<int>> sweeps(const SweepConfiguration& cfg) {
    if (cfg.empty()) throw EmptyInput("sweeps: empty configuration");
    for (std::size_t i = 0; i < cfg.size(); ++i)
        for (std::size_t j = i + 1; j < cfg.size(); ++j)
            if (cfg[i] == cfg[j]) throw std::invalid_argument("sweep points must be distinct");
    if (cfg.size() == 1) return {{0}};

    std::vector<QVec> atoms;
    for (std::size_t i = 0; i < cfg.size(); ++i)
        for (std::size_t j = i + 1; j < cfg.size(); ++j) atoms.push_back(sub(cfg[j], cfg[i]));
    auto g = enumerate_chambers(atoms, enumeration_guard(200000));

    std::vector<std::vector<int>> orders;
    std::set<std::vector<int>>    seen;
    for (const auto& ch : g.chambers) {
        std::vector<int> order(cfg.size());
        for (std::size_t i = 0; i < cfg.size(); ++i) order[i] = static_cast<int>(i);
        std::sort(order.begin(), order.end(), [&](int a, int b) {
            Rational va = dot(ch.witness, cfg[a]);
            Rational vb = dot(ch.witness, cfg[b]);
            if (va == vb) throw std::logic_error("chamber witness ties two points");
            return va < vb;
        });
        if (!seen.insert(order).second)
            throw std::logic_error("two chambers induced the same sweep");
        orders.push_back(std::move(order));
    }
    std::sort(orders.begin(), orders.end());
    return orders;
}

ConstructedPolytope sweep_polytope(const SweepConfiguration& cfg) {
    if (cfg.empty()) throw EmptyInput("sweep_polytope: empty configuration");
    for (std::size_t i = 0; i < cfg.size(); ++i)
        for (std::size_t j = i + 1; j < cfg.size(); ++j)
            if (cfg[i] == cfg[j]) throw std::invalid_argument("sweep points must be distinct");

    ConstructedPolytope C;
    C.dim  = static_cast<int>(cfg.front().size());
    C.name = "sweep-polytope";
    if (cfg.size() == 1) {
        C.points.push_back(zeroVec(C.dim));
        VertexLabel label;
        label.ordering = std::vector<int>{0};
        C.labels.push_back(std::move(label));
        C.edgesKnown = true;
        return C;
    }

    std::vector<QVec>                  atoms;
    std::vector<std::pair<int, int>>   atomPair;
    for (std::size_t i = 0; i < cfg.size(); ++i)
        for (std::size_t j = i + 1; j < cfg.size(); ++j) {
            atoms.push_back(sub(cfg[j], cfg[i]));
            atomPair.emplace_back(static_cast<int>(i), static_cast<int>(j));
        }
    auto g = enumerate_chambers(atoms, enumeration_guard(200000));

    for (std::size_t c = 0; c < g.chambers.size(); ++c) {
        QVec v = zeroVec(C.dim);
        for (std::size_t a = 0; a < atoms.size(); ++a) {
            int s = g.atomSign(static_cast<int>(c), static_cast<int>(a));
            addInPlace(v, s > 0 ? atoms[a] : negated(atoms[a]));
        }
        std::vector<int> order(cfg.size());
        for (std::size_t i = 0; i < cfg.size(); ++i) order[i] = static_cast<int>(i);
        std::sort(order.begin(), order.end(), [&](int a, int b) {
            Rational va = dot(g.chambers[c].witness, cfg[a]);
            Rational vb = dot(g.chambers[c].witness, cfg[b]);
            return va < vb;
        });
        C.points.push_back(std::move(v));
        VertexLabel label;
        label.ordering = std::move(order);
        C.labels.push_back(std::move(label));
    }

    // Chambers arrive sorted by sign vector; re-sort vertices lexicographically
    // and carry labels and adjacency along.
    std::vector<int> order(C.points.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return C.points[a] < C.points[b]; });
    std::vector<int> rank(order.size());
    for (std::size_t r = 0; r < order.size(); ++r) rank[order[r]] = static_cast<int>(r);
    std::vector<QVec>        pts;
    std::vector<VertexLabel> labels;
    for (int id : order) {
        pts.push_back(std::move(C.points[id]));
        labels.push_back(std::move(C.labels[id]));
    }
    C.points = std::move(pts);
    C.labels = std::move(labels);
    std::set<std::pair<int, int>> edges;
    for (auto [a, b] : g.adjacency) {
        int x = rank[a], y = rank[b];
        if (C.points[x] == C.points[y]) throw std::logic_error("two sweeps share a vertex");
        edges.insert({std::min(x, y), std::max(x, y)});
    }
    C.edges.assign(edges.begin(), edges.end());
    C.edgesKnown = true;
    return C;
}

VertexSetView view(const Polytope& P) {
    VertexSetView v;
    v.points       = P.vertices;
    v.neighbors    = P.neighbors;
    v.hasNeighbors = true;
    v.name         = P.name;
    return v;
}

VertexSetView view(const ConstructedPolytope& C) {
    VertexSetView v;
    v.points       = C.points;
    v.neighbors    = C.neighborLists();
    v.hasNeighbors = C.edgesKnown;
    v.name         = C.name;
    return v;
}

namespace {

// Directions whose nonnegativity cuts out the normal cone of point i.
std::vector<QVec> normalConeRows(const VertexSetView& V, int i) {
    std::vector<QVec> rows;
    if (V.hasNeighbors) {
        for (int j : V.neighbors[i]) rows.push_back(sub(V.points[i], V.points[j]));
    } else {
        for (std::size_t j = 0; j < V.points.size(); ++j)
            if (static_cast<int>(j) != i && V.points[j] != V.points[i])
                rows.push_back(sub(V.points[i], V.points[j]));
    }
    return rows;
}

}  // namespace

bool is_weak_summand(const VertexSetView& Q, const VertexSetView& P) {
    if (P.points.empty() || Q.points.empty()) throw EmptyInput("empty polytope view");
    if (P.points.front().size() != Q.points.front().size())
        throw DimensionMismatch("ambient dimensions differ");
    if (Q.points.size() == 1) return true;  // a point is a summand of anything

    for (std::size_t i = 0; i < P.points.size(); ++i) {
        auto rows = normalConeRows(P, static_cast<int>(i));
        if (rows.empty()) return Q.points.size() == 1;
        auto wit = relative_interior_witness(rows, {});
        if (!wit.found)
            throw std::logic_error("polytope view lists a point that is not a vertex");
        const QVec& w = wit.w;

        // The face of Q selected by w must be a single point.
        std::vector<int> argmax{0};
        Rational         best = dot(w, Q.points[0]);
        for (std::size_t u = 1; u < Q.points.size(); ++u) {
            Rational val = dot(w, Q.points[u]);
            if (val > best) {
                best   = val;
                argmax = {static_cast<int>(u)};
            } else if (val == best) {
                argmax.push_back(static_cast<int>(u));
            }
        }
        if (argmax.size() > 1) {
            bool allEqual = true;
            for (int u : argmax) allEqual &= (Q.points[u] == Q.points[argmax[0]]);
            if (!allEqual) return false;
        }
        int u = argmax[0];

        // Containment N_P(v) within N_Q(u): no x in the cone may separate any
        // rival point of Q above u.
        std::vector<int> rivals;
        if (Q.hasNeighbors)
            rivals = Q.neighbors[u];
        else {
            for (std::size_t r = 0; r < Q.points.size(); ++r)
                if (static_cast<int>(r) != u) rivals.push_back(static_cast<int>(r));
        }
        const std::size_t d = P.points.front().size();
        for (int r : rivals) {
            QVec                 gain = sub(Q.points[r], Q.points[u]);
            LinearProgramInstance lp;
            lp.objective = gain;
            for (const auto& row : rows)
                lp.constraints.push_back({negated(row), 0, Relation::LessEq});
            for (std::size_t t = 0; t < d; ++t) {
                lp.constraints.push_back({unitVec(d, t), 1, Relation::LessEq});
                lp.constraints.push_back({unitVec(d, t, -1), 1, Relation::LessEq});
            }
            auto res = lp_solve(lp);
            if (res.status != LpStatus::Optimal)
                throw std::logic_error("cone containment LP must be bounded");
            if (res.value > 0) return false;
        }
    }
    return true;
}

bool normally_equivalent(const VertexSetView& P, const VertexSetView& Q) {
    return is_weak_summand(P, Q) && is_weak_summand(Q, P);
}

bool is_belt(const VertexSetView& P, const std::vector<QVec>& edgeDirections) {
    auto Z = zonotope(edgeDirections);
    return normally_equivalent(P, view(Z));
}

bool is_belt(const Polytope& P) { return is_belt(view(P), edge_directions(P)); }

bool is_cellular(const Orientation& ori, const MultiArborescence& M) {
    const Polytope& P = ori.P();
    if (M.choice.size() != P.vertexCount())
        throw DimensionMismatch("multi-arborescence size mismatch");

    auto faceOf = [&](int v) {
        std::set<int> s(M.choice[v].begin(), M.choice[v].end());
        s.insert(v);
        return smallest_face(P, s);
    };

    int u = ori.source;
    for (;;) {
        std::set<int> Fi = faceOf(u);
        // The c-maximum of the face.
        int uNext = *Fi.begin();
        for (int v : Fi)
            if (ori.values[v] > ori.values[uNext]) uNext = v;
        for (int v : Fi) {
            if (v == uNext) continue;
            for (int target : M.choice[v])
                if (!Fi.count(target)) return false;
        }
        if (uNext == ori.sink) return true;
        if (uNext == u) throw std::logic_error("cellular chain is stuck");
        u = uNext;
    }
}

bool ms_invariance_check(const Polytope& P, const Polytope& Pprime, const QVec& c) {
    if (!normally_equivalent(view(P), view(Pprime)))
        throw NotNormallyEquivalent("inputs are not normally equivalent");
    auto A = pivot_polytope(orient(P, c), Normalization::ms());
    auto B = pivot_polytope(orient(Pprime, c), Normalization::ms());
    return A.points == B.points;  // both sorted lexicographically
}

}  // namespace pivotal
