#include "pivotal/pivot_polytopes.hpp"

#include "pivotal/chambers.hpp"

#include <json.hpp>

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace pivotal {

Arborescence MultiArborescence::asArborescence() const {
    if (!allSingletons()) throw std::logic_error("multi-arborescence has a non-singleton set");
    Arborescence A;
    A.root = root;
    for (const auto& s : choice) A.parent.push_back(s.front());
    return A;
}

std::vector<std::vector<int>> ConstructedPolytope::neighborLists() const {
    std::vector<std::vector<int>> nbr(points.size());
    if (!edgesKnown) return nbr;
    for (auto [a, b] : edges) {
        nbr[a].push_back(b);
        nbr[b].push_back(a);
    }
    for (auto& list : nbr) std::sort(list.begin(), list.end());
    return nbr;
}

namespace {

// A Minkowski summand system: one option list per active vertex. Choosing one
// option per vertex is choosing a vertex candidate of the sum.
struct Summands {
    const Polytope*                P = nullptr;
    bool                           directed = true;
    int                            root     = -1;  // sink in the directed case
    std::vector<int>               verts;          // active vertices
    std::vector<std::vector<QVec>> dirs;           // normalized options
    std::vector<std::vector<int>>  targets;        // chosen neighbor (or v itself)
    int                            dim = 0;

    Arborescence toArborescence(const std::vector<int>& choice) const {
        Arborescence A;
        A.parent.assign(P->vertexCount(), -1);
        A.root = root;
        if (root >= 0) A.parent[root] = root;
        for (std::size_t k = 0; k < verts.size(); ++k)
            A.parent[verts[k]] = targets[k][choice[k]];
        if (A.root < 0) {
            for (std::size_t v = 0; v < A.parent.size(); ++v)
                if (A.parent[v] == static_cast<int>(v)) {
                    if (A.root >= 0) throw std::logic_error("two fixed points in branching");
                    A.root = static_cast<int>(v);
                }
            if (A.root < 0) throw std::logic_error("branching has no fixed point");
        }
        return A;
    }

    std::vector<int> choiceOf(const Arborescence& A) const {
        std::vector<int> choice(verts.size(), -1);
        for (std::size_t k = 0; k < verts.size(); ++k) {
            int p = A.parent[verts[k]];
            for (std::size_t t = 0; t < targets[k].size(); ++t)
                if (targets[k][t] == p) {
                    choice[k] = static_cast<int>(t);
                    break;
                }
            if (choice[k] < 0) throw std::logic_error("arborescence leaves the option sets");
        }
        return choice;
    }

    QVec phiOf(const std::vector<int>& choice) const {
        QVec phi = zeroVec(dim);
        for (std::size_t k = 0; k < verts.size(); ++k) addInPlace(phi, dirs[k][choice[k]]);
        return phi;
    }
};

QVec normalizedDir(const Normalization& N, const QVec& d, const QVec* c) {
    return scaled(d, 1 / N.value(d, c));
}

Summands directedSummands(const Orientation& ori, const Normalization& N) {
    if (!N.rationalValued())
        throw UnsupportedNormalization("polytope construction needs rational direction values");
    Summands S;
    S.P        = ori.polytope;
    S.directed = true;
    S.root     = ori.sink;
    S.dim      = S.P->dim;
    for (std::size_t v = 0; v < ori.vertexCount(); ++v) {
        if (static_cast<int>(v) == ori.sink) continue;
        S.verts.push_back(static_cast<int>(v));
        std::vector<QVec> dirs;
        std::vector<int>  targets;
        for (int u : ori.improving[v]) {
            dirs.push_back(
                normalizedDir(N, sub(S.P->vertices[u], S.P->vertices[v]), &ori.c));
            targets.push_back(u);
        }
        S.dirs.push_back(std::move(dirs));
        S.targets.push_back(std::move(targets));
    }
    return S;
}

Summands undirectedSummands(const Polytope& P, const Normalization& N) {
    if (N.dependsOnObjective())
        throw UnsupportedNormalization("neighbotope needs a normalization independent of c");
    if (!N.rationalValued())
        throw UnsupportedNormalization("polytope construction needs rational direction values");
    Summands S;
    S.P        = &P;
    S.directed = false;
    S.root     = -1;
    S.dim      = P.dim;
    for (std::size_t v = 0; v < P.vertexCount(); ++v) {
        S.verts.push_back(static_cast<int>(v));
        std::vector<QVec> dirs;
        std::vector<int>  targets;
        for (int u : P.neighbors[v]) {
            dirs.push_back(normalizedDir(N, sub(P.vertices[u], P.vertices[v]), nullptr));
            targets.push_back(u);
        }
        dirs.push_back(zeroVec(S.dim));  // the stay-put option
        targets.push_back(static_cast<int>(v));
        S.dirs.push_back(std::move(dirs));
        S.targets.push_back(std::move(targets));
    }
    return S;
}

// All hyperplane normals that can separate two options of one slot.
std::vector<QVec> optionWallNormals(const OptionSystem& S) {
    std::set<QVec>    seen;
    std::vector<QVec> normals;
    for (const auto& opts : S.options)
        for (std::size_t a = 0; a < opts.size(); ++a)
            for (std::size_t b = a + 1; b < opts.size(); ++b) {
                QVec n = canonicalLine(sub(opts[a], opts[b]));
                if (seen.insert(n).second) normals.push_back(n);
            }
    return normals;
}

std::vector<int> argmaxChoice(const OptionSystem& S, const QVec& w) {
    std::vector<int> choice(S.options.size(), -1);
    for (std::size_t k = 0; k < S.options.size(); ++k) {
        const auto& opts = S.options[k];
        int      best = 0;
        Rational bestVal = dot(w, opts[0]);
        for (std::size_t t = 1; t < opts.size(); ++t) {
            Rational val = dot(w, opts[t]);
            if (val > bestVal) {
                best    = static_cast<int>(t);
                bestVal = val;
            } else if (val == bestVal) {
                throw TieDetected(static_cast<int>(k), best, static_cast<int>(t));
            }
        }
        choice[k] = best;
    }
    return choice;
}

// Inequality system of the weight cone of a choice: one normal per (slot,
// rejected option), deduplicated by ray.
std::vector<QVec> coneNormals(const OptionSystem& S, const std::vector<int>& choice) {
    std::set<QVec>    seen;
    std::vector<QVec> normals;
    for (std::size_t k = 0; k < S.options.size(); ++k)
        for (std::size_t t = 0; t < S.options[k].size(); ++t) {
            if (static_cast<int>(t) == choice[k]) continue;
            QVec n = canonicalRay(sub(S.options[k][choice[k]], S.options[k][t]));
            if (seen.insert(n).second) normals.push_back(n);
        }
    return normals;
}

// Lexicographic argmax for weights w* - eps * n with eps -> 0+.
std::vector<int> argmaxAcrossWall(const OptionSystem& S, const QVec& wstar, const QVec& n) {
    std::vector<int> choice(S.options.size(), -1);
    for (std::size_t k = 0; k < S.options.size(); ++k) {
        const auto& opts = S.options[k];
        Rational top = dot(wstar, opts[0]);
        for (std::size_t t = 1; t < opts.size(); ++t)
            top = std::max(top, dot(wstar, opts[t]));
        int      best = -1;
        Rational bestTie;
        bool     tied = false;
        for (std::size_t t = 0; t < opts.size(); ++t) {
            if (dot(wstar, opts[t]) != top) continue;
            Rational tie = dot(n, opts[t]);
            if (best < 0 || tie < bestTie) {
                best    = static_cast<int>(t);
                bestTie = tie;
                tied    = false;
            } else if (tie == bestTie) {
                tied = true;
            }
        }
        if (tied) throw std::logic_error("wall crossing still tied");
        choice[k] = best;
    }
    return choice;
}

std::vector<CoherentItem> sortedCoherentItems(const Summands& S, const OptionFanResult& fan,
                                              std::vector<std::pair<int, int>>* edgesOut) {
    std::vector<CoherentItem> items;
    for (std::size_t i = 0; i < fan.choices.size(); ++i) {
        CoherentItem item;
        item.arborescence = S.toArborescence(fan.choices[i]);
        item.witness      = fan.witnesses[i];
        item.phi          = S.phiOf(fan.choices[i]);
        items.push_back(std::move(item));
    }
    std::vector<int> order(items.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return std::tie(items[a].phi, items[a].arborescence) <
               std::tie(items[b].phi, items[b].arborescence);
    });
    std::vector<int> rank(order.size());
    for (std::size_t r = 0; r < order.size(); ++r) rank[order[r]] = static_cast<int>(r);
    std::vector<CoherentItem> sorted;
    sorted.reserve(items.size());
    for (int id : order) sorted.push_back(std::move(items[id]));
    for (std::size_t i = 1; i < sorted.size(); ++i)
        if (sorted[i - 1].phi == sorted[i].phi)
            throw std::logic_error("two coherent arborescences share a phi point");
    if (edgesOut) {
        std::set<std::pair<int, int>> remapped;
        for (auto [a, b] : fan.edges) {
            int x = rank[a], y = rank[b];
            remapped.insert({std::min(x, y), std::max(x, y)});
        }
        edgesOut->assign(remapped.begin(), remapped.end());
    }
    return sorted;
}

OptionSystem optionSystemOf(const Summands& S) {
    OptionSystem sys;
    sys.dim     = S.dim;
    sys.options = S.dirs;
    return sys;
}

ConstructedPolytope buildConstructed(const Summands& S, const std::string& name,
                                     std::size_t guard) {
    auto fan = enumerate_option_fan(optionSystemOf(S), guard);
    std::vector<std::pair<int, int>> edges;
    auto items = sortedCoherentItems(S, fan, &edges);
    ConstructedPolytope C;
    C.dim        = S.dim;
    C.edges      = std::move(edges);
    C.edgesKnown = true;
    C.name       = name;
    for (auto& item : items) {
        C.points.push_back(std::move(item.phi));
        VertexLabel label;
        label.arborescence = std::move(item.arborescence);
        C.labels.push_back(std::move(label));
    }
    return C;
}

}  // namespace

QVec phi_point(const Polytope& P, const Normalization& N, const Arborescence& A, const QVec* c) {
    if (!N.rationalValued())
        throw UnsupportedNormalization("phi_point needs rational direction values");
    QVec phi = zeroVec(P.dim);
    for (std::size_t v = 0; v < A.parent.size(); ++v) {
        if (A.parent[v] == static_cast<int>(v)) continue;  // the root contributes zero
        QVec d = sub(P.vertices[A.parent[v]], P.vertices[v]);
        addInPlace(phi, normalizedDir(N, d, c));
    }
    return phi;
}

std::vector<QVec> local_summand(const Orientation& ori, const Normalization& N, int v,
                                bool includeZero) {
    if (!N.rationalValued())
        throw UnsupportedNormalization("local_summand needs rational direction values");
    std::vector<QVec> dirs;
    // The undirected (neighbotope) variant ranges over all graph neighbors
    // and adds the zero vector for u = v.
    const auto& pool = includeZero ? ori.P().neighbors[v] : ori.improving[v];
    for (int u : pool)
        dirs.push_back(normalizedDir(N, sub(ori.P().vertices[u], ori.P().vertices[v]), &ori.c));
    if (includeZero) dirs.push_back(zeroVec(ori.P().dim));
    return dirs;
}

WitnessResult is_coherent(const Orientation& ori, const Normalization& N, const Arborescence& A) {
    validateArborescence(A, ori);
    Summands S      = directedSummands(ori, N);
    auto     choice = S.choiceOf(A);
    auto     cone   = coneNormals(optionSystemOf(S), choice);
    if (cone.empty()) return {true, zeroVec(S.dim)};  // unique arborescence
    auto wit = strict_cone_witness(cone);
    if (!wit.found) return {false, {}};
    if (!(arborescence(ori, N, wit.w) == A))
        throw std::logic_error("coherence witness fails the round trip");
    return wit;
}

std::vector<Arborescence> enumerate_all_arborescences(const Orientation& ori) {
    BigInt prod = 1;
    for (std::size_t v = 0; v < ori.vertexCount(); ++v) {
        if (static_cast<int>(v) == ori.sink) continue;
        prod *= BigInt(ori.improving[v].size());
    }
    std::size_t guard = enumeration_guard(2000000);
    if (prod > BigInt(guard))
        throw EnumerationGuard("arborescence product " + prod.str() + " exceeds guard");

    std::vector<Arborescence> all;
    Arborescence              cur;
    cur.root = ori.sink;
    cur.parent.assign(ori.vertexCount(), -1);
    cur.parent[ori.sink] = ori.sink;
    auto rec = [&](auto&& self, std::size_t v) -> void {
        if (v == ori.vertexCount()) {
            all.push_back(cur);
            return;
        }
        if (static_cast<int>(v) == ori.sink) {
            self(self, v + 1);
            return;
        }
        for (int u : ori.improving[v]) {
            cur.parent[v] = u;
            self(self, v + 1);
        }
    };
    rec(rec, 0);
    for (const auto& A : all) validateArborescence(A, ori);
    std::sort(all.begin(), all.end());
    return all;
}

std::vector<CoherentItem> enumerate_coherent(const Orientation& ori, const Normalization& N) {
    Summands S = directedSummands(ori, N);
    auto     fan = enumerate_option_fan(optionSystemOf(S), enumeration_guard(500000));
    auto     items = sortedCoherentItems(S, fan, nullptr);
    for (const auto& item : items) {
        // Each stored witness must reproduce its arborescence.
        if (!(arborescence(ori, N, item.witness) == item.arborescence))
            throw std::logic_error("stored witness does not reproduce its arborescence");
    }
    return items;
}

std::vector<Arborescence> enumerate_coherent_via_orderings(const Orientation& ori,
                                                           const Normalization& N) {
    Summands S = directedSummands(ori, N);
    std::set<QVec> pointSet;
    for (const auto& list : S.dirs)
        for (const auto& d : list) pointSet.insert(d);
    std::vector<QVec> points(pointSet.begin(), pointSet.end());
    std::size_t guard = enumeration_guard(500000);
    if (points.size() > 60)
        throw EnumerationGuard("too many normalized directions for ordering enumeration");
    std::vector<QVec> atoms;
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = i + 1; j < points.size(); ++j) atoms.push_back(sub(points[i], points[j]));
    std::set<Arborescence> arbs;
    auto sys = optionSystemOf(S);
    if (atoms.empty()) {
        arbs.insert(S.toArborescence(argmaxChoice(sys, genericSeed({}, S.dim))));
    } else {
        auto g = enumerate_chambers(atoms, guard);
        for (const auto& ch : g.chambers) arbs.insert(S.toArborescence(argmaxChoice(sys, ch.witness)));
    }
    return {arbs.begin(), arbs.end()};
}

ConstructedPolytope pivot_polytope(const Orientation& ori, const Normalization& N) {
    Summands S = directedSummands(ori, N);
    auto C = buildConstructed(S, "pivot-polytope[" + N.label() + "](" + ori.P().name + ")",
                              enumeration_guard(500000));
    return C;
}

void validateGraphArborescence(const Arborescence& A, const Polytope& P) {
    const std::size_t n = P.vertexCount();
    if (A.parent.size() != n || A.root < 0) throw std::logic_error("branching shape mismatch");
    for (std::size_t v = 0; v < n; ++v) {
        if (A.parent[v] == static_cast<int>(v)) {
            if (static_cast<int>(v) != A.root) throw std::logic_error("second fixed point");
            continue;
        }
        const auto& nb = P.neighbors[v];
        if (!std::binary_search(nb.begin(), nb.end(), A.parent[v]))
            throw std::logic_error("parent is not a graph neighbor");
    }
    for (std::size_t v = 0; v < n; ++v) {
        int cur = static_cast<int>(v), steps = 0;
        while (cur != A.root) {
            cur = A.parent[cur];
            if (++steps > static_cast<int>(n)) throw std::logic_error("does not reach the root");
        }
    }
}

ConstructedPolytope neighbotope(const Polytope& P, const Normalization& N) {
    Summands S = undirectedSummands(P, N);
    auto C = buildConstructed(S, "neighbotope[" + N.label() + "](" + P.name + ")",
                              enumeration_guard(500000));
    for (const auto& label : C.labels) validateGraphArborescence(*label.arborescence, P);
    return C;
}

OptionFanResult enumerate_option_fan(const OptionSystem& S, std::size_t guard) {
    for (const auto& opts : S.options) {
        if (opts.empty()) throw EmptyInput("option system with an empty slot");
        for (const auto& d : opts) checkDim(d, opts.front());
    }
    OptionFanResult out;
    auto            wallNormals = optionWallNormals(S);

    QVec seed       = genericSeed(wallNormals, static_cast<std::size_t>(S.dim));
    auto seedChoice = argmaxChoice(S, seed);

    std::map<std::vector<int>, int> index;
    std::deque<int>                 queue;
    auto addNode = [&](std::vector<int> choice, QVec witness) {
        int id = static_cast<int>(out.choices.size());
        index.emplace(choice, id);
        out.choices.push_back(std::move(choice));
        out.witnesses.push_back(std::move(witness));
        queue.push_back(id);
        return id;
    };
    addNode(seedChoice, seed);

    std::set<std::pair<int, int>> edgeSet;
    while (!queue.empty()) {
        int cur = queue.front();
        queue.pop_front();
        auto normals = coneNormals(S, out.choices[cur]);
        for (const auto& n : normals) {
            // Facet test: relative interior of the wall within the cone.
            std::vector<QVec> strict;
            QVec              nLine = canonicalLine(n);
            for (const auto& m : normals)
                if (canonicalLine(m) != nLine) strict.push_back(m);
            WitnessResult facet =
                strict.empty() ? WitnessResult{false, {}} : relative_interior_witness(strict, {n});
            if (!strict.empty() && !facet.found) continue;
            QVec             wstar     = strict.empty() ? zeroVec(S.dim) : facet.w;
            std::vector<int> nbrChoice = argmaxAcrossWall(S, wstar, n);
            if (nbrChoice == out.choices[cur]) continue;
            auto it = index.find(nbrChoice);
            int  nbr;
            if (it != index.end()) {
                nbr = it->second;
            } else {
                // Certify the new cone with its own interior witness.
                auto coneStrict = coneNormals(S, nbrChoice);
                auto wit        = strict_cone_witness(coneStrict);
                if (!wit.found) throw std::logic_error("crossed into an empty cone");
                if (out.choices.size() >= guard)
                    throw EnumerationGuard("fan enumeration exceeded guard " +
                                           std::to_string(guard));
                nbr = addNode(std::move(nbrChoice), std::move(wit.w));
            }
            edgeSet.insert({std::min(cur, nbr), std::max(cur, nbr)});
        }
    }
    out.edges.assign(edgeSet.begin(), edgeSet.end());
    for (const auto& choice : out.choices) {
        QVec p = zeroVec(S.dim);
        for (std::size_t k = 0; k < S.options.size(); ++k)
            addInPlace(p, S.options[k][choice[k]]);
        out.points.push_back(std::move(p));
    }
    return out;
}

MultiArborescence face_for_weight(const Orientation& ori, const Normalization& N, const QVec& w) {
    MultiArborescence M;
    M.directed = true;
    M.root     = ori.sink;
    M.choice.resize(ori.vertexCount());
    for (std::size_t v = 0; v < ori.vertexCount(); ++v) {
        if (static_cast<int>(v) == ori.sink) {
            M.choice[v] = {ori.sink};
            continue;
        }
        M.choice[v] = nw_argmax_set(ori, N, w, static_cast<int>(v));
    }
    return M;
}

MultiArborescence finest_coherent_coarsening(const Orientation& ori, const Normalization& N,
                                             const Arborescence& A) {
    validateArborescence(A, ori);
    Summands S       = directedSummands(ori, N);
    auto     choice  = S.choiceOf(A);
    auto     normals = coneNormals(optionSystemOf(S), choice);
    if (normals.empty()) return face_for_weight(ori, N, zeroVec(S.dim));

    // An inequality is implicit iff its normal cannot be made strictly
    // positive inside the cone.
    std::vector<QVec> implicit, strict;
    for (std::size_t k = 0; k < normals.size(); ++k) {
        LinearProgramInstance lp;
        lp.objective = zeroVec(S.dim + 1);
        lp.objective[S.dim] = 1;
        for (const auto& nrm : normals) {
            QVec row = negated(nrm);
            row.push_back(nrm == normals[k] ? 1 : 0);
            lp.constraints.push_back({std::move(row), 0, Relation::LessEq});
        }
        for (int i = 0; i < S.dim; ++i) {
            lp.constraints.push_back({unitVec(S.dim + 1, i), 1, Relation::LessEq});
            lp.constraints.push_back({unitVec(S.dim + 1, i, -1), 1, Relation::LessEq});
        }
        auto res = lp_solve(lp);
        if (res.status != LpStatus::Optimal) throw std::logic_error("cone probe LP unbounded");
        (res.value > 0 ? strict : implicit).push_back(normals[k]);
    }
    QVec wstar;
    if (strict.empty())
        wstar = zeroVec(S.dim);
    else {
        auto wit = relative_interior_witness(strict, implicit);
        if (!wit.found) throw std::logic_error("relative interior of W_A vanished");
        wstar = wit.w;
    }
    MultiArborescence M = face_for_weight(ori, N, wstar);
    // The result must coarsen A.
    for (std::size_t v = 0; v < A.parent.size(); ++v)
        if (!std::binary_search(M.choice[v].begin(), M.choice[v].end(), A.parent[v]))
            throw std::logic_error("coarsening does not contain the arborescence");
    return M;
}

bool refines(const MultiArborescence& M, const MultiArborescence& Mprime) {
    if (M.choice.size() != Mprime.choice.size()) throw DimensionMismatch("vertex counts differ");
    for (std::size_t v = 0; v < M.choice.size(); ++v)
        if (!std::includes(Mprime.choice[v].begin(), Mprime.choice[v].end(), M.choice[v].begin(),
                           M.choice[v].end()))
            return false;
    return true;
}

bool differ_by_rerouting(const Arborescence& A, const Arborescence& Aprime) {
    if (A.parent.size() != Aprime.parent.size() || A.root != Aprime.root) return false;
    int diffs = 0;
    for (std::size_t v = 0; v < A.parent.size(); ++v)
        if (A.parent[v] != Aprime.parent[v]) ++diffs;
    return diffs == 1;
}

bool are_adjacent_vertices(const Orientation& ori, const Normalization& N, const Arborescence& A,
                           const Arborescence& Aprime) {
    if (!is_coherent(ori, N, A).found || !is_coherent(ori, N, Aprime).found)
        throw NotCoherent("adjacency is defined for coherent arborescences");
    if (A == Aprime) return false;

    MultiArborescence U;
    U.directed = true;
    U.root     = ori.sink;
    U.choice.resize(ori.vertexCount());
    int multi = 0;
    for (std::size_t v = 0; v < ori.vertexCount(); ++v) {
        std::set<int> s{A.parent[v], Aprime.parent[v]};
        U.choice[v].assign(s.begin(), s.end());
        if (s.size() > 1) ++multi;
    }
    if (multi != 1) return false;

    // Relative interior of the union's cone: ties inside U(v), strict against
    // everything else.
    Summands          S = directedSummands(ori, N);
    std::vector<QVec> tight, strict;
    for (std::size_t k = 0; k < S.verts.size(); ++k) {
        int         v   = S.verts[k];
        const auto& set = U.choice[v];
        std::vector<int> chosen;
        for (std::size_t t = 0; t < S.targets[k].size(); ++t)
            if (std::binary_search(set.begin(), set.end(), S.targets[k][t]))
                chosen.push_back(static_cast<int>(t));
        for (std::size_t a = 1; a < chosen.size(); ++a)
            tight.push_back(sub(S.dirs[k][chosen[0]], S.dirs[k][chosen[a]]));
        for (std::size_t t = 0; t < S.targets[k].size(); ++t) {
            if (std::binary_search(set.begin(), set.end(), S.targets[k][t])) continue;
            strict.push_back(sub(S.dirs[k][chosen[0]], S.dirs[k][t]));
        }
    }
    if (strict.empty()) return true;  // whole polytope is the segment
    auto wit = relative_interior_witness(strict, tight);
    if (!wit.found) return false;
    return face_for_weight(ori, N, wit.w) == U;
}

BigInt multiarb_count(const Orientation& ori) {
    if (!ori.P().isSimple()) throw NotSimple("multiarb_count needs a simple polytope");
    BigInt prod = 1;
    for (std::size_t v = 0; v < ori.vertexCount(); ++v) {
        if (static_cast<int>(v) == ori.sink) continue;
        prod *= (BigInt(1) << ori.improving[v].size()) - 1;
    }
    return prod;
}

BigInt arborescence_count_formula(const Orientation& ori) {
    auto   h    = h_vector(ori);
    BigInt prod = 1;
    for (std::size_t i = 1; i < h.size(); ++i)
        prod *= boost::multiprecision::pow(BigInt(i), static_cast<unsigned>(h[i]));
    return prod;
}

std::pair<BigInt, BigInt> ub_theorem_margin(const Orientation& ori, const Normalization& N) {
    BigInt coherent = BigInt(enumerate_coherent(ori, N).size());
    auto   facets   = facets_bruteforce(ori.P());
    BigInt n        = BigInt(ori.vertexCount());
    BigInt m        = BigInt(facets.size());
    BigInt bound    = arborescence_count_formula(ori) - 2 * (n - m - 2);
    std::size_t d   = ori.P().intrinsicDim();
    if (n > BigInt(d) + 1 && d + 1 >= 4 && coherent >= bound)
        throw std::logic_error("coherent count violates the upper bound theorem");
    return {coherent, bound};
}

namespace {

nlohmann::json rationalJson(const Rational& r) {
    if (denominator(r) == 1 && abs(numerator(r)) < 1000000000)
        return nlohmann::json(static_cast<long long>(numerator(r)));
    return nlohmann::json(rationalToString(r));
}

Rational rationalFromJson(const nlohmann::json& j) {
    if (j.is_number_integer()) return Rational(static_cast<long long>(j.get<long long>()));
    if (j.is_string()) return parseRational(j.get<std::string>());
    throw std::invalid_argument("rational must be an integer or a 'p/q' string");
}

}  // namespace

std::string constructedToJson(const ConstructedPolytope& C) {
    nlohmann::json j;
    j["dim"]      = C.dim;
    j["vertices"] = nlohmann::json::array();
    for (const auto& p : C.points) {
        nlohmann::json row = nlohmann::json::array();
        for (const auto& x : p) row.push_back(rationalJson(x));
        j["vertices"].push_back(row);
    }
    j["labels"] = nlohmann::json::array();
    for (std::size_t i = 0; i < C.labels.size(); ++i) {
        nlohmann::json entry;
        entry["point"] = i;
        if (C.labels[i].arborescence)
            entry["arborescence"] = nlohmann::json::parse(arborescenceToJson(*C.labels[i].arborescence));
        if (C.labels[i].ordering) entry["ordering"] = *C.labels[i].ordering;
        if (C.labels[i].path) entry["path"] = *C.labels[i].path;
        j["labels"].push_back(entry);
    }
    if (C.edgesKnown) {
        j["edges"] = nlohmann::json::array();
        for (auto [a, b] : C.edges) j["edges"].push_back({a, b});
    }
    if (!C.name.empty()) j["name"] = C.name;
    return j.dump(2);
}

ConstructedPolytope constructedFromJson(const std::string& text) {
    auto                j = nlohmann::json::parse(text);
    ConstructedPolytope C;
    C.dim = j.at("dim").get<int>();
    for (const auto& row : j.at("vertices")) {
        QVec p;
        for (const auto& x : row) p.push_back(rationalFromJson(x));
        C.points.push_back(std::move(p));
    }
    C.labels.resize(C.points.size());
    if (j.contains("labels"))
        for (const auto& entry : j["labels"]) {
            std::size_t i = entry.at("point").get<std::size_t>();
            if (i >= C.labels.size()) throw std::invalid_argument("label index out of range");
            if (entry.contains("arborescence"))
                C.labels[i].arborescence = arborescenceFromJson(entry["arborescence"].dump());
            if (entry.contains("ordering"))
                C.labels[i].ordering = entry["ordering"].get<std::vector<int>>();
            if (entry.contains("path")) C.labels[i].path = entry["path"].get<std::vector<int>>();
        }
    if (j.contains("edges")) {
        C.edgesKnown = true;
        for (const auto& e : j["edges"])
            C.edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    }
    C.name = j.value("name", std::string{});
    return C;
}

}  // namespace pivotal
