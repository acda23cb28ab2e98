#include "pivotal/chambers.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace pivotal {

WallArrangement buildWalls(const std::vector<QVec>& atoms) {
    WallArrangement arr;
    if (atoms.empty()) return arr;
    arr.dim = atoms.front().size();
    std::map<QVec, int> index;
    for (const auto& a : atoms) {
        checkDim(a, atoms.front());
        if (isZero(a)) throw ZeroGenerator("zero direction in arrangement");
        QVec ray  = canonicalRay(a);
        QVec line = canonicalLine(a);
        auto it   = index.find(line);
        int  wall;
        if (it == index.end()) {
            wall = static_cast<int>(arr.normals.size());
            index.emplace(line, wall);
            arr.normals.push_back(line);
        } else {
            wall = it->second;
        }
        arr.atomWall.push_back(wall);
        arr.atomSign.push_back(ray == arr.normals[wall] ? 1 : -1);
    }
    return arr;
}

QVec genericSeed(const std::vector<QVec>& mustNotVanish, std::size_t dim) {
    for (Rational base = 2;; ++base) {
        QVec     w(dim);
        Rational p = 1;
        for (std::size_t i = 0; i < dim; ++i) {
            w[i] = p;
            p *= base;
        }
        bool ok = true;
        for (const auto& n : mustNotVanish)
            if (dot(w, n) == 0) {
                ok = false;
                break;
            }
        if (ok) return w;
    }
}

ChamberGraph enumerate_chambers(const std::vector<QVec>& atoms, std::size_t guard) {
    ChamberGraph g;
    g.walls = buildWalls(atoms);
    const auto& normals = g.walls.normals;
    const std::size_t W = normals.size();
    if (W == 0) {
        g.chambers.push_back({{}, zeroVec(g.walls.dim)});
        return g;
    }

    QVec seed = genericSeed(normals, g.walls.dim);
    auto signsOf = [&](const QVec& w) {
        std::vector<std::int8_t> s(W);
        for (std::size_t h = 0; h < W; ++h) s[h] = dot(w, normals[h]) > 0 ? 1 : -1;
        return s;
    };

    std::map<std::vector<std::int8_t>, int> visited;
    std::deque<int>                         queue;
    auto addChamber = [&](std::vector<std::int8_t> s, QVec w) {
        int id = static_cast<int>(g.chambers.size());
        visited.emplace(s, id);
        g.chambers.push_back({std::move(s), std::move(w)});
        queue.push_back(id);
        return id;
    };
    addChamber(signsOf(seed), seed);

    std::vector<QVec> dirs(W);
    while (!queue.empty()) {
        int cur = queue.front();
        queue.pop_front();
        for (std::size_t h = 0; h < W; ++h) {
            auto flipped = g.chambers[cur].signs;
            flipped[h]   = static_cast<std::int8_t>(-flipped[h]);
            auto it      = visited.find(flipped);
            int  nbr;
            if (it != visited.end()) {
                nbr = it->second;
            } else {
                for (std::size_t k = 0; k < W; ++k)
                    dirs[k] = flipped[k] > 0 ? normals[k] : negated(normals[k]);
                auto wit = strict_cone_witness(dirs);
                if (!wit.found) continue;
                if (g.chambers.size() >= guard)
                    throw EnumerationGuard("chamber enumeration exceeded guard " +
                                           std::to_string(guard));
                nbr = addChamber(std::move(flipped), std::move(wit.w));
            }
            g.adjacency.emplace_back(cur, nbr);
            g.adjacencyWall.push_back(static_cast<int>(h));
        }
    }

    // Canonical order independent of the BFS schedule.
    std::vector<int> order(g.chambers.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return g.chambers[a].signs < g.chambers[b].signs;
    });
    std::vector<int> rankOfId(order.size());
    for (std::size_t r = 0; r < order.size(); ++r) rankOfId[order[r]] = static_cast<int>(r);
    std::vector<Chamber> sorted(order.size());
    for (std::size_t r = 0; r < order.size(); ++r) sorted[r] = std::move(g.chambers[order[r]]);
    g.chambers = std::move(sorted);
    std::vector<std::tuple<int, int, int>> edges;
    edges.reserve(g.adjacency.size());
    for (std::size_t k = 0; k < g.adjacency.size(); ++k) {
        int a = rankOfId[g.adjacency[k].first];
        int b = rankOfId[g.adjacency[k].second];
        if (a > b) std::swap(a, b);
        edges.emplace_back(a, b, g.adjacencyWall[k]);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    g.adjacency.clear();
    g.adjacencyWall.clear();
    for (const auto& [a, b, h] : edges) {
        g.adjacency.emplace_back(a, b);
        g.adjacencyWall.push_back(h);
    }
    return g;
}

}  // namespace pivotal
