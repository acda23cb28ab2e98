#pragma once

#include "pivotal/errors.hpp"
#include "pivotal/lp.hpp"
#include "pivotal/rational.hpp"

#include <cstdint>
#include <vector>

namespace pivotal {

/// A central hyperplane arrangement, deduplicated by line of normals. "Atoms"
/// are the raw input directions; each atom maps to its wall together with the
/// sign of the scaling that carries the wall normal onto the atom.
struct WallArrangement {
    std::size_t             dim = 0;
    std::vector<QVec>       normals;    // canonical, pairwise non-parallel
    std::vector<int>        atomWall;   // atom -> wall index
    std::vector<int>        atomSign;   // atom -> +1/-1 relative to the wall normal
};

WallArrangement buildWalls(const std::vector<QVec>& atoms);

struct Chamber {
    std::vector<std::int8_t> signs;    // one per wall
    QVec                     witness;  // strictly on the chamber's side of every wall
};

struct ChamberGraph {
    WallArrangement                  walls;
    std::vector<Chamber>             chambers;           // sorted by sign vector
    std::vector<std::pair<int, int>> adjacency;          // facet-sharing chamber pairs
    std::vector<int>                 adjacencyWall;      // separating wall per pair

    int atomSign(int chamber, int atom) const {
        return walls.atomSign[atom] * chambers[chamber].signs[walls.atomWall[atom]];
    }
};

/// Exhaustive chamber enumeration by BFS, flipping one wall at a time with
/// exact feasibility checks. Starts from a deterministic generic seed.
ChamberGraph enumerate_chambers(const std::vector<QVec>& atoms, std::size_t guard);

/// Deterministic vector with no zero dot product against any of the given
/// nonzero directions (powers of a growing base beat any finite family).
QVec genericSeed(const std::vector<QVec>& mustNotVanish, std::size_t dim);

}  // namespace pivotal
