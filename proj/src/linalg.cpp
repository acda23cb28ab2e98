#include "pivotal/linalg.hpp"

namespace pivotal {

namespace {

// Reduced row echelon form; returns pivot column per pivot row.
std::vector<std::size_t> rref(std::vector<QVec>& rows, std::size_t cols) {
    std::vector<std::size_t> pivots;
    std::size_t              r = 0;
    for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
        std::size_t sel = rows.size();
        for (std::size_t i = r; i < rows.size(); ++i)
            if (rows[i][c] != 0) {
                sel = i;
                break;
            }
        if (sel == rows.size()) continue;
        std::swap(rows[r], rows[sel]);
        Rational inv = 1 / rows[r][c];
        for (auto& x : rows[r]) x *= inv;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][c] == 0) continue;
            Rational f = rows[i][c];
            for (std::size_t j = 0; j < rows[i].size(); ++j)
                if (rows[r][j] != 0) rows[i][j] -= f * rows[r][j];
            rows[i][c] = 0;
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

std::size_t rankOf(std::vector<QVec> vectors) {
    if (vectors.empty()) return 0;
    return rref(vectors, vectors.front().size()).size();
}

std::optional<QVec> expressInBasis(const std::vector<QVec>& basis, const QVec& target) {
    if (basis.empty()) return isZero(target) ? std::optional<QVec>(QVec{}) : std::nullopt;
    const std::size_t d = basis.front().size();
    const std::size_t k = basis.size();
    checkDim(basis.front(), target);
    // Augmented system: rows indexed by coordinates, columns by basis vectors.
    std::vector<QVec> rows(d, QVec(k + 1, Rational(0)));
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < k; ++j) rows[i][j] = basis[j][i];
        rows[i][k] = target[i];
    }
    auto pivots = rref(rows, k);
    if (pivots.size() != k) return std::nullopt;  // basis not independent
    // Consistency: rows past the pivots must have zero rhs.
    for (std::size_t i = pivots.size(); i < d; ++i)
        if (rows[i][k] != 0) return std::nullopt;
    QVec x(k, Rational(0));
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = rows[r][k];
    return x;
}

std::vector<QVec> nullspaceOf(const std::vector<QVec>& vectors, std::size_t dim) {
    std::vector<QVec> rows;
    for (const auto& v : vectors) {
        if (v.size() != dim) throw DimensionMismatch();
        rows.push_back(v);
    }
    std::vector<std::size_t> pivots = rows.empty() ? std::vector<std::size_t>{} : rref(rows, dim);
    std::vector<bool>        isPivot(dim, false);
    for (auto c : pivots) isPivot[c] = true;
    std::vector<QVec> basis;
    for (std::size_t free = 0; free < dim; ++free) {
        if (isPivot[free]) continue;
        QVec v(dim, Rational(0));
        v[free] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -rows[r][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

std::size_t affineDim(const std::vector<QVec>& points) {
    if (points.size() <= 1) return 0;
    std::vector<QVec> diffs;
    for (std::size_t i = 1; i < points.size(); ++i) diffs.push_back(sub(points[i], points[0]));
    return rankOf(std::move(diffs));
}

}  // namespace pivotal
