#include "pivotal/lp.hpp"

#include <algorithm>
#include <cassert>

namespace pivotal {

namespace {

// Dense full-tableau simplex. Rows keep b >= 0; Bland's rule on both the
// entering and leaving choice guarantees termination with exact arithmetic.
class Tableau {
  public:
    Tableau(std::size_t rows, std::size_t cols) : nCols_(cols), rows_(rows), basis_(rows, 0) {
        data_.assign(rows, QVec(cols + 1, Rational(0)));
        obj_.assign(cols + 1, Rational(0));
    }

    QVec&       row(std::size_t i) { return data_[i]; }
    Rational&   at(std::size_t i, std::size_t j) { return data_[i][j]; }
    Rational&   rhs(std::size_t i) { return data_[i][nCols_]; }
    Rational&   objCoeff(std::size_t j) { return obj_[j]; }
    Rational&   objValue() { return obj_[nCols_]; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return nCols_; }
    std::vector<std::size_t>&       basis() { return basis_; }
    const std::vector<std::size_t>& basis() const { return basis_; }

    void pivot(std::size_t r, std::size_t c) {
        QVec&    prow = data_[r];
        Rational inv  = 1 / prow[c];
        for (auto& x : prow) x *= inv;
        for (std::size_t i = 0; i < rows_; ++i) {
            if (i == r) continue;
            eliminate(data_[i], prow, c);
        }
        eliminate(obj_, prow, c);
        basis_[r] = c;
    }

    // One simplex phase: maximize the current objective row.
    // Returns true if optimal was reached, false if unbounded.
    bool iterate() {
        for (;;) {
            std::size_t enter = nCols_;
            for (std::size_t j = 0; j < nCols_; ++j) {
                if (obj_[j] > 0) {
                    enter = j;
                    break;
                }
            }
            if (enter == nCols_) return true;

            std::size_t leave    = rows_;
            Rational    bestRatio;
            for (std::size_t i = 0; i < rows_; ++i) {
                if (data_[i][enter] <= 0) continue;
                Rational ratio = data_[i][nCols_] / data_[i][enter];
                if (leave == rows_ || ratio < bestRatio ||
                    (ratio == bestRatio && basis_[i] < basis_[leave])) {
                    leave     = i;
                    bestRatio = ratio;
                }
            }
            if (leave == rows_) return false;
            pivot(leave, enter);
        }
    }

  private:
    static void eliminate(QVec& target, const QVec& prow, std::size_t c) {
        if (target[c] == 0) return;
        Rational f = target[c];
        for (std::size_t j = 0; j < prow.size(); ++j) {
            if (prow[j] != 0) target[j] -= f * prow[j];
        }
        target[c] = 0;
    }

    std::size_t                nCols_;
    std::size_t                rows_;
    std::vector<QVec>          data_;
    QVec                       obj_;
    std::vector<std::size_t>   basis_;
};

}  // namespace

LpResult lp_solve(const LinearProgramInstance& lp) {
    const std::size_t d = lp.objective.size();
    for (const auto& c : lp.constraints)
        if (c.normal.size() != d)
            throw DimensionMismatch("constraint dimension " + std::to_string(c.normal.size()) +
                                    " vs objective dimension " + std::to_string(d));

    const std::size_t m      = lp.constraints.size();
    std::size_t       nSlack = 0;
    for (const auto& c : lp.constraints)
        if (c.rel == Relation::LessEq) ++nSlack;

    // Columns: x+ (d), x- (d), slacks, then one artificial per row that needs
    // one. Free x is split as x = x+ - x-.
    const std::size_t slackBase = 2 * d;
    const std::size_t artBase   = slackBase + nSlack;
    const std::size_t nCols     = artBase + m;  // upper bound on artificials

    Tableau     tab(m, nCols);
    std::size_t slackIdx = 0;
    std::vector<bool> isArt(nCols, false);
    std::size_t       nArt = 0;

    for (std::size_t i = 0; i < m; ++i) {
        const auto& c    = lp.constraints[i];
        bool        flip = c.rhs < 0;
        Rational    sgn  = flip ? -1 : 1;
        for (std::size_t j = 0; j < d; ++j) {
            tab.at(i, j)     = sgn * c.normal[j];
            tab.at(i, d + j) = -sgn * c.normal[j];
        }
        tab.rhs(i) = sgn * c.rhs;
        std::size_t slackCol = nCols;
        if (c.rel == Relation::LessEq) {
            slackCol                = slackBase + slackIdx++;
            tab.at(i, slackCol)     = sgn;
        }
        if (c.rel == Relation::LessEq && !flip) {
            tab.basis()[i] = slackCol;
        } else {
            std::size_t art = artBase + nArt++;
            tab.at(i, art)  = 1;
            isArt[art]      = true;
            tab.basis()[i]  = art;
        }
    }

    // Phase 1: maximize -(sum of artificials). The z-row starts as the sum of
    // the rows whose basic variable is artificial (which zeroes the reduced
    // cost of every basic artificial); its rhs entry is the artificial level.
    if (nArt > 0) {
        for (std::size_t i = 0; i < m; ++i) {
            if (!isArt[tab.basis()[i]]) continue;
            for (std::size_t j = 0; j <= nCols; ++j)
                if (tab.row(i)[j] != 0) tab.objCoeff(j) += tab.row(i)[j];
        }
        for (std::size_t j = artBase; j < nCols; ++j) tab.objCoeff(j) = 0;
        bool ok = tab.iterate();
        assert(ok);
        (void)ok;
        if (tab.objValue() != 0) return {LpStatus::Infeasible, {}, 0};

        // Drive remaining zero-level artificials out of the basis.
        for (std::size_t i = 0; i < m; ++i) {
            if (!isArt[tab.basis()[i]]) continue;
            std::size_t c = nCols;
            for (std::size_t j = 0; j < artBase; ++j) {
                if (tab.at(i, j) != 0) {
                    c = j;
                    break;
                }
            }
            if (c < nCols) tab.pivot(i, c);
            // else: redundant zero row; harmless to leave in place.
        }
        // Forbid artificials from re-entering by zeroing their columns.
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = artBase; j < nCols; ++j) tab.at(i, j) = 0;
    }

    // Phase 2 objective row (reduced against the current basis).
    for (std::size_t j = 0; j <= nCols; ++j) tab.objCoeff(j) = 0;
    for (std::size_t j = 0; j < d; ++j) {
        tab.objCoeff(j)     = lp.objective[j];
        tab.objCoeff(d + j) = -lp.objective[j];
    }
    for (std::size_t i = 0; i < m; ++i) {
        std::size_t b = tab.basis()[i];
        if (b >= 2 * d) continue;  // slacks and stuck artificials cost nothing
        Rational cb = (b < d) ? lp.objective[b] : Rational(-lp.objective[b - d]);
        if (cb == 0) continue;
        for (std::size_t j = 0; j <= nCols; ++j)
            if (tab.row(i)[j] != 0) tab.objCoeff(j) -= cb * tab.row(i)[j];
    }

    if (!tab.iterate()) return {LpStatus::Unbounded, {}, 0};

    QVec xs(2 * d, Rational(0));
    for (std::size_t i = 0; i < m; ++i)
        if (tab.basis()[i] < 2 * d) xs[tab.basis()[i]] = tab.rhs(i);
    QVec x(d);
    for (std::size_t j = 0; j < d; ++j) x[j] = xs[j] - xs[d + j];

    Rational value = dot(lp.objective, x);

    // Exactness check: the reported point must satisfy every constraint.
    for (const auto& c : lp.constraints) {
        Rational lhs = dot(c.normal, x);
        bool     ok  = (c.rel == Relation::Eq) ? (lhs == c.rhs) : (lhs <= c.rhs);
        if (!ok) throw std::logic_error("lp_solve: optimal point violates a constraint");
    }
    return {LpStatus::Optimal, std::move(x), std::move(value)};
}

namespace {

WitnessResult maxMarginWitness(const std::vector<QVec>& strict, const std::vector<QVec>& tight) {
    const std::size_t d = strict.empty() ? tight.front().size() : strict.front().size();
    for (const auto& v : strict) checkDim(v, strict.front());
    for (const auto& v : tight)
        if (v.size() != d) throw DimensionMismatch();

    // Variables (w, t); maximize t subject to w.s >= t, w.g = 0, |w_i| <= 1.
    LinearProgramInstance lp;
    lp.objective = zeroVec(d + 1);
    lp.objective[d] = 1;
    for (const auto& s : strict) {
        QVec n = negated(s);
        n.push_back(1);
        lp.constraints.push_back({std::move(n), 0, Relation::LessEq});
    }
    for (const auto& g : tight) {
        QVec n = g;
        n.push_back(0);
        lp.constraints.push_back({std::move(n), 0, Relation::Eq});
    }
    for (std::size_t i = 0; i < d; ++i) {
        lp.constraints.push_back({unitVec(d + 1, i), 1, Relation::LessEq});
        lp.constraints.push_back({unitVec(d + 1, i, -1), 1, Relation::LessEq});
    }
    LpResult res = lp_solve(lp);
    if (res.status == LpStatus::Infeasible) return {false, {}};
    if (res.status != LpStatus::Optimal)
        throw std::logic_error("witness LP must be bounded");
    if (res.value <= 0) return {false, {}};
    QVec w(res.point.begin(), res.point.begin() + static_cast<std::ptrdiff_t>(d));
    for (const auto& s : strict)
        if (dot(w, s) <= 0) throw std::logic_error("witness fails re-substitution");
    for (const auto& g : tight)
        if (dot(w, g) != 0) throw std::logic_error("witness fails tight re-substitution");
    return {true, std::move(w)};
}

}  // namespace

WitnessResult strict_cone_witness(const std::vector<QVec>& directions) {
    if (directions.empty()) throw EmptyInput("strict_cone_witness: no directions");
    return maxMarginWitness(directions, {});
}

WitnessResult relative_interior_witness(const std::vector<QVec>& strict,
                                        const std::vector<QVec>& tight) {
    if (strict.empty()) {
        if (tight.empty()) throw EmptyInput("relative_interior_witness: no constraints");
        return {true, zeroVec(tight.front().size())};
    }
    return maxMarginWitness(strict, tight);
}

bool hull_vertex_test(const QVec& p, const std::vector<QVec>& points) {
    bool present = false;
    std::vector<QVec> dirs;
    for (const auto& q : points) {
        if (q == p) {
            present = true;
            continue;
        }
        dirs.push_back(sub(p, q));
    }
    if (!present) throw PointNotInSet("hull_vertex_test: p is not among the points");
    if (dirs.empty()) return true;
    return strict_cone_witness(dirs).found;
}

}  // namespace pivotal
