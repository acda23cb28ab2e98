#pragma once

#include "pivotal/rational.hpp"

#include <optional>
#include <vector>

namespace pivotal {

class EmptyInput : public std::runtime_error {
  public:
    explicit EmptyInput(const std::string& what = "empty input") : std::runtime_error(what) {}
};

class PointNotInSet : public std::runtime_error {
  public:
    explicit PointNotInSet(const std::string& what = "point not in set")
        : std::runtime_error(what) {}
};

enum class Relation { LessEq, Eq };

struct LinearConstraint {
    QVec     normal;
    Rational rhs;
    Relation rel = Relation::LessEq;
};

/// max objective . x  subject to the constraints, x free (any sign).
struct LinearProgramInstance {
    QVec                          objective;
    std::vector<LinearConstraint> constraints;
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
    LpStatus status;
    QVec     point;  // meaningful for Optimal
    Rational value;  // objective at point
};

/// Exact two-phase simplex with Bland's anti-cycling rule. Terminates on any
/// rational instance; an Optimal point re-satisfies every constraint exactly.
LpResult lp_solve(const LinearProgramInstance& lp);

struct WitnessResult {
    bool found = false;
    QVec w;  // meaningful when found
};

/// Open-cone feasibility: w with w.d > 0 for every direction, if one exists.
/// Solved as max t s.t. w.d_k >= t, -1 <= w_i <= 1; openness is certified by a
/// strictly positive optimum and the returned witness is re-substituted.
WitnessResult strict_cone_witness(const std::vector<QVec>& directions);

/// w with w.s > 0 for all strict and w.t = 0 for all tight, if one exists.
/// With no strict directions the zero vector is a valid witness.
WitnessResult relative_interior_witness(const std::vector<QVec>& strict,
                                        const std::vector<QVec>& tight);

/// True iff p is a vertex of conv(points). p must be one of the points.
bool hull_vertex_test(const QVec& p, const std::vector<QVec>& points);

}  // namespace pivotal
