#pragma once

#include "pivotal/rational.hpp"

#include <optional>
#include <vector>

namespace pivotal {

/// Rank of the span of the given vectors (exact Gaussian elimination).
std::size_t rankOf(std::vector<QVec> vectors);

/// Coefficients x with sum x_i basis[i] = target, when the basis vectors are
/// linearly independent and target lies in their span; nullopt otherwise.
std::optional<QVec> expressInBasis(const std::vector<QVec>& basis, const QVec& target);

/// A basis of { x : x . v = 0 for all v } inside R^dim.
std::vector<QVec> nullspaceOf(const std::vector<QVec>& vectors, std::size_t dim);

/// Affine dimension of a point set.
std::size_t affineDim(const std::vector<QVec>& points);

}  // namespace pivotal
