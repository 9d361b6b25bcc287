#pragma once

#include <Eigen/Core>
#include <vector>

namespace tansurf {

/// Numerical rank: number of singular values above rel_tol times the largest
/// one. Rank 0 when the largest singular value is below the absolute floor.
int rank_tol(const std::vector<Eigen::VectorXd>& vectors, double rel_tol,
             double abs_floor = 1e-14);

/// Singular values of the matrix whose columns are the given vectors,
/// descending.
Eigen::VectorXd singular_values(const std::vector<Eigen::VectorXd>& vectors);

} // namespace tansurf
