#include "tansurf/rank.hpp"

#include <Eigen/SVD>

#include "tansurf/errors.hpp"

namespace tansurf {

namespace {

Eigen::MatrixXd as_matrix(const std::vector<Eigen::VectorXd>& vectors) {
    if (vectors.empty()) throw ValidationError("rank of empty vector set");
    const Eigen::Index m = vectors[0].size();
    Eigen::MatrixXd A(m, static_cast<Eigen::Index>(vectors.size()));
    for (std::size_t j = 0; j < vectors.size(); ++j) {
        if (vectors[j].size() != m) throw ValidationError("rank of mixed-dimension vectors");
        A.col(static_cast<Eigen::Index>(j)) = vectors[j];
    }
    return A;
}

} // namespace

Eigen::VectorXd singular_values(const std::vector<Eigen::VectorXd>& vectors) {
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(as_matrix(vectors));
    return svd.singularValues();
}

int rank_tol(const std::vector<Eigen::VectorXd>& vectors, double rel_tol, double abs_floor) {
    // Rank is invariant under nonzero column scaling, so normalize the
    // columns first: mixed magnitudes (covariant chains grow factorially)
    // would otherwise let the largest column mask a small independent
    // direction in another. Columns below the floor count as zero.
    std::vector<Eigen::VectorXd> unit;
    unit.reserve(vectors.size());
    for (const auto& v : vectors) {
        if (vectors[0].size() != v.size())
            throw ValidationError("rank of mixed-dimension vectors");
        const double n = v.norm();
        if (n >= abs_floor) unit.push_back(v / n);
    }
    if (unit.empty()) return 0;
    const Eigen::VectorXd sv = singular_values(unit);
    if (sv.size() == 0 || sv[0] < abs_floor) return 0;
    int r = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i)
        if (sv[i] > rel_tol * sv[0]) ++r;
    return r;
}

} // namespace tansurf
