#pragma once

#include <Eigen/Dense>

namespace fairaudit::detail {

// Condition estimate above which a design matrix is declared rank deficient.
inline constexpr double kConditionLimit = 1e8;

struct LstsqResult {
    Eigen::VectorXd solution;
    double condition_estimate = 1.0;
};

/// Minimum-norm least-squares solve via column-pivoted Householder QR.
/// The condition estimate is the ratio of the extreme |R| diagonal entries
/// (infinite when the smallest is zero). Callers decide what to do with a
/// bad estimate; this function always returns.
LstsqResult solve_least_squares(const Eigen::MatrixXd& design,
                                const Eigen::VectorXd& rhs);

} // namespace fairaudit::detail
