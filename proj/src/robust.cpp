#include "fairaudit/robust.hpp"

#include <cmath>
#include <string>

#include "fairaudit/error.hpp"
#include "lstsq.hpp"

namespace fairaudit {

LinearModel penalized_fit(const Dataset& d, const GroupAssignment& groups,
                          double lambda) {
    if (groups.size() != d.n())
        throw Error(ErrorKind::ArityMismatch,
                    "group labels cover " + std::to_string(groups.size()) +
                        " rows, dataset has " + std::to_string(d.n()));
    if (groups.count(0) == 0 || groups.count(1) == 0)
        throw Error(ErrorKind::EmptyGroup, "both groups must be non-empty");
    if (!(lambda >= 0.0) || !std::isfinite(lambda))
        throw Error(ErrorKind::InvalidLambdas, "lambda must be finite and >= 0");

    const std::size_t n = d.n();
    const std::size_t k = d.k();
    const std::size_t params = 1 + k;
    if (n < params)
        throw Error(ErrorKind::Underdetermined,
                    std::to_string(n) + " rows cannot determine " +
                        std::to_string(params) + " parameters");

    // Objective (1/n)||y - X theta||^2 + lambda (a'(y - X theta))^2 with
    // a_i = 1/n0 for group 0 and -1/n1 for group 1 is the least-squares
    // problem || [X/sqrt(n); sqrt(lambda) a'X] theta - [y/sqrt(n); sqrt(lambda) a'y] ||^2.
    const double inv_sqrt_n = 1.0 / std::sqrt(static_cast<double>(n));
    const double sqrt_lambda = std::sqrt(lambda);
    const double a0 = 1.0 / static_cast<double>(groups.count(0));
    const double a1 = -1.0 / static_cast<double>(groups.count(1));

    Eigen::MatrixXd design(n + 1, params);
    Eigen::VectorXd rhs(n + 1);
    Eigen::RowVectorXd gap_row = Eigen::RowVectorXd::Zero(params);
    double gap_target = 0.0;

    for (std::size_t i = 0; i < n; ++i) {
        const double a = groups.labels()[i] == 0 ? a0 : a1;
        design(i, 0) = inv_sqrt_n;
        gap_row(0) += a;
        for (std::size_t j = 0; j < k; ++j) {
            const double x = d.feature(i, j);
            design(i, j + 1) = x * inv_sqrt_n;
            gap_row(static_cast<Eigen::Index>(j) + 1) += a * x;
        }
        rhs(i) = d.target()[i] * inv_sqrt_n;
        gap_target += a * d.target()[i];
    }
    design.row(n) = sqrt_lambda * gap_row;
    rhs(n) = sqrt_lambda * gap_target;

    auto solved = detail::solve_least_squares(design, rhs);
    if (!(solved.condition_estimate <= detail::kConditionLimit))
        throw Error(ErrorKind::RankDeficient,
                    "augmented design condition estimate " +
                        std::to_string(solved.condition_estimate) + " exceeds 1e8");

    LinearModel m;
    m.intercept = solved.solution(0);
    m.coefficients.resize(k);
    for (std::size_t j = 0; j < k; ++j)
        m.coefficients[j] = solved.solution(static_cast<Eigen::Index>(j) + 1);
    m.feature_names = d.feature_names();
    m.trained_on = {n, k, false};
    m.condition_estimate = solved.condition_estimate;
    return m;
}

std::vector<TradeoffPoint> tradeoff_sweep(const Dataset& d,
                                          const GroupAssignment& groups,
                                          const std::vector<double>& lambdas) {
    if (lambdas.empty())
        throw Error(ErrorKind::InvalidLambdas, "lambda list must not be empty");
    for (std::size_t i = 0; i < lambdas.size(); ++i) {
        if (!(lambdas[i] >= 0.0) || !std::isfinite(lambdas[i]))
            throw Error(ErrorKind::InvalidLambdas, "lambdas must be finite and >= 0");
        if (i > 0 && lambdas[i] <= lambdas[i - 1])
            throw Error(ErrorKind::InvalidLambdas, "lambdas must ascend");
    }

    std::vector<TradeoffPoint> points;
    points.reserve(lambdas.size());
    for (double lambda : lambdas) {
        TradeoffPoint point;
        point.lambda = lambda;
        point.model = penalized_fit(d, groups, lambda);

        const std::vector<double> r = residuals(point.model, d);
        double sum_sq = 0.0;
        double sum0 = 0.0;
        double sum1 = 0.0;
        for (std::size_t i = 0; i < r.size(); ++i) {
            sum_sq += r[i] * r[i];
            (groups.labels()[i] == 0 ? sum0 : sum1) += r[i];
        }
        point.mse = sum_sq / static_cast<double>(r.size());
        point.group_gap = sum0 / static_cast<double>(groups.count(0)) -
                          sum1 / static_cast<double>(groups.count(1));
        points.push_back(std::move(point));
    }
    return points;
}

} // namespace fairaudit
