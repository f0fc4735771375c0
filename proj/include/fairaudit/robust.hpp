#pragma once

#include <vector>

#include "fairaudit/dataset.hpp"
#include "fairaudit/linear_model.hpp"
#include "fairaudit/measures.hpp"

namespace fairaudit {

/// One point of the accuracy-fairness curve: the model minimizing
/// (1/n) * sum(r_i^2) + lambda * (mean residual of group 0 - mean residual
/// of group 1)^2, with its training mse and signed group gap.
struct TradeoffPoint {
    double lambda = 0.0;
    double mse = 0.0;
    double group_gap = 0.0; // reference mean residual minus protected
    LinearModel model;
};

/// Group-penalized least squares. The penalty targets one-directional
/// group error (the squared gap of per-group mean signed residuals); the
/// objective stays quadratic, so the solve is a closed-form augmented
/// least-squares problem. Groups enter only through the penalty; the
/// sensitive attribute is never a predictor.
LinearModel penalized_fit(const Dataset& d, const GroupAssignment& groups,
                          double lambda);

/// Models for an ascending lambda grid. mse is non-decreasing and
/// |group_gap| non-increasing along the list (scalarized bi-objective).
std::vector<TradeoffPoint> tradeoff_sweep(const Dataset& d,
                                          const GroupAssignment& groups,
                                          const std::vector<double>& lambdas);

} // namespace fairaudit
