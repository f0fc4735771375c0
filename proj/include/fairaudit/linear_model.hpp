#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "fairaudit/dataset.hpp"

namespace fairaudit {

struct TrainedOn {
    std::size_t n = 0;
    std::size_t k = 0;
    bool includes_sensitive = false;
};

/// Linear predictor b0 + b1*x1 + ... + bk*xk (+ beta*s when fitted with the
/// sensitive attribute). sensitive_coefficient is engaged exactly when the
/// model uses the sensitive attribute; a sanitized model never has one.
struct LinearModel {
    double intercept = 0.0;
    std::vector<double> coefficients;
    std::optional<double> sensitive_coefficient;
    std::vector<std::string> feature_names;
    TrainedOn trained_on;
    double condition_estimate = 1.0;

    bool includes_sensitive() const { return sensitive_coefficient.has_value(); }
};

/// Ordinary least squares with an intercept column. The design is
/// [1 | features] or [1 | features | sensitive]; the solve goes through an
/// orthogonalization (QR), never explicit normal-equation inversion.
/// Throws Underdetermined when n < number of parameters and RankDeficient
/// when the condition estimate exceeds 1e8 (e.g. duplicated feature columns,
/// or the sensitive attribute perfectly collinear with features).
LinearModel fit(const Dataset& d, bool include_sensitive);

/// b0 + sum(bj * xj) (+ beta * s). The sensitive value must be supplied
/// exactly when the model includes it.
double predict(const LinearModel& m, const std::vector<double>& features,
               std::optional<double> sensitive = std::nullopt);

/// r_i = y_i - prediction_i, in row order.
std::vector<double> residuals(const LinearModel& m, const Dataset& d);

} // namespace fairaudit
