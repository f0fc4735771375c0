#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "fairaudit/dataset.hpp"
#include "fairaudit/linear_model.hpp"

namespace fairaudit {

/// Predicted vs. observed effect of omitting the sensitive attribute from
/// an OLS fit.
///
/// For a single feature the predicted shift is the closed form
///     delta = beta * Cov(x, s) / Var(x)
/// with the matching intercept shift beta*mean(s) - delta*mean(x). For
/// several features the same idea goes through an auxiliary regression of s
/// on the features: delta_j = beta * gamma_j where gamma is that
/// regression's coefficient vector (delta_method records which route was
/// used). The empirical columns come from actually refitting without s;
/// agreement is the largest absolute discrepancy between the two routes
/// over the intercept and every coefficient.
struct BiasReport {
    std::vector<double> delta;
    double predicted_omitted_intercept = 0.0;
    std::vector<double> predicted_omitted_coefficients;
    double empirical_omitted_intercept = 0.0;
    std::vector<double> empirical_omitted_coefficients;
    double beta = 0.0;
    double agreement = 0.0;
    std::string delta_method; // "covariance_ratio" (k=1) or "auxiliary_regression" (k>1)
};

/// Which group's historical treatment is assumed correct when the sensitive
/// component beta*s is replaced by a constant c:
///   reference_correct  -> c = 0        (s=0 rows already treated correctly)
///   protected_correct  -> c = beta     (s=1 rows already treated correctly)
///   population_mean    -> c = mean(s)*beta  (population-weighted average;
///                         also meaningful for numeric sensitive attributes)
enum class SanitizationPolicy {
    reference_correct,
    protected_correct,
    population_mean,
};

const char* to_string(SanitizationPolicy policy);

/// Omitted-variable shift for one feature: beta * Cov(x_j, s) / Var(x_j).
/// Throws ZeroVariance when Var(x_j) is zero.
double ovb_delta(const SummaryStats& stats, double beta, std::size_t feature_index);

/// Fits with and without the sensitive attribute and reconciles the
/// closed-form prediction against the observed coefficient shift.
BiasReport bias_report(const Dataset& d);

/// Removes the sensitive component from a full model, shifting the
/// intercept by the policy constant. The result has identical feature
/// coefficients and no sensitive term, so its predictions cannot depend on
/// the sensitive attribute. Throws NotFullModel when the input lacks beta.
LinearModel sanitize(const LinearModel& full_model, SanitizationPolicy policy,
                     const SummaryStats& stats);

} // namespace fairaudit
