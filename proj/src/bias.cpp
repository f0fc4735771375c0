#include "fairaudit/bias.hpp"

#include <algorithm>
#include <cmath>

#include "fairaudit/error.hpp"
#include "lstsq.hpp"

namespace fairaudit {

const char* to_string(SanitizationPolicy policy) {
    switch (policy) {
        case SanitizationPolicy::reference_correct: return "reference_correct";
        case SanitizationPolicy::protected_correct: return "protected_correct";
        case SanitizationPolicy::population_mean: return "population_mean";
    }
    return "unknown";
}

double ovb_delta(const SummaryStats& stats, double beta, std::size_t feature_index) {
    if (feature_index >= stats.feature_variances.size())
        throw Error(ErrorKind::ArityMismatch,
                    "feature index " + std::to_string(feature_index) + " out of range");
    const double var = stats.feature_variances[feature_index];
    if (var <= 0.0)
        throw Error(ErrorKind::ZeroVariance,
                    "feature " + std::to_string(feature_index) + " has zero variance");
    return beta * stats.cov_feature_sensitive[feature_index] / var;
}

namespace {

// OLS of the sensitive column on [1 | features]; returns the intercept
// followed by the k slope coefficients.
Eigen::VectorXd auxiliary_regression(const Dataset& d) {
    const std::size_t n = d.n();
    const std::size_t k = d.k();
    Eigen::MatrixXd design(n, k + 1);
    Eigen::VectorXd rhs(n);
    for (std::size_t i = 0; i < n; ++i) {
        design(i, 0) = 1.0;
        for (std::size_t j = 0; j < k; ++j)
            design(i, j + 1) = d.feature(i, j);
        rhs(i) = d.sensitive()[i];
    }
    auto solved = detail::solve_least_squares(design, rhs);
    if (!(solved.condition_estimate <= detail::kConditionLimit))
        throw Error(ErrorKind::RankDeficient,
                    "auxiliary design is rank deficient");
    return solved.solution;
}

} // namespace

BiasReport bias_report(const Dataset& d) {
    const LinearModel full = fit(d, true);
    const LinearModel omitted = fit(d, false);
    const std::size_t k = d.k();

    BiasReport report;
    report.beta = *full.sensitive_coefficient;
    report.empirical_omitted_intercept = omitted.intercept;
    report.empirical_omitted_coefficients = omitted.coefficients;
    report.delta.resize(k);
    report.predicted_omitted_coefficients.resize(k);

    if (k == 1) {
        const SummaryStats stats = summarize(d);
        report.delta_method = "covariance_ratio";
        report.delta[0] = ovb_delta(stats, report.beta, 0);
        report.predicted_omitted_coefficients[0] = full.coefficients[0] + report.delta[0];
        report.predicted_omitted_intercept = full.intercept +
                                             report.beta * stats.sensitive_mean -
                                             report.delta[0] * stats.feature_means[0];
    } else {
        report.delta_method = "auxiliary_regression";
        const Eigen::VectorXd gamma = auxiliary_regression(d);
        for (std::size_t j = 0; j < k; ++j) {
            report.delta[j] = report.beta * gamma(static_cast<Eigen::Index>(j) + 1);
            report.predicted_omitted_coefficients[j] = full.coefficients[j] + report.delta[j];
        }
        report.predicted_omitted_intercept = full.intercept + report.beta * gamma(0);
    }

    double agreement = std::abs(report.predicted_omitted_intercept -
                                report.empirical_omitted_intercept);
    for (std::size_t j = 0; j < k; ++j)
        agreement = std::max(agreement,
                             std::abs(report.predicted_omitted_coefficients[j] -
                                      report.empirical_omitted_coefficients[j]));
    report.agreement = agreement;
    return report;
}

LinearModel sanitize(const LinearModel& full_model, SanitizationPolicy policy,
                     const SummaryStats& stats) {
    if (!full_model.includes_sensitive())
        throw Error(ErrorKind::NotFullModel,
                    "sanitize needs a model fitted with the sensitive attribute");

    const double beta = *full_model.sensitive_coefficient;
    double c = 0.0;
    switch (policy) {
        case SanitizationPolicy::reference_correct: c = 0.0; break;
        case SanitizationPolicy::protected_correct: c = beta; break;
        case SanitizationPolicy::population_mean: c = stats.sensitive_mean * beta; break;
    }

    LinearModel m = full_model;
    m.intercept += c;
    m.sensitive_coefficient.reset();
    m.trained_on.includes_sensitive = false;
    return m;
}

} // namespace fairaudit
