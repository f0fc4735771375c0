#include "fairaudit/report.hpp"

#include "fairaudit/error.hpp"

namespace fairaudit {

nlohmann::json model_to_json(const LinearModel& m) {
    nlohmann::json j;
    j["intercept"] = m.intercept;
    j["coefficients"] = m.coefficients;
    if (m.sensitive_coefficient.has_value())
        j["sensitive_coefficient"] = *m.sensitive_coefficient;
    else
        j["sensitive_coefficient"] = nullptr;
    j["feature_names"] = m.feature_names;
    return j;
}

nlohmann::json summary_to_json(const SummaryStats& stats, const Dataset& d) {
    return {
        {"n", stats.n},
        {"feature_names", d.feature_names()},
        {"feature_means", stats.feature_means},
        {"feature_variances", stats.feature_variances},
        {"cov_feature_sensitive", stats.cov_feature_sensitive},
        {"sensitive_name", d.sensitive_name()},
        {"sensitive_mean", stats.sensitive_mean},
        {"sensitive_variance", stats.sensitive_variance},
        {"target_name", d.target_name()},
    };
}

nlohmann::json bias_to_json(const BiasReport& report) {
    return {
        {"delta", report.delta},
        {"delta_method", report.delta_method},
        {"predicted_omitted_intercept", report.predicted_omitted_intercept},
        {"predicted_omitted_coefficients", report.predicted_omitted_coefficients},
        {"empirical_omitted_intercept", report.empirical_omitted_intercept},
        {"empirical_omitted_coefficients", report.empirical_omitted_coefficients},
        {"beta", report.beta},
        {"agreement", report.agreement},
    };
}

namespace {

nlohmann::json group_stats_to_json(const GroupErrorStats& stats) {
    return {
        {"mean_signed_residual", stats.mean_signed},
        {"mean_squared_residual", stats.mean_squared},
        {"count", stats.count},
    };
}

} // namespace

nlohmann::json fairness_to_json(const FairnessReport& report) {
    return {
        {"mean_difference", report.mean_difference},
        {"rank_bias_auc", report.rank_bias_auc},
        {"group_error_profile",
         {{"reference", group_stats_to_json(report.group_error_profile.reference)},
          {"protected", group_stats_to_json(report.group_error_profile.protected_group)}}},
    };
}

nlohmann::json tradeoff_to_json(const std::vector<TradeoffPoint>& points) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& point : points) {
        arr.push_back({
            {"lambda", point.lambda},
            {"mse", point.mse},
            {"group_gap", point.group_gap},
            {"model", model_to_json(point.model)},
        });
    }
    return arr;
}

std::string tradeoff_to_csv(const std::vector<TradeoffPoint>& points) {
    std::string out = "lambda,mse,group_gap,intercept";
    if (!points.empty()) {
        for (const auto& name : points.front().model.feature_names)
            out += "," + name;
    }
    out += '\n';
    for (const auto& point : points) {
        out += format_double(point.lambda);
        out += ',' + format_double(point.mse);
        out += ',' + format_double(point.group_gap);
        out += ',' + format_double(point.model.intercept);
        for (double c : point.model.coefficients)
            out += ',' + format_double(c);
        out += '\n';
    }
    return out;
}

namespace {

std::vector<double> predictions_from_residuals(const Dataset& d,
                                               const std::vector<double>& r) {
    std::vector<double> preds(d.n());
    for (std::size_t i = 0; i < d.n(); ++i)
        preds[i] = d.target()[i] - r[i];
    return preds;
}

nlohmann::json fairness_for_model(const LinearModel& m, const Dataset& d,
                                  const GroupAssignment& groups) {
    const std::vector<double> r = residuals(m, d);
    return fairness_to_json(fairness_report(predictions_from_residuals(d, r), r, groups));
}

bool sensitive_is_binary(const Dataset& d) {
    for (double s : d.sensitive())
        if (s != 0.0 && s != 1.0)
            return false;
    return true;
}

} // namespace

nlohmann::json build_audit_report(const Dataset& d, const AuditOptions& options) {
    const SummaryStats stats = summarize(d);
    const LinearModel full = fit(d, true);
    const LinearModel omitted = fit(d, false);
    const BiasReport bias = bias_report(d);
    const LinearModel selected = sanitize(full, options.policy, stats);

    nlohmann::json report;
    report["tool_version"] = kToolVersion;
    if (options.seed.has_value())
        report["seed"] = *options.seed;
    else
        report["seed"] = nullptr;
    report["dataset_summary"] = summary_to_json(stats, d);
    report["full_model"] = model_to_json(full);
    report["omitted_model"] = model_to_json(omitted);
    report["bias"] = bias_to_json(bias);

    nlohmann::json sanitized;
    for (auto policy : {SanitizationPolicy::reference_correct,
                        SanitizationPolicy::protected_correct,
                        SanitizationPolicy::population_mean})
        sanitized[to_string(policy)] = model_to_json(sanitize(full, policy, stats));
    report["sanitized_models"] = sanitized;
    report["selected_policy"] = to_string(options.policy);

    if (sensitive_is_binary(d)) {
        const GroupAssignment groups = GroupAssignment::from_sensitive(d);
        report["fairness"] = {
            {"full", fairness_for_model(full, d, groups)},
            {"omitted", fairness_for_model(omitted, d, groups)},
            {"sanitized", fairness_for_model(selected, d, groups)},
        };
    } else {
        report["fairness"] = nullptr;
        report["fairness_skipped_reason"] =
            "sensitive attribute is not binary 0/1; group metrics are undefined";
    }
    return report;
}

} // namespace fairaudit
