#pragma once

#include <cstdint>
#include <optional>

#include "json.hpp"

#include "fairaudit/bias.hpp"
#include "fairaudit/dataset.hpp"
#include "fairaudit/linear_model.hpp"
#include "fairaudit/measures.hpp"
#include "fairaudit/robust.hpp"

namespace fairaudit {

inline constexpr const char* kToolVersion = "0.1.0";

/// Spec'd wire shape: {"intercept", "coefficients", "sensitive_coefficient"
/// (null when absent), "feature_names"}.
nlohmann::json model_to_json(const LinearModel& m);

nlohmann::json summary_to_json(const SummaryStats& stats, const Dataset& d);
nlohmann::json bias_to_json(const BiasReport& report);
nlohmann::json fairness_to_json(const FairnessReport& report);
nlohmann::json tradeoff_to_json(const std::vector<TradeoffPoint>& points);
std::string tradeoff_to_csv(const std::vector<TradeoffPoint>& points);

struct AuditOptions {
    SanitizationPolicy policy = SanitizationPolicy::population_mean;
    std::optional<std::int64_t> seed;
};

/// The self-contained audit document: dataset summary, full and omitted
/// fits, the bias reconciliation, all three sanitized models, and fairness
/// metrics for the full, omitted and selected-policy sanitized predictions.
/// Group metrics need a binary 0/1 sensitive attribute; otherwise the
/// fairness section is null and fairness_skipped_reason says why.
/// Deterministic: the same dataset and options always produce the same
/// document.
nlohmann::json build_audit_report(const Dataset& d, const AuditOptions& options);

} // namespace fairaudit
