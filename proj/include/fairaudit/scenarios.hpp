#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

#include "fairaudit/dataset.hpp"

namespace fairaudit {

/// How one feature column is sampled within one group.
struct FeatureDistribution {
    enum class Kind { uniform, normal, fixed };

    Kind kind = Kind::uniform;
    double a = 0.0; // uniform: low,  normal: mean
    double b = 0.0; // uniform: high, normal: std
    std::vector<double> values; // fixed: one value per group row

    static FeatureDistribution make_uniform(double lo, double hi);
    static FeatureDistribution make_normal(double mean, double stddev);
    static FeatureDistribution make_fixed(std::vector<double> values);
};

/// Data pathologies under which a learned model turns discriminatory:
///   label_bias              targets include the beta*s component
///                           (historical decisions were themselves biased)
///   omit_sensitive_at_export  the sensitive column is generated but marked
///                           hidden, and CSV export drops it
///   sample_skew             group sizes are deliberately unequal
struct Pathologies {
    bool label_bias = false;
    bool omit_sensitive_at_export = false;
    bool sample_skew = false;
};

/// Knobs of the synthetic generator: y = b0 + sum(bj * xj) + beta*s + e,
/// with e ~ Normal(0, noise_std) and per-group feature distributions.
struct ScenarioSpec {
    double true_intercept = 0.0;
    std::vector<double> true_coefficients;
    double true_beta = 0.0;
    double noise_std = 0.0;
    std::size_t n_reference = 0;
    std::size_t n_protected = 0;
    std::vector<FeatureDistribution> reference_features; // one per feature
    std::vector<FeatureDistribution> protected_features; // one per feature
    Pathologies pathologies;
    std::uint64_t seed = 0;
    bool allow_single_group = false;
    std::vector<std::string> feature_names; // empty -> x1..xk
    std::string sensitive_name = "s";
    std::string target_name = "y";
};

/// Deterministic synthesis: identical specs produce bit-identical datasets.
/// Protected-group rows (s=1) come first, then reference rows, matching the
/// bundled toy fixture's layout. Throws InvalidSpec with a reason.
Dataset generate(const ScenarioSpec& spec);

/// The ten-row toy salary dataset (education, ethnicity, salary) used as
/// the worked example throughout the test suites.
Dataset table1_fixture();

ScenarioSpec scenario_from_json(const nlohmann::json& j);
nlohmann::json scenario_to_json(const ScenarioSpec& spec);

} // namespace fairaudit
