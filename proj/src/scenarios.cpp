#include "fairaudit/scenarios.hpp"

#include <cmath>
#include <utility>

#include "fairaudit/error.hpp"
#include "fairaudit/rng.hpp"

namespace fairaudit {

FeatureDistribution FeatureDistribution::make_uniform(double lo, double hi) {
    FeatureDistribution d;
    d.kind = Kind::uniform;
    d.a = lo;
    d.b = hi;
    return d;
}

FeatureDistribution FeatureDistribution::make_normal(double mean, double stddev) {
    FeatureDistribution d;
    d.kind = Kind::normal;
    d.a = mean;
    d.b = stddev;
    return d;
}

FeatureDistribution FeatureDistribution::make_fixed(std::vector<double> values) {
    FeatureDistribution d;
    d.kind = Kind::fixed;
    d.values = std::move(values);
    return d;
}

namespace {

[[noreturn]] void invalid(const std::string& reason) {
    throw Error(ErrorKind::InvalidSpec, reason);
}

void validate_distribution(const FeatureDistribution& dist, std::size_t group_n,
                           const std::string& where) {
    switch (dist.kind) {
        case FeatureDistribution::Kind::uniform:
            if (!std::isfinite(dist.a) || !std::isfinite(dist.b) || dist.a > dist.b)
                invalid(where + ": uniform bounds must be finite with low <= high");
            break;
        case FeatureDistribution::Kind::normal:
            if (!std::isfinite(dist.a) || !std::isfinite(dist.b) || dist.b < 0.0)
                invalid(where + ": normal parameters must be finite with std >= 0");
            break;
        case FeatureDistribution::Kind::fixed:
            if (dist.values.size() != group_n)
                invalid(where + ": fixed list has " + std::to_string(dist.values.size()) +
                        " values, group has " + std::to_string(group_n) + " rows");
            for (double v : dist.values)
                if (!std::isfinite(v))
                    invalid(where + ": fixed list contains a non-finite value");
            break;
    }
}

void validate(const ScenarioSpec& spec) {
    const std::size_t k = spec.true_coefficients.size();
    if (k == 0)
        invalid("true_coefficients must hold at least one coefficient");
    if (!std::isfinite(spec.true_intercept) || !std::isfinite(spec.true_beta))
        invalid("true_intercept and true_beta must be finite");
    for (double b : spec.true_coefficients)
        if (!std::isfinite(b))
            invalid("true_coefficients contains a non-finite value");
    if (!std::isfinite(spec.noise_std) || spec.noise_std < 0.0)
        invalid("noise_std must be >= 0");
    if (spec.n_reference + spec.n_protected < 2)
        invalid("need at least two rows in total");
    if (!spec.allow_single_group && (spec.n_reference == 0 || spec.n_protected == 0))
        invalid("both groups must be non-empty unless allow_single_group is set");
    if (spec.pathologies.sample_skew && spec.n_reference == spec.n_protected)
        invalid("sample_skew requires unequal group sizes");
    if (spec.reference_features.size() != k)
        invalid("reference feature distributions must match the coefficient count");
    if (spec.protected_features.size() != k)
        invalid("protected feature distributions must match the coefficient count");
    if (!spec.feature_names.empty() && spec.feature_names.size() != k)
        invalid("feature_names must be empty or match the coefficient count");
    for (std::size_t j = 0; j < k; ++j) {
        validate_distribution(spec.reference_features[j], spec.n_reference,
                              "reference feature " + std::to_string(j + 1));
        validate_distribution(spec.protected_features[j], spec.n_protected,
                              "protected feature " + std::to_string(j + 1));
    }
}

double draw(const FeatureDistribution& dist, CounterRng& rng, std::size_t row_in_group) {
    switch (dist.kind) {
        case FeatureDistribution::Kind::uniform:
            return rng.next_uniform(dist.a, dist.b);
        case FeatureDistribution::Kind::normal:
            return rng.next_normal(dist.a, dist.b);
        case FeatureDistribution::Kind::fixed:
            return dist.values[row_in_group];
    }
    return 0.0;
}

} // namespace

Dataset generate(const ScenarioSpec& spec) {
    validate(spec);
    const std::size_t k = spec.true_coefficients.size();
    const std::size_t n = spec.n_reference + spec.n_protected;

    // Stream 0 feeds the noise column; streams 1..k the protected group's
    // features; streams k+1..2k the reference group's. Fixed lists consume
    // no draws, so toggling one column's distribution never shifts another.
    CounterRng noise_rng(spec.seed, 0);
    std::vector<CounterRng> protected_rngs;
    std::vector<CounterRng> reference_rngs;
    for (std::size_t j = 0; j < k; ++j) {
        protected_rngs.emplace_back(spec.seed, 1 + j);
        reference_rngs.emplace_back(spec.seed, 1 + k + j);
    }

    std::vector<double> features;
    features.reserve(n * k);
    std::vector<double> sensitive;
    sensitive.reserve(n);
    std::vector<double> target;
    target.reserve(n);

    auto emit_group = [&](double s_value, std::size_t group_n,
                          const std::vector<FeatureDistribution>& dists,
                          std::vector<CounterRng>& rngs) {
        for (std::size_t r = 0; r < group_n; ++r) {
            double y = spec.true_intercept;
            for (std::size_t j = 0; j < k; ++j) {
                const double x = draw(dists[j], rngs[j], r);
                features.push_back(x);
                y += spec.true_coefficients[j] * x;
            }
            if (spec.pathologies.label_bias)
                y += spec.true_beta * s_value;
            y += noise_rng.next_normal(0.0, spec.noise_std);
            sensitive.push_back(s_value);
            target.push_back(y);
        }
    };

    // Protected rows first, then reference, matching the toy fixture layout.
    emit_group(1.0, spec.n_protected, spec.protected_features, protected_rngs);
    emit_group(0.0, spec.n_reference, spec.reference_features, reference_rngs);

    std::vector<std::string> names = spec.feature_names;
    if (names.empty()) {
        for (std::size_t j = 0; j < k; ++j)
            names.push_back("x" + std::to_string(j + 1));
    }

    try {
        return Dataset(std::move(features), std::move(sensitive), std::move(target),
                       std::move(names), spec.sensitive_name, spec.target_name,
                       spec.pathologies.omit_sensitive_at_export);
    } catch (const Error& e) {
        invalid(std::string("generated dataset rejected: ") + e.what());
    }
}

Dataset table1_fixture() {
    return Dataset(
        {1, 2, 3, 4, 10, 1, 6, 7, 9, 10},
        {1, 1, 1, 1, 1, 0, 0, 0, 0, 0},
        {600, 700, 800, 900, 1500, 1100, 1600, 1700, 1900, 2000},
        {"education"}, "ethnicity", "salary");
}

namespace {

nlohmann::json distribution_to_json(const FeatureDistribution& dist) {
    switch (dist.kind) {
        case FeatureDistribution::Kind::uniform:
            return {{"kind", "uniform"}, {"low", dist.a}, {"high", dist.b}};
        case FeatureDistribution::Kind::normal:
            return {{"kind", "normal"}, {"mean", dist.a}, {"std", dist.b}};
        case FeatureDistribution::Kind::fixed:
            return {{"kind", "fixed"}, {"values", dist.values}};
    }
    return {};
}

FeatureDistribution distribution_from_json(const nlohmann::json& j) {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "uniform")
        return FeatureDistribution::make_uniform(j.at("low").get<double>(),
                                                 j.at("high").get<double>());
    if (kind == "normal")
        return FeatureDistribution::make_normal(j.at("mean").get<double>(),
                                                j.at("std").get<double>());
    if (kind == "fixed")
        return FeatureDistribution::make_fixed(j.at("values").get<std::vector<double>>());
    invalid("unknown distribution kind '" + kind + "'");
}

std::size_t count_from_json(const nlohmann::json& j, const char* field) {
    const auto value = j.at(field).get<std::int64_t>();
    if (value < 0)
        invalid(std::string(field) + " must be >= 0");
    return static_cast<std::size_t>(value);
}

} // namespace

ScenarioSpec scenario_from_json(const nlohmann::json& j) {
    try {
        ScenarioSpec spec;
        spec.true_intercept = j.at("true_intercept").get<double>();
        spec.true_coefficients = j.at("true_coefficients").get<std::vector<double>>();
        spec.true_beta = j.at("true_beta").get<double>();
        spec.noise_std = j.at("noise_std").get<double>();
        spec.n_reference = count_from_json(j, "n_reference");
        spec.n_protected = count_from_json(j, "n_protected");
        spec.seed = j.at("seed").get<std::uint64_t>();

        const auto& dists = j.at("feature_distributions");
        for (const auto& dj : dists.at("reference"))
            spec.reference_features.push_back(distribution_from_json(dj));
        for (const auto& dj : dists.at("protected"))
            spec.protected_features.push_back(distribution_from_json(dj));

        if (j.contains("pathologies")) {
            for (const auto& pj : j.at("pathologies")) {
                const std::string name = pj.get<std::string>();
                if (name == "label_bias")
                    spec.pathologies.label_bias = true;
                else if (name == "omit_sensitive_at_export")
                    spec.pathologies.omit_sensitive_at_export = true;
                else if (name == "sample_skew")
                    spec.pathologies.sample_skew = true;
                else
                    invalid("unknown pathology '" + name + "'");
            }
        }
        if (j.contains("allow_single_group"))
            spec.allow_single_group = j.at("allow_single_group").get<bool>();
        if (j.contains("feature_names"))
            spec.feature_names = j.at("feature_names").get<std::vector<std::string>>();
        if (j.contains("sensitive_name"))
            spec.sensitive_name = j.at("sensitive_name").get<std::string>();
        if (j.contains("target_name"))
            spec.target_name = j.at("target_name").get<std::string>();
        return spec;
    } catch (const Error&) {
        throw;
    } catch (const nlohmann::json::exception& e) {
        invalid(std::string("malformed scenario JSON: ") + e.what());
    }
}

nlohmann::json scenario_to_json(const ScenarioSpec& spec) {
    nlohmann::json j;
    j["true_intercept"] = spec.true_intercept;
    j["true_coefficients"] = spec.true_coefficients;
    j["true_beta"] = spec.true_beta;
    j["noise_std"] = spec.noise_std;
    j["n_reference"] = spec.n_reference;
    j["n_protected"] = spec.n_protected;
    j["seed"] = spec.seed;

    nlohmann::json reference = nlohmann::json::array();
    for (const auto& dist : spec.reference_features)
        reference.push_back(distribution_to_json(dist));
    nlohmann::json protected_group = nlohmann::json::array();
    for (const auto& dist : spec.protected_features)
        protected_group.push_back(distribution_to_json(dist));
    j["feature_distributions"] = {{"reference", reference}, {"protected", protected_group}};

    nlohmann::json pathologies = nlohmann::json::array();
    if (spec.pathologies.label_bias)
        pathologies.push_back("label_bias");
    if (spec.pathologies.omit_sensitive_at_export)
        pathologies.push_back("omit_sensitive_at_export");
    if (spec.pathologies.sample_skew)
        pathologies.push_back("sample_skew");
    j["pathologies"] = pathologies;

    j["allow_single_group"] = spec.allow_single_group;
    if (!spec.feature_names.empty())
        j["feature_names"] = spec.feature_names;
    j["sensitive_name"] = spec.sensitive_name;
    j["target_name"] = spec.target_name;
    return j;
}

} // namespace fairaudit
