#include <algorithm>
#include <cmath>
#include <vector>

#include "doctest.h"

#include "fairaudit/bias.hpp"
#include "fairaudit/error.hpp"
#include "fairaudit/linear_model.hpp"
#include "fairaudit/measures.hpp"
#include "fairaudit/rng.hpp"
#include "fairaudit/scenarios.hpp"
#include "support/oracles.hpp"

using namespace fairaudit;

namespace {

GroupAssignment swapped(const GroupAssignment& groups) {
    std::vector<int> labels = groups.labels();
    for (int& g : labels)
        g = 1 - g;
    return GroupAssignment(std::move(labels));
}

} // namespace

TEST_CASE("GroupAssignment validates labels") {
    CHECK_NOTHROW(GroupAssignment({0, 1, 0}));
    try {
        GroupAssignment({0, 2});
        FAIL("expected InvalidGroupLabel");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::InvalidGroupLabel);
    }

    const Dataset d = table1_fixture();
    const GroupAssignment g = GroupAssignment::from_sensitive(d);
    CHECK(g.count(0) == 5);
    CHECK(g.count(1) == 5);

    const Dataset ages = Dataset({1, 2}, {30, 40}, {5, 6}, {"x1"}, "age", "y");
    CHECK_THROWS_AS(GroupAssignment::from_sensitive(ages), Error);
}

TEST_CASE("mean_difference on the toy salaries") {
    const Dataset d = table1_fixture();
    const GroupAssignment groups = GroupAssignment::from_sensitive(d);
    const double diff = mean_difference(d.target(), groups);
    CHECK(diff == doctest::Approx(760.0)); // 1660 - 900

    SUBCASE("antisymmetric under group swap") {
        CHECK(mean_difference(d.target(), swapped(groups)) == -diff);
    }
    SUBCASE("invariant under a common shift") {
        std::vector<double> shifted = d.target();
        for (double& v : shifted)
            v += 123.25;
        CHECK(std::abs(mean_difference(shifted, groups) - diff) <= 1e-9);
    }
    SUBCASE("zero for constant predictions") {
        const std::vector<double> constant(d.n(), 7.0);
        CHECK(mean_difference(constant, groups) == 0.0);
    }
}

TEST_CASE("mean_difference requires both groups") {
    try {
        mean_difference({1.0, 2.0}, GroupAssignment({0, 0}));
        FAIL("expected EmptyGroup");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::EmptyGroup);
    }
}

TEST_CASE("rank_bias_auc endpoints and ties") {
    SUBCASE("perfect separation gives exactly 1") {
        const std::vector<double> scores = {10, 9, 8, 1, 2, 3};
        const GroupAssignment groups({0, 0, 0, 1, 1, 1});
        CHECK(rank_bias_auc(scores, groups) == 1.0);
        CHECK(rank_bias_auc(scores, swapped(groups)) == 0.0);
    }
    SUBCASE("all ties give exactly one half") {
        const std::vector<double> scores(7, 4.25);
        const GroupAssignment groups({0, 1, 0, 1, 0, 1, 1});
        CHECK(rank_bias_auc(scores, groups) == 0.5);
    }
    SUBCASE("two cross pairs split one each way") {
        CHECK(rank_bias_auc({3, 2, 1}, GroupAssignment({0, 1, 0})) == 0.5);
    }
    SUBCASE("empty group is rejected") {
        CHECK_THROWS_AS(rank_bias_auc({1, 2}, GroupAssignment({1, 1})), Error);
    }
}

TEST_CASE("rank_bias_auc equals the all-pairs brute force with ties") {
    CounterRng rng(404, 0);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 2 + rng.next_u64() % 199;
        std::vector<double> scores(n);
        std::vector<int> labels(n);
        // coarse integer scores force plenty of ties
        for (std::size_t i = 0; i < n; ++i) {
            scores[i] = static_cast<double>(rng.next_u64() % 12);
            labels[i] = rng.next_uniform01() < 0.5 ? 1 : 0;
        }
        labels[0] = 0;
        labels[n - 1] = 1;

        const double fast = rank_bias_auc(scores, GroupAssignment(labels));
        const double slow = oracles::brute_force_auc(scores, labels);
        CHECK(std::abs(fast - slow) <= 1e-12);
    }
}

TEST_CASE("rank_bias_auc swap symmetry is exact") {
    CounterRng rng(405, 0);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t n = 2 + rng.next_u64() % 60;
        std::vector<double> scores(n);
        std::vector<int> labels(n);
        for (std::size_t i = 0; i < n; ++i) {
            scores[i] = static_cast<double>(rng.next_u64() % 7);
            labels[i] = rng.next_uniform01() < 0.3 ? 1 : 0;
        }
        labels[0] = 0;
        labels[n - 1] = 1;
        const GroupAssignment groups(labels);
        const double a = rank_bias_auc(scores, groups);
        const double b = rank_bias_auc(scores, swapped(groups));
        CHECK(a + b == 1.0);
        CHECK(a >= 0.0);
        CHECK(a <= 1.0);
    }
}

TEST_CASE("rank_bias_auc is invariant under strictly increasing transforms") {
    CounterRng rng(406, 0);
    std::vector<double> scores(41);
    std::vector<int> labels(41);
    for (std::size_t i = 0; i < scores.size(); ++i) {
        scores[i] = static_cast<double>(rng.next_u64() % 9);
        labels[i] = i % 3 == 0 ? 1 : 0;
    }
    const GroupAssignment groups(labels);
    const double base = rank_bias_auc(scores, groups);

    std::vector<double> affine = scores;
    for (double& v : affine)
        v = 3.0 * v + 7.0;
    std::vector<double> exped = scores;
    for (double& v : exped)
        v = std::exp(v * 0.5);

    CHECK(rank_bias_auc(affine, groups) == base);
    CHECK(rank_bias_auc(exped, groups) == base);
}

TEST_CASE("group_error_profile on the toy models") {
    const Dataset d = table1_fixture();
    const GroupAssignment groups = GroupAssignment::from_sensitive(d);

    SUBCASE("omitted model splits the error by group") {
        const auto profile = group_error_profile(residuals(fit(d, false), d), groups);
        CHECK(profile.reference.count == 5);
        CHECK(profile.protected_group.count == 5);
        CHECK(std::abs(profile.reference.mean_signed - 213.6) <= 0.5);
        CHECK(std::abs(profile.protected_group.mean_signed + 213.6) <= 0.5);
        CHECK(profile.reference.mean_squared > 0.0);
    }
    SUBCASE("full model has no group error") {
        const auto profile = group_error_profile(residuals(fit(d, true), d), groups);
        CHECK(std::abs(profile.reference.mean_signed) <= 1e-6);
        CHECK(std::abs(profile.protected_group.mean_signed) <= 1e-6);
    }
    SUBCASE("all-zero residuals profile to zero") {
        const auto profile = group_error_profile(std::vector<double>(10, 0.0), groups);
        CHECK(profile.reference.mean_signed == 0.0);
        CHECK(profile.reference.mean_squared == 0.0);
        CHECK(profile.protected_group.mean_signed == 0.0);
        CHECK(profile.protected_group.mean_squared == 0.0);
    }
}

TEST_CASE("sanitized model equalizes mean predictions across identically distributed groups") {
    // same feature list in both groups: any feature-only model must score
    // the groups identically
    std::vector<double> values;
    CounterRng rng(77, 1);
    for (int i = 0; i < 30; ++i)
        values.push_back(rng.next_uniform(0.0, 12.0));

    ScenarioSpec spec;
    spec.true_intercept = 1000.0;
    spec.true_coefficients = {100.0};
    spec.true_beta = -500.0;
    spec.n_reference = 30;
    spec.n_protected = 30;
    spec.reference_features = {FeatureDistribution::make_fixed(values)};
    spec.protected_features = {FeatureDistribution::make_fixed(values)};
    spec.pathologies.label_bias = true;
    spec.seed = 77;

    const Dataset d = generate(spec);
    const LinearModel sanitized =
        sanitize(fit(d, true), SanitizationPolicy::population_mean, summarize(d));
    std::vector<double> preds(d.n());
    for (std::size_t i = 0; i < d.n(); ++i)
        preds[i] = predict(sanitized, d.feature_row(i));
    const double diff = mean_difference(preds, GroupAssignment::from_sensitive(d));
    CHECK(std::abs(diff) <= 1e-9);
}

TEST_CASE("fairness_report bundles the three metrics") {
    const Dataset d = table1_fixture();
    const GroupAssignment groups = GroupAssignment::from_sensitive(d);
    const LinearModel omitted = fit(d, false);
    const auto r = residuals(omitted, d);
    std::vector<double> preds(d.n());
    for (std::size_t i = 0; i < d.n(); ++i)
        preds[i] = d.target()[i] - r[i];

    const FairnessReport report = fairness_report(preds, r, groups);
    CHECK(report.rank_bias_auc == doctest::Approx(0.68)); // 17 of 25 cross pairs
    CHECK(report.mean_difference ==
          doctest::Approx(760.0 - 2.0 * 213.6089577950043).epsilon(1e-9));
    CHECK(report.group_error_profile.reference.count == 5);
}
