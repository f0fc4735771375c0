#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "doctest.h"

#include "fairaudit/dataset.hpp"
#include "fairaudit/error.hpp"
#include "fairaudit/rng.hpp"
#include "fairaudit/scenarios.hpp"
#include "support/helpers.hpp"

using namespace fairaudit;
using helpers::TempDir;

namespace {

const char* kToyCsv =
    "education,ethnicity,salary\n"
    "1,1,600\n2,1,700\n3,1,800\n4,1,900\n10,1,1500\n"
    "1,0,1100\n6,0,1600\n7,0,1700\n9,0,1900\n10,0,2000\n";

ColumnRoles toy_roles() {
    return {"salary", "ethnicity", {"education"}};
}

} // namespace

TEST_CASE("load_csv maps the toy salary file onto roles") {
    TempDir dir("csv");
    helpers::write_file(dir.file("toy.csv"), kToyCsv);
    const Dataset d = load_csv(dir.file("toy.csv"), toy_roles());

    CHECK(d.n() == 10);
    CHECK(d.k() == 1);
    CHECK(d.feature_names() == std::vector<std::string>{"education"});
    CHECK(d.target()[0] == 600.0);
    CHECK(d.feature(4, 0) == 10.0);
    CHECK(d.sensitive()[5] == 0.0);

    const SummaryStats stats = summarize(d);
    CHECK(stats.sensitive_mean == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("load_csv with empty feature list takes all remaining columns") {
    TempDir dir("csv");
    helpers::write_file(dir.file("toy.csv"), kToyCsv);
    const Dataset d = load_csv(dir.file("toy.csv"), {"salary", "ethnicity", {}});
    CHECK(d.k() == 1);
    CHECK(d.feature_names() == std::vector<std::string>{"education"});
}

TEST_CASE("load_csv error paths") {
    TempDir dir("csv");

    SUBCASE("header-only file is an empty dataset") {
        helpers::write_file(dir.file("empty.csv"), "education,ethnicity,salary\n");
        try {
            load_csv(dir.file("empty.csv"), toy_roles());
            FAIL("expected EmptyDataset");
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::EmptyDataset);
        }
    }

    SUBCASE("sensitive == target is a role collision") {
        helpers::write_file(dir.file("toy.csv"), kToyCsv);
        try {
            load_csv(dir.file("toy.csv"), {"salary", "salary", {"education"}});
            FAIL("expected DuplicateRole");
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::DuplicateRole);
        }
    }

    SUBCASE("missing column is reported by name") {
        helpers::write_file(dir.file("toy.csv"), kToyCsv);
        try {
            load_csv(dir.file("toy.csv"), {"salary", "age", {"education"}});
            FAIL("expected MissingColumn");
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::MissingColumn);
            CHECK(std::string(e.what()).find("age") != std::string::npos);
        }
    }

    SUBCASE("non-numeric cell carries row and column") {
        helpers::write_file(dir.file("bad.csv"),
                            "education,ethnicity,salary\n1,1,600\n2,one,700\n");
        try {
            load_csv(dir.file("bad.csv"), toy_roles());
            FAIL("expected NonNumericCell");
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::NonNumericCell);
            CHECK(std::string(e.what()).find("row 2") != std::string::npos);
            CHECK(std::string(e.what()).find("ethnicity") != std::string::npos);
        }
    }

    SUBCASE("nan cells are rejected") {
        helpers::write_file(dir.file("nan.csv"),
                            "education,ethnicity,salary\n1,1,nan\n");
        CHECK_THROWS_AS(load_csv(dir.file("nan.csv"), toy_roles()), Error);
    }

    SUBCASE("short row is rejected") {
        helpers::write_file(dir.file("short.csv"),
                            "education,ethnicity,salary\n1,1,600\n2,1\n");
        CHECK_THROWS_AS(load_csv(dir.file("short.csv"), toy_roles()), Error);
    }
}

TEST_CASE("Dataset constructor enforces its invariants") {
    SUBCASE("non-finite values are rejected") {
        CHECK_THROWS_AS(helpers::make_dataset({{1.0}, {std::nan("")}}, {0, 1}, {1, 2}),
                        Error);
        CHECK_THROWS_AS(helpers::make_dataset({{1.0}, {2.0}}, {0, INFINITY}, {1, 2}),
                        Error);
    }
    SUBCASE("length mismatch is rejected") {
        CHECK_THROWS_AS(helpers::make_dataset({{1.0}, {2.0}}, {0}, {1, 2}), Error);
    }
    SUBCASE("name collisions are rejected") {
        CHECK_THROWS_AS(Dataset({1, 2}, {0, 1}, {1, 2}, {"s"}, "s", "y"), Error);
        CHECK_THROWS_AS(Dataset({1, 2, 3, 4}, {0, 1}, {1, 2}, {"a", "a"}, "s", "y"),
                        Error);
    }
    SUBCASE("zero rows is an empty dataset") {
        CHECK_THROWS_AS(Dataset({}, {}, {}, {"x"}, "s", "y"), Error);
    }
}

TEST_CASE("summarize reproduces the toy-data moments") {
    const SummaryStats stats = summarize(table1_fixture());
    CHECK(stats.n == 10);
    CHECK(stats.sensitive_mean == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(stats.feature_means[0] == doctest::Approx(5.3).epsilon(1e-12));
    CHECK(stats.feature_variances[0] == doctest::Approx(11.61).epsilon(1e-12));
    CHECK(stats.cov_feature_sensitive[0] == doctest::Approx(-0.65).epsilon(1e-12));
    CHECK(stats.sensitive_variance == doctest::Approx(0.25).epsilon(1e-12));
}

TEST_CASE("summarize of a constant sensitive column") {
    const Dataset d = helpers::make_dataset({{1.0}, {2.0}, {3.0}}, {0, 0, 0}, {1, 2, 3});
    const SummaryStats stats = summarize(d);
    CHECK(stats.sensitive_variance == 0.0);
    CHECK(stats.cov_feature_sensitive[0] == 0.0);
}

namespace {

Dataset random_dataset(std::uint64_t seed, std::size_t n, std::size_t k) {
    CounterRng rng(seed, 42);
    std::vector<double> features(n * k);
    std::vector<double> sensitive(n);
    std::vector<double> target(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < k; ++j)
            features[i * k + j] = rng.next_uniform(-10.0, 10.0);
        sensitive[i] = rng.next_uniform01() < 0.4 ? 1.0 : 0.0;
        target[i] = rng.next_normal(0.0, 5.0);
    }
    std::vector<std::string> names;
    for (std::size_t j = 0; j < k; ++j)
        names.push_back("x" + std::to_string(j + 1));
    return Dataset(std::move(features), std::move(sensitive), std::move(target),
                   std::move(names), "s", "y");
}

Dataset permuted(const Dataset& d, std::uint64_t seed) {
    std::vector<std::size_t> order(d.n());
    std::iota(order.begin(), order.end(), std::size_t{0});
    CounterRng rng(seed, 7);
    for (std::size_t i = order.size(); i > 1; --i)
        std::swap(order[i - 1], order[rng.next_u64() % i]);

    std::vector<double> features;
    std::vector<double> sensitive;
    std::vector<double> target;
    for (std::size_t row : order) {
        const auto fr = d.feature_row(row);
        features.insert(features.end(), fr.begin(), fr.end());
        sensitive.push_back(d.sensitive()[row]);
        target.push_back(d.target()[row]);
    }
    return Dataset(std::move(features), std::move(sensitive), std::move(target),
                   d.feature_names(), d.sensitive_name(), d.target_name());
}

} // namespace

TEST_CASE("summarize is permutation invariant") {
    for (std::uint64_t seed : {1u, 2u, 3u, 4u, 5u}) {
        const Dataset d = random_dataset(seed, 200, 3);
        const SummaryStats a = summarize(d);
        const SummaryStats b = summarize(permuted(d, seed));
        CHECK(std::abs(a.sensitive_mean - b.sensitive_mean) <= 1e-12);
        CHECK(std::abs(a.sensitive_variance - b.sensitive_variance) <= 1e-12);
        for (std::size_t j = 0; j < d.k(); ++j) {
            CHECK(std::abs(a.feature_means[j] - b.feature_means[j]) <= 1e-12);
            CHECK(std::abs(a.feature_variances[j] - b.feature_variances[j]) <= 1e-12);
            CHECK(std::abs(a.cov_feature_sensitive[j] - b.cov_feature_sensitive[j]) <=
                  1e-12);
        }
    }
}

TEST_CASE("summarize satisfies Cauchy-Schwarz") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const Dataset d = random_dataset(seed, 50 + 13 * seed, 2);
        const SummaryStats stats = summarize(d);
        for (std::size_t j = 0; j < d.k(); ++j) {
            const double cov = stats.cov_feature_sensitive[j];
            CHECK(cov * cov <=
                  stats.feature_variances[j] * stats.sensitive_variance + 1e-9);
        }
    }
}

TEST_CASE("duplicating every row leaves population moments unchanged") {
    const Dataset d = random_dataset(99, 64, 2);
    std::vector<double> features(d.features());
    features.insert(features.end(), d.features().begin(), d.features().end());
    std::vector<double> sensitive(d.sensitive());
    sensitive.insert(sensitive.end(), d.sensitive().begin(), d.sensitive().end());
    std::vector<double> target(d.target());
    target.insert(target.end(), d.target().begin(), d.target().end());
    const Dataset doubled(std::move(features), std::move(sensitive), std::move(target),
                          d.feature_names(), d.sensitive_name(), d.target_name());

    const SummaryStats a = summarize(d);
    const SummaryStats b = summarize(doubled);
    CHECK(b.n == 2 * a.n);
    CHECK(std::abs(a.sensitive_mean - b.sensitive_mean) <= 1e-12);
    CHECK(std::abs(a.sensitive_variance - b.sensitive_variance) <= 1e-12);
    for (std::size_t j = 0; j < d.k(); ++j) {
        CHECK(std::abs(a.feature_means[j] - b.feature_means[j]) <= 1e-12);
        CHECK(std::abs(a.feature_variances[j] - b.feature_variances[j]) <= 1e-12);
        CHECK(std::abs(a.cov_feature_sensitive[j] - b.cov_feature_sensitive[j]) <= 1e-12);
    }
}

TEST_CASE("CSV round trip preserves values exactly") {
    TempDir dir("roundtrip");
    const Dataset d = random_dataset(7, 40, 2);
    write_csv(d, dir.file("out.csv"));
    const Dataset back = load_csv(dir.file("out.csv"), {"y", "s", {"x1", "x2"}});
    REQUIRE(back.n() == d.n());
    for (std::size_t i = 0; i < d.n(); ++i) {
        CHECK(back.target()[i] == d.target()[i]);
        CHECK(back.sensitive()[i] == d.sensitive()[i]);
        for (std::size_t j = 0; j < d.k(); ++j)
            CHECK(back.feature(i, j) == d.feature(i, j));
    }
}

TEST_CASE("hidden sensitive column is dropped from CSV output") {
    const Dataset d(
        {1, 2}, {0, 1}, {10, 20}, {"x1"}, "s", "y", /*sensitive_hidden=*/true);
    const std::string csv = to_csv(d);
    CHECK(csv == "x1,y\n1,10\n2,20\n");
}
