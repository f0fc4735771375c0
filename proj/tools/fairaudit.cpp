#include <charconv>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "fairaudit/bias.hpp"
#include "fairaudit/canonical_json.hpp"
#include "fairaudit/dataset.hpp"
#include "fairaudit/error.hpp"
#include "fairaudit/measures.hpp"
#include "fairaudit/report.hpp"
#include "fairaudit/robust.hpp"
#include "fairaudit/scenarios.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitRuntime = 1;
constexpr int kExitUsage = 2;

[[noreturn]] void fail(int code, const std::string& kind, const std::string& message) {
    nlohmann::json err = {{"error", kind}, {"message", message}};
    std::cerr << fairaudit::canonical_dump_compact(err) << "\n";
    std::exit(code);
}

void write_text_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty() || out_path == "-") {
        std::cout << text;
        return;
    }
    const std::string tmp = out_path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out)
            throw fairaudit::Error(fairaudit::ErrorKind::IoError,
                                   "cannot write '" + tmp + "'");
        out << text;
        if (!out)
            throw fairaudit::Error(fairaudit::ErrorKind::IoError,
                                   "short write to '" + tmp + "'");
    }
    std::error_code ec;
    std::filesystem::rename(tmp, out_path, ec);
    if (ec) {
        std::filesystem::remove(tmp);
        throw fairaudit::Error(fairaudit::ErrorKind::IoError,
                               "cannot move output into '" + out_path + "'");
    }
}

std::vector<std::string> split_csv_list(const std::string& text) {
    std::vector<std::string> items;
    std::string item;
    std::stringstream ss(text);
    while (std::getline(ss, item, ','))
        items.push_back(item);
    return items;
}

fairaudit::ColumnRoles make_roles(const std::string& target, const std::string& sensitive,
                                  const std::string& features) {
    fairaudit::ColumnRoles roles;
    roles.target = target;
    roles.sensitive = sensitive;
    if (!features.empty() && features != "all")
        roles.features = split_csv_list(features);
    return roles;
}

fairaudit::SanitizationPolicy parse_policy(const std::string& name) {
    if (name == "reference_correct")
        return fairaudit::SanitizationPolicy::reference_correct;
    if (name == "protected_correct")
        return fairaudit::SanitizationPolicy::protected_correct;
    if (name == "population_mean")
        return fairaudit::SanitizationPolicy::population_mean;
    fail(kExitUsage, "Usage",
         "unknown policy '" + name +
             "'; expected reference_correct|protected_correct|population_mean");
}

std::vector<double> parse_lambdas(const std::string& text) {
    if (text.empty())
        fail(kExitUsage, "InvalidLambdas", "lambda list must not be empty");
    std::vector<double> lambdas;
    for (const std::string& item : split_csv_list(text)) {
        double value = 0.0;
        const char* begin = item.data();
        const char* end = begin + item.size();
        auto [ptr, ec] = std::from_chars(begin, end, value);
        if (ec != std::errc() || ptr != end || item.empty())
            fail(kExitUsage, "InvalidLambdas", "'" + item + "' is not a number");
        if (!(value >= 0.0))
            fail(kExitUsage, "InvalidLambdas", "lambdas must be >= 0");
        lambdas.push_back(value);
    }
    for (std::size_t i = 1; i < lambdas.size(); ++i)
        if (lambdas[i] <= lambdas[i - 1])
            fail(kExitUsage, "InvalidLambdas", "lambdas must ascend");
    return lambdas;
}

int exit_code_for(const fairaudit::Error& e) {
    // Misnamed role columns are the caller's flag mistake, not a runtime
    // failure of the audit itself.
    switch (e.kind()) {
        case fairaudit::ErrorKind::MissingColumn:
        case fairaudit::ErrorKind::DuplicateRole:
            return kExitUsage;
        default:
            return kExitRuntime;
    }
}

struct AuditArgs {
    std::string csv_path;
    std::string target;
    std::string sensitive;
    std::string features = "all";
    std::string policy = "population_mean";
    std::string out;
    std::optional<std::int64_t> seed;
};

int run_audit(const AuditArgs& args) {
    const fairaudit::Dataset d =
        fairaudit::load_csv(args.csv_path, make_roles(args.target, args.sensitive, args.features));
    fairaudit::AuditOptions options;
    options.policy = parse_policy(args.policy);
    options.seed = args.seed;
    const nlohmann::json report = fairaudit::build_audit_report(d, options);
    write_text_output(fairaudit::canonical_dump(report), args.out);
    return kExitOk;
}

struct SimulateArgs {
    std::string spec_path;
    std::string out;
    std::optional<std::int64_t> seed;
};

int run_simulate(const SimulateArgs& args) {
    std::ifstream in(args.spec_path);
    if (!in)
        throw fairaudit::Error(fairaudit::ErrorKind::IoError,
                               "cannot open '" + args.spec_path + "'");
    nlohmann::json spec_json;
    try {
        in >> spec_json;
    } catch (const nlohmann::json::exception& e) {
        throw fairaudit::Error(fairaudit::ErrorKind::InvalidSpec,
                               std::string("spec is not valid JSON: ") + e.what());
    }
    fairaudit::ScenarioSpec spec = fairaudit::scenario_from_json(spec_json);
    if (args.seed.has_value())
        spec.seed = static_cast<std::uint64_t>(*args.seed);
    const fairaudit::Dataset d = fairaudit::generate(spec);
    write_text_output(fairaudit::to_csv(d), args.out);
    return kExitOk;
}

struct SweepArgs {
    std::string csv_path;
    std::string target;
    std::string sensitive;
    std::string features = "all";
    std::string lambdas;
    std::string out;
};

int run_sweep(const SweepArgs& args) {
    const std::vector<double> lambdas = parse_lambdas(args.lambdas);
    const fairaudit::Dataset d =
        fairaudit::load_csv(args.csv_path, make_roles(args.target, args.sensitive, args.features));
    const fairaudit::GroupAssignment groups = fairaudit::GroupAssignment::from_sensitive(d);
    const auto points = fairaudit::tradeoff_sweep(d, groups, lambdas);

    const bool as_csv = args.out.size() >= 4 &&
                        args.out.compare(args.out.size() - 4, 4, ".csv") == 0;
    if (as_csv)
        write_text_output(fairaudit::tradeoff_to_csv(points), args.out);
    else
        write_text_output(fairaudit::canonical_dump(fairaudit::tradeoff_to_json(points)),
                          args.out);
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"fairaudit: omitted-variable-bias audits, model sanitization and "
                 "fairness measurement for linear regression"};
    app.require_subcommand(1);

    AuditArgs audit;
    CLI::App* audit_cmd =
        app.add_subcommand("audit", "Audit a CSV dataset and write a JSON report");
    audit_cmd->add_option("csv", audit.csv_path, "input CSV file")->required();
    audit_cmd->add_option("--target", audit.target, "target column name")->required();
    audit_cmd->add_option("--sensitive", audit.sensitive, "sensitive column name")->required();
    audit_cmd->add_option("--features", audit.features,
                          "comma-separated feature columns, or 'all' (default)");
    audit_cmd->add_option("--policy", audit.policy,
                          "sanitization policy: reference_correct|protected_correct|"
                          "population_mean (default)");
    audit_cmd->add_option("--out", audit.out, "output path for the report (default stdout)");
    audit_cmd->add_option("--seed", audit.seed, "seed recorded in the report");

    SimulateArgs simulate;
    CLI::App* simulate_cmd =
        app.add_subcommand("simulate", "Generate a synthetic CSV from a scenario spec");
    simulate_cmd->add_option("--spec", simulate.spec_path, "scenario spec JSON file")->required();
    simulate_cmd->add_option("--out", simulate.out, "output CSV path (default stdout)");
    simulate_cmd->add_option("--seed", simulate.seed, "override the spec's seed");

    SweepArgs sweep;
    CLI::App* sweep_cmd = app.add_subcommand(
        "sweep", "Trace the accuracy-fairness tradeoff over a lambda grid");
    sweep_cmd->add_option("csv", sweep.csv_path, "input CSV file")->required();
    sweep_cmd->add_option("--target", sweep.target, "target column name")->required();
    sweep_cmd->add_option("--sensitive", sweep.sensitive, "sensitive column name")->required();
    sweep_cmd->add_option("--features", sweep.features,
                          "comma-separated feature columns, or 'all' (default)");
    sweep_cmd->add_option("--lambdas", sweep.lambdas, "ascending comma-separated weights")
        ->required();
    sweep_cmd->add_option("--out", sweep.out,
                          "output path; .csv emits a table, anything else JSON "
                          "(default stdout JSON)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        fail(kExitUsage, "Usage", e.what());
    }

    try {
        if (audit_cmd->parsed())
            return run_audit(audit);
        if (simulate_cmd->parsed())
            return run_simulate(simulate);
        if (sweep_cmd->parsed())
            return run_sweep(sweep);
    } catch (const fairaudit::Error& e) {
        fail(exit_code_for(e), e.kind_name(), e.what());
    } catch (const std::exception& e) {
        fail(kExitRuntime, "Internal", e.what());
    }
    return kExitUsage;
}
