#include "fairaudit/dataset.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "fairaudit/error.hpp"

namespace fairaudit {

const char* to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::MissingColumn: return "MissingColumn";
        case ErrorKind::NonNumericCell: return "NonNumericCell";
        case ErrorKind::EmptyDataset: return "EmptyDataset";
        case ErrorKind::DuplicateRole: return "DuplicateRole";
        case ErrorKind::InvalidDataset: return "InvalidDataset";
        case ErrorKind::RankDeficient: return "RankDeficient";
        case ErrorKind::Underdetermined: return "Underdetermined";
        case ErrorKind::ArityMismatch: return "ArityMismatch";
        case ErrorKind::SensitiveRequired: return "SensitiveRequired";
        case ErrorKind::SensitiveForbidden: return "SensitiveForbidden";
        case ErrorKind::ZeroVariance: return "ZeroVariance";
        case ErrorKind::NotFullModel: return "NotFullModel";
        case ErrorKind::EmptyGroup: return "EmptyGroup";
        case ErrorKind::InvalidGroupLabel: return "InvalidGroupLabel";
        case ErrorKind::InvalidSpec: return "InvalidSpec";
        case ErrorKind::InvalidLambdas: return "InvalidLambdas";
        case ErrorKind::IoError: return "IoError";
    }
    return "Unknown";
}

std::string format_double(double value) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", value);
    return buf;
}

namespace {

void check_name(const std::string& name) {
    if (name.empty())
        throw Error(ErrorKind::InvalidDataset, "column name must not be empty");
    if (name.find_first_of(",\r\n") != std::string::npos)
        throw Error(ErrorKind::InvalidDataset,
                    "column name '" + name + "' contains a separator character");
}

void check_finite(const std::vector<double>& values, const std::string& column) {
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (!std::isfinite(values[i]))
            throw Error(ErrorKind::InvalidDataset,
                        "non-finite value in column '" + column + "' at row " +
                            std::to_string(i + 1));
    }
}

} // namespace

Dataset::Dataset(std::vector<double> features_row_major,
                 std::vector<double> sensitive,
                 std::vector<double> target,
                 std::vector<std::string> feature_names,
                 std::string sensitive_name,
                 std::string target_name,
                 bool sensitive_hidden)
    : features_(std::move(features_row_major)),
      sensitive_(std::move(sensitive)),
      target_(std::move(target)),
      feature_names_(std::move(feature_names)),
      sensitive_name_(std::move(sensitive_name)),
      target_name_(std::move(target_name)),
      sensitive_hidden_(sensitive_hidden) {
    const std::size_t rows = target_.size();
    const std::size_t cols = feature_names_.size();
    if (rows == 0)
        throw Error(ErrorKind::EmptyDataset, "dataset has no rows");
    if (cols == 0)
        throw Error(ErrorKind::InvalidDataset, "dataset has no feature columns");
    if (sensitive_.size() != rows)
        throw Error(ErrorKind::InvalidDataset,
                    "sensitive column has " + std::to_string(sensitive_.size()) +
                        " rows, target has " + std::to_string(rows));
    if (features_.size() != rows * cols)
        throw Error(ErrorKind::InvalidDataset,
                    "feature matrix size does not match n*k");

    check_name(sensitive_name_);
    check_name(target_name_);
    std::set<std::string> seen;
    for (const auto& name : feature_names_) {
        check_name(name);
        if (!seen.insert(name).second)
            throw Error(ErrorKind::InvalidDataset,
                        "duplicate feature name '" + name + "'");
        if (name == sensitive_name_ || name == target_name_)
            throw Error(ErrorKind::InvalidDataset,
                        "feature name '" + name + "' collides with a role column");
    }
    if (sensitive_name_ == target_name_)
        throw Error(ErrorKind::InvalidDataset,
                    "sensitive and target columns share the name '" + sensitive_name_ + "'");

    for (std::size_t j = 0; j < cols; ++j) {
        for (std::size_t i = 0; i < rows; ++i) {
            if (!std::isfinite(feature(i, j)))
                throw Error(ErrorKind::InvalidDataset,
                            "non-finite value in column '" + feature_names_[j] +
                                "' at row " + std::to_string(i + 1));
        }
    }
    check_finite(sensitive_, sensitive_name_);
    check_finite(target_, target_name_);
}

std::vector<double> Dataset::feature_row(std::size_t row) const {
    return {features_.begin() + static_cast<std::ptrdiff_t>(row * k()),
            features_.begin() + static_cast<std::ptrdiff_t>((row + 1) * k())};
}

namespace {

std::vector<std::string> split_line(const std::string& line) {
    std::vector<std::string> cells;
    std::string cell;
    std::stringstream ss(line);
    while (std::getline(ss, cell, ','))
        cells.push_back(cell);
    if (!line.empty() && line.back() == ',')
        cells.emplace_back();
    return cells;
}

std::string trim(const std::string& s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos)
        return "";
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

double parse_cell(const std::string& raw, std::size_t row, const std::string& column) {
    const std::string cell = trim(raw);
    double value = 0.0;
    const char* begin = cell.data();
    const char* end = begin + cell.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr != end || cell.empty() || !std::isfinite(value))
        throw Error(ErrorKind::NonNumericCell,
                    "cell '" + cell + "' at row " + std::to_string(row) +
                        ", column '" + column + "' is not a finite number");
    return value;
}

std::size_t find_column(const std::vector<std::string>& header, const std::string& name) {
    std::size_t found = header.size();
    for (std::size_t i = 0; i < header.size(); ++i) {
        if (header[i] == name) {
            if (found != header.size())
                throw Error(ErrorKind::DuplicateRole,
                            "column '" + name + "' appears more than once in the header");
            found = i;
        }
    }
    if (found == header.size())
        throw Error(ErrorKind::MissingColumn, "column '" + name + "' not found");
    return found;
}

} // namespace

Dataset load_csv(const std::string& path, const ColumnRoles& roles) {
    std::ifstream in(path);
    if (!in)
        throw Error(ErrorKind::IoError, "cannot open '" + path + "'");

    std::string line;
    if (!std::getline(in, line))
        throw Error(ErrorKind::EmptyDataset, "'" + path + "' is empty");

    std::vector<std::string> header = split_line(line);
    for (auto& h : header)
        h = trim(h);

    if (roles.target == roles.sensitive)
        throw Error(ErrorKind::DuplicateRole,
                    "target and sensitive both map to '" + roles.target + "'");
    for (const auto& f : roles.features) {
        if (f == roles.target || f == roles.sensitive)
            throw Error(ErrorKind::DuplicateRole,
                        "feature list names the role column '" + f + "'");
    }
    {
        std::set<std::string> unique(roles.features.begin(), roles.features.end());
        if (unique.size() != roles.features.size())
            throw Error(ErrorKind::DuplicateRole, "feature list contains a duplicate name");
    }

    const std::size_t target_col = find_column(header, roles.target);
    const std::size_t sensitive_col = find_column(header, roles.sensitive);

    std::vector<std::size_t> feature_cols;
    std::vector<std::string> feature_names;
    if (roles.features.empty()) {
        for (std::size_t i = 0; i < header.size(); ++i) {
            if (i != target_col && i != sensitive_col) {
                feature_cols.push_back(i);
                feature_names.push_back(header[i]);
            }
        }
        if (feature_cols.empty())
            throw Error(ErrorKind::MissingColumn,
                        "no feature columns remain after assigning roles");
    } else {
        for (const auto& name : roles.features) {
            feature_cols.push_back(find_column(header, name));
            feature_names.push_back(name);
        }
    }

    std::vector<double> features;
    std::vector<double> sensitive;
    std::vector<double> target;
    std::size_t row = 0;
    while (std::getline(in, line)) {
        if (trim(line).empty())
            continue;
        ++row;
        std::vector<std::string> cells = split_line(line);
        if (cells.size() != header.size())
            throw Error(ErrorKind::NonNumericCell,
                        "row " + std::to_string(row) + " has " +
                            std::to_string(cells.size()) + " cells, header has " +
                            std::to_string(header.size()));
        for (std::size_t j = 0; j < feature_cols.size(); ++j)
            features.push_back(parse_cell(cells[feature_cols[j]], row, feature_names[j]));
        sensitive.push_back(parse_cell(cells[sensitive_col], row, roles.sensitive));
        target.push_back(parse_cell(cells[target_col], row, roles.target));
    }
    if (row == 0)
        throw Error(ErrorKind::EmptyDataset, "'" + path + "' has a header but no data rows");

    return Dataset(std::move(features), std::move(sensitive), std::move(target),
                   std::move(feature_names), roles.sensitive, roles.target);
}

std::string to_csv(const Dataset& d) {
    std::string out;
    for (std::size_t j = 0; j < d.k(); ++j) {
        out += d.feature_names()[j];
        out += ',';
    }
    if (!d.sensitive_hidden()) {
        out += d.sensitive_name();
        out += ',';
    }
    out += d.target_name();
    out += '\n';

    for (std::size_t i = 0; i < d.n(); ++i) {
        for (std::size_t j = 0; j < d.k(); ++j) {
            out += format_double(d.feature(i, j));
            out += ',';
        }
        if (!d.sensitive_hidden()) {
            out += format_double(d.sensitive()[i]);
            out += ',';
        }
        out += format_double(d.target()[i]);
        out += '\n';
    }
    return out;
}

void write_csv(const Dataset& d, const std::string& path) {
    const std::string body = to_csv(d);
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out)
            throw Error(ErrorKind::IoError, "cannot write '" + tmp + "'");
        out << body;
        if (!out)
            throw Error(ErrorKind::IoError, "short write to '" + tmp + "'");
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::filesystem::remove(tmp);
        throw Error(ErrorKind::IoError, "cannot move output into '" + path + "'");
    }
}

namespace {

// Neumaier-compensated accumulator; keeps the moments stable under row
// permutation to well below the 1e-12 contract.
struct CompensatedSum {
    double sum = 0.0;
    double compensation = 0.0;

    void add(double value) {
        const double t = sum + value;
        if (std::abs(sum) >= std::abs(value))
            compensation += (sum - t) + value;
        else
            compensation += (value - t) + sum;
        sum = t;
    }
    double result() const { return sum + compensation; }
};

} // namespace

SummaryStats summarize(const Dataset& d) {
    const std::size_t n = d.n();
    const std::size_t k = d.k();
    const double inv_n = 1.0 / static_cast<double>(n);

    SummaryStats stats;
    stats.n = n;
    stats.feature_means.assign(k, 0.0);
    stats.feature_variances.assign(k, 0.0);
    stats.cov_feature_sensitive.assign(k, 0.0);

    CompensatedSum s_mean;
    for (std::size_t i = 0; i < n; ++i)
        s_mean.add(d.sensitive()[i]);
    stats.sensitive_mean = s_mean.result() * inv_n;

    CompensatedSum s_var;
    for (std::size_t i = 0; i < n; ++i) {
        const double ds = d.sensitive()[i] - stats.sensitive_mean;
        s_var.add(ds * ds);
    }
    stats.sensitive_variance = s_var.result() * inv_n;

    for (std::size_t j = 0; j < k; ++j) {
        CompensatedSum x_mean;
        for (std::size_t i = 0; i < n; ++i)
            x_mean.add(d.feature(i, j));
        const double mean = x_mean.result() * inv_n;

        CompensatedSum var;
        CompensatedSum cov;
        for (std::size_t i = 0; i < n; ++i) {
            const double dx = d.feature(i, j) - mean;
            var.add(dx * dx);
            cov.add(dx * (d.sensitive()[i] - stats.sensitive_mean));
        }
        stats.feature_means[j] = mean;
        stats.feature_variances[j] = var.result() * inv_n;
        stats.cov_feature_sensitive[j] = cov.result() * inv_n;
    }
    return stats;
}

} // namespace fairaudit
