#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace fairaudit {

/// Immutable tabular sample: n rows, each with k feature values, one
/// sensitive-attribute value and one target value. Construction validates
/// shape agreement, finiteness of every cell and column-name uniqueness;
/// after that the object never changes, so it is safe to share across
/// threads.
///
/// Binary sensitive attributes are coded {0,1} with 0 = reference group;
/// numeric sensitive attributes (e.g. age) are carried as-is.
class Dataset {
public:
    Dataset(std::vector<double> features_row_major,
            std::vector<double> sensitive,
            std::vector<double> target,
            std::vector<std::string> feature_names,
            std::string sensitive_name,
            std::string target_name,
            bool sensitive_hidden = false);

    std::size_t n() const { return target_.size(); }
    std::size_t k() const { return feature_names_.size(); }

    double feature(std::size_t row, std::size_t col) const {
        return features_[row * k() + col];
    }
    std::vector<double> feature_row(std::size_t row) const;

    const std::vector<double>& features() const { return features_; } // row-major n*k
    const std::vector<double>& sensitive() const { return sensitive_; }
    const std::vector<double>& target() const { return target_; }
    const std::vector<std::string>& feature_names() const { return feature_names_; }
    const std::string& sensitive_name() const { return sensitive_name_; }
    const std::string& target_name() const { return target_name_; }

    /// True when the sensitive column exists in memory but must not be
    /// exported (the omitted-at-export data pathology). CSV output drops
    /// the column; in-memory analytics still see the true values.
    bool sensitive_hidden() const { return sensitive_hidden_; }

private:
    std::vector<double> features_;
    std::vector<double> sensitive_;
    std::vector<double> target_;
    std::vector<std::string> feature_names_;
    std::string sensitive_name_;
    std::string target_name_;
    bool sensitive_hidden_;
};

/// Population-convention moments (divide by n) of the features and the
/// sensitive attribute. Deterministic and independent of row order.
struct SummaryStats {
    std::size_t n = 0;
    std::vector<double> feature_means;
    double sensitive_mean = 0.0;
    std::vector<double> feature_variances;
    double sensitive_variance = 0.0;
    std::vector<double> cov_feature_sensitive;
};

/// Column-to-role mapping for CSV ingestion. An empty feature list means
/// "all remaining columns".
struct ColumnRoles {
    std::string target;
    std::string sensitive;
    std::vector<std::string> features;
};

/// Reads a comma-separated file (header row, '.' decimal separator, no
/// quoting) and maps columns onto roles. Rows keep file order.
Dataset load_csv(const std::string& path, const ColumnRoles& roles);

/// CSV text for the dataset: feature columns, then the sensitive column
/// (unless hidden), then the target. Floats are printed with 17 significant
/// digits so output is byte-stable and round-trips exactly.
std::string to_csv(const Dataset& d);
void write_csv(const Dataset& d, const std::string& path);

SummaryStats summarize(const Dataset& d);

/// 17-significant-digit text for a double; shared by CSV and canonical JSON.
std::string format_double(double value);

} // namespace fairaudit
