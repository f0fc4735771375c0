#pragma once

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "fairaudit/dataset.hpp"

namespace helpers {

/// Builds a dataset from per-row feature vectors.
inline fairaudit::Dataset make_dataset(const std::vector<std::vector<double>>& rows,
                                       std::vector<double> sensitive,
                                       std::vector<double> target,
                                       std::vector<std::string> feature_names = {}) {
    std::vector<double> flat;
    for (const auto& row : rows)
        flat.insert(flat.end(), row.begin(), row.end());
    if (feature_names.empty()) {
        for (std::size_t j = 0; j < rows.front().size(); ++j)
            feature_names.push_back("x" + std::to_string(j + 1));
    }
    return fairaudit::Dataset(std::move(flat), std::move(sensitive), std::move(target),
                              std::move(feature_names), "s", "y");
}

/// Unique scratch directory for a test; removed on destruction.
class TempDir {
public:
    explicit TempDir(const std::string& tag) {
        static int counter = 0;
        path_ = std::filesystem::temp_directory_path() /
                ("fairaudit_" + tag + "_" + std::to_string(++counter) + "_" +
                 std::to_string(static_cast<long>(::getpid())));
        std::filesystem::create_directories(path_);
    }
    ~TempDir() {
        std::error_code ec;
        std::filesystem::remove_all(path_, ec);
    }
    TempDir(const TempDir&) = delete;
    TempDir& operator=(const TempDir&) = delete;

    std::string file(const std::string& name) const { return (path_ / name).string(); }
    const std::filesystem::path& path() const { return path_; }

private:
    std::filesystem::path path_;
};

inline void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    out << content;
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace helpers
