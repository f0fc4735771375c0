#include "fairaudit/measures.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>

#include "fairaudit/error.hpp"

namespace fairaudit {

GroupAssignment::GroupAssignment(std::vector<int> labels) : labels_(std::move(labels)) {
    for (std::size_t i = 0; i < labels_.size(); ++i) {
        if (labels_[i] == 0)
            ++n0_;
        else if (labels_[i] == 1)
            ++n1_;
        else
            throw Error(ErrorKind::InvalidGroupLabel,
                        "label " + std::to_string(labels_[i]) + " at row " +
                            std::to_string(i + 1) + " is not 0 or 1");
    }
}

GroupAssignment GroupAssignment::from_sensitive(const Dataset& d) {
    std::vector<int> labels(d.n());
    for (std::size_t i = 0; i < d.n(); ++i) {
        const double s = d.sensitive()[i];
        if (s == 0.0)
            labels[i] = 0;
        else if (s == 1.0)
            labels[i] = 1;
        else
            throw Error(ErrorKind::InvalidGroupLabel,
                        "sensitive value " + std::to_string(s) + " at row " +
                            std::to_string(i + 1) + " is not binary 0/1");
    }
    return GroupAssignment(std::move(labels));
}

namespace {

void require_both_groups(const GroupAssignment& groups) {
    if (groups.count(0) == 0)
        throw Error(ErrorKind::EmptyGroup, "reference group (label 0) is empty");
    if (groups.count(1) == 0)
        throw Error(ErrorKind::EmptyGroup, "protected group (label 1) is empty");
}

void require_same_length(std::size_t values, const GroupAssignment& groups) {
    if (values != groups.size())
        throw Error(ErrorKind::ArityMismatch,
                    std::to_string(values) + " values vs " +
                        std::to_string(groups.size()) + " group labels");
}

} // namespace

double mean_difference(const std::vector<double>& predictions,
                       const GroupAssignment& groups) {
    require_same_length(predictions.size(), groups);
    require_both_groups(groups);

    double sum0 = 0.0;
    double sum1 = 0.0;
    for (std::size_t i = 0; i < predictions.size(); ++i) {
        if (groups.labels()[i] == 0)
            sum0 += predictions[i];
        else
            sum1 += predictions[i];
    }
    return sum0 / static_cast<double>(groups.count(0)) -
           sum1 / static_cast<double>(groups.count(1));
}

double rank_bias_auc(const std::vector<double>& scores,
                     const GroupAssignment& groups) {
    require_same_length(scores.size(), groups);
    require_both_groups(groups);

    const std::size_t n = scores.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [&scores](std::size_t a, std::size_t b) { return scores[a] < scores[b]; });

    // Twice the rank-sum U statistic, kept integral so ties (half wins)
    // stay exact: each tie block shares rank2 = min 1-based rank + max
    // 1-based rank. U2 = 2*wins + ties over all cross-group pairs.
    std::int64_t rank2_sum_group0 = 0;
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i + 1;
        while (j < n && scores[order[j]] == scores[order[i]])
            ++j;
        const std::int64_t rank2 = static_cast<std::int64_t>(i + 1 + j);
        for (std::size_t t = i; t < j; ++t) {
            if (groups.labels()[order[t]] == 0)
                rank2_sum_group0 += rank2;
        }
        i = j;
    }

    const std::int64_t n0 = static_cast<std::int64_t>(groups.count(0));
    const std::int64_t n1 = static_cast<std::int64_t>(groups.count(1));
    const std::int64_t u2 = rank2_sum_group0 - n0 * (n0 + 1);
    const std::int64_t pairs2 = 2 * n0 * n1;

    // Dividing the smaller of U2 and pairs2-U2 makes swapped group labels
    // return exactly 1 - auc.
    if (u2 <= pairs2 - u2)
        return static_cast<double>(u2) / static_cast<double>(pairs2);
    return 1.0 - static_cast<double>(pairs2 - u2) / static_cast<double>(pairs2);
}

GroupErrorProfile group_error_profile(const std::vector<double>& residuals,
                                      const GroupAssignment& groups) {
    require_same_length(residuals.size(), groups);
    require_both_groups(groups);

    GroupErrorProfile profile;
    profile.reference.count = groups.count(0);
    profile.protected_group.count = groups.count(1);

    for (std::size_t i = 0; i < residuals.size(); ++i) {
        GroupErrorStats& g =
            groups.labels()[i] == 0 ? profile.reference : profile.protected_group;
        g.mean_signed += residuals[i];
        g.mean_squared += residuals[i] * residuals[i];
    }
    profile.reference.mean_signed /= static_cast<double>(profile.reference.count);
    profile.reference.mean_squared /= static_cast<double>(profile.reference.count);
    profile.protected_group.mean_signed /= static_cast<double>(profile.protected_group.count);
    profile.protected_group.mean_squared /= static_cast<double>(profile.protected_group.count);
    return profile;
}

FairnessReport fairness_report(const std::vector<double>& predictions,
                               const std::vector<double>& model_residuals,
                               const GroupAssignment& groups) {
    FairnessReport report;
    report.mean_difference = mean_difference(predictions, groups);
    report.rank_bias_auc = rank_bias_auc(predictions, groups);
    report.group_error_profile = group_error_profile(model_residuals, groups);
    return report;
}

} // namespace fairaudit
