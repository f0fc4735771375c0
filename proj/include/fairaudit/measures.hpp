#pragma once

#include <cstddef>
#include <vector>

#include "fairaudit/dataset.hpp"

namespace fairaudit {

/// Binary group labels, one per row: 0 = reference group, 1 = protected
/// group. Construction rejects anything other than 0/1; the comparative
/// metrics additionally require both groups to be non-empty.
class GroupAssignment {
public:
    explicit GroupAssignment(std::vector<int> labels);

    /// Builds labels from a dataset's sensitive column. Every value must be
    /// exactly 0 or 1; numeric sensitive attributes have no canonical
    /// grouping and are rejected with InvalidGroupLabel.
    static GroupAssignment from_sensitive(const Dataset& d);

    const std::vector<int>& labels() const { return labels_; }
    std::size_t size() const { return labels_.size(); }
    std::size_t count(int group) const { return group == 0 ? n0_ : n1_; }

private:
    std::vector<int> labels_;
    std::size_t n0_ = 0;
    std::size_t n1_ = 0;
};

struct GroupErrorStats {
    double mean_signed = 0.0;
    double mean_squared = 0.0;
    std::size_t count = 0;
};

/// Per-group residual profile; a nonzero mean signed residual is the
/// one-directional error signature of a model that systematically over- or
/// under-predicts for one group.
struct GroupErrorProfile {
    GroupErrorStats reference;
    GroupErrorStats protected_group;
};

struct FairnessReport {
    double mean_difference = 0.0;
    double rank_bias_auc = 0.5;
    GroupErrorProfile group_error_profile;
};

/// Mean prediction of the reference group minus mean of the protected
/// group; positive values favor the reference group.
double mean_difference(const std::vector<double>& predictions,
                       const GroupAssignment& groups);

/// Probability that a uniformly random reference-group member outscores a
/// uniformly random protected-group member, ties counting one half.
/// 0.5 = unbiased ranking, 1.0 = every reference member ranked above every
/// protected member. Computed in O(n log n) by rank summation; equal to the
/// all-pairs definition.
double rank_bias_auc(const std::vector<double>& scores,
                     const GroupAssignment& groups);

GroupErrorProfile group_error_profile(const std::vector<double>& residuals,
                                      const GroupAssignment& groups);

FairnessReport fairness_report(const std::vector<double>& predictions,
                               const std::vector<double>& model_residuals,
                               const GroupAssignment& groups);

} // namespace fairaudit
