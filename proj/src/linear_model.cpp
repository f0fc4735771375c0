#include "fairaudit/linear_model.hpp"

#include <cmath>
#include <string>

#include "fairaudit/error.hpp"
#include "lstsq.hpp"

namespace fairaudit {

LinearModel fit(const Dataset& d, bool include_sensitive) {
    const std::size_t n = d.n();
    const std::size_t k = d.k();
    const std::size_t params = 1 + k + (include_sensitive ? 1 : 0);
    if (n < params)
        throw Error(ErrorKind::Underdetermined,
                    std::to_string(n) + " rows cannot determine " +
                        std::to_string(params) + " parameters");

    Eigen::MatrixXd design(n, params);
    Eigen::VectorXd rhs(n);
    for (std::size_t i = 0; i < n; ++i) {
        design(i, 0) = 1.0;
        for (std::size_t j = 0; j < k; ++j)
            design(i, j + 1) = d.feature(i, j);
        if (include_sensitive)
            design(i, k + 1) = d.sensitive()[i];
        rhs(i) = d.target()[i];
    }

    auto solved = detail::solve_least_squares(design, rhs);
    if (!(solved.condition_estimate <= detail::kConditionLimit))
        throw Error(ErrorKind::RankDeficient,
                    "design matrix condition estimate " +
                        std::to_string(solved.condition_estimate) + " exceeds 1e8");

    LinearModel m;
    m.intercept = solved.solution(0);
    m.coefficients.resize(k);
    for (std::size_t j = 0; j < k; ++j)
        m.coefficients[j] = solved.solution(j + 1);
    if (include_sensitive)
        m.sensitive_coefficient = solved.solution(k + 1);
    m.feature_names = d.feature_names();
    m.trained_on = {n, k, include_sensitive};
    m.condition_estimate = solved.condition_estimate;
    return m;
}

double predict(const LinearModel& m, const std::vector<double>& features,
               std::optional<double> sensitive) {
    if (features.size() != m.coefficients.size())
        throw Error(ErrorKind::ArityMismatch,
                    "model expects " + std::to_string(m.coefficients.size()) +
                        " features, got " + std::to_string(features.size()));
    if (m.includes_sensitive() && !sensitive.has_value())
        throw Error(ErrorKind::SensitiveRequired,
                    "model was fit with the sensitive attribute; a value is required");
    if (!m.includes_sensitive() && sensitive.has_value())
        throw Error(ErrorKind::SensitiveForbidden,
                    "model has no sensitive component; do not pass a value");

    double y = m.intercept;
    for (std::size_t j = 0; j < features.size(); ++j)
        y += m.coefficients[j] * features[j];
    if (m.includes_sensitive())
        y += *m.sensitive_coefficient * *sensitive;
    return y;
}

std::vector<double> residuals(const LinearModel& m, const Dataset& d) {
    if (d.k() != m.coefficients.size())
        throw Error(ErrorKind::ArityMismatch,
                    "model expects " + std::to_string(m.coefficients.size()) +
                        " features, dataset has " + std::to_string(d.k()));

    std::vector<double> r(d.n());
    for (std::size_t i = 0; i < d.n(); ++i) {
        double yhat = m.intercept;
        for (std::size_t j = 0; j < d.k(); ++j)
            yhat += m.coefficients[j] * d.feature(i, j);
        if (m.includes_sensitive())
            yhat += *m.sensitive_coefficient * d.sensitive()[i];
        r[i] = d.target()[i] - yhat;
    }
    return r;
}

} // namespace fairaudit
