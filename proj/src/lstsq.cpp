#include "lstsq.hpp"

#include <cmath>
#include <limits>

namespace fairaudit::detail {

LstsqResult solve_least_squares(const Eigen::MatrixXd& design,
                                const Eigen::VectorXd& rhs) {
    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(design);

    const auto cols = design.cols();
    double max_diag = 0.0;
    double min_diag = std::numeric_limits<double>::infinity();
    for (Eigen::Index i = 0; i < cols; ++i) {
        const double r = std::abs(qr.matrixR()(i, i));
        max_diag = std::max(max_diag, r);
        min_diag = std::min(min_diag, r);
    }

    LstsqResult result;
    if (min_diag == 0.0 || max_diag == 0.0)
        result.condition_estimate = std::numeric_limits<double>::infinity();
    else
        result.condition_estimate = max_diag / min_diag;

    // Full pivot threshold off: we report the condition instead of letting
    // the QR truncate small pivots silently.
    qr.setThreshold(std::numeric_limits<double>::min());
    result.solution = qr.solve(rhs);
    return result;
}

} // namespace fairaudit::detail
