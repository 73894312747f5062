#include "rbds/prox.hpp"

#include <Eigen/SVD>
#include <cmath>

#include "rbds/kernels.hpp"

namespace rbds {

namespace {

void check_eps(double eps) {
    if (!(eps >= 0.0) || !std::isfinite(eps)) {
        throw ValidationError("soft_threshold: threshold must be finite and >= 0, got " +
                              std::to_string(eps));
    }
}

// Shrunk singular values land at exact zero below this margin around tau.
constexpr double kSvBoundary = 1e-12;

} // namespace

double soft_threshold(double x, double eps) {
    check_eps(eps);
    if (x > eps) return x - eps;
    if (x < -eps) return x + eps;
    return 0.0;
}

Mat soft_threshold(const Mat& x, double eps) {
    check_eps(eps);
    Mat out(x.rows(), x.cols());
    kernels::soft_threshold(x.data(), out.data(), static_cast<std::size_t>(x.size()), eps);
    return out;
}

Mat svt(const Mat& y, double tau, Index* rank_out) {
    if (!(tau >= 0.0) || !std::isfinite(tau)) {
        throw ValidationError("svt: threshold must be finite and >= 0, got " + std::to_string(tau));
    }
    if (!y.allFinite()) throw NumericError("svt: input contains a non-finite value");

    Eigen::JacobiSVD<Mat> svd(y, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const Vec& sv = svd.singularValues();

    // singular values come back non-increasing, so the kept set is a prefix
    Index rank = 0;
    while (rank < sv.size() && sv(rank) > tau + kSvBoundary) ++rank;
    if (rank_out) *rank_out = rank;

    if (rank == 0) return Mat::Zero(y.rows(), y.cols());
    const Vec shrunk = sv.head(rank).array() - tau;
    return svd.matrixU().leftCols(rank) * shrunk.asDiagonal() *
           svd.matrixV().leftCols(rank).transpose();
}

double nuclear_norm(const Mat& m) {
    if (!m.allFinite()) throw NumericError("nuclear_norm: input contains a non-finite value");
    Eigen::JacobiSVD<Mat> svd(m);
    return svd.singularValues().sum();
}

} // namespace rbds
