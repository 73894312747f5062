#pragma once

#include "rbds/matrix.hpp"

namespace rbds {

/// Scalar shrinkage: x-eps for x>eps, x+eps for x<-eps, 0 otherwise.
/// This is the exact minimizer of eps*|v| + (1/2)(v-x)^2. eps must be >= 0.
double soft_threshold(double x, double eps);

/// Elementwise shrinkage over a matrix; output has the input's shape.
Mat soft_threshold(const Mat& x, double eps);

/// Singular value thresholding: U S_tau[Sigma] V^T for the thin SVD of y,
/// the exact minimizer of tau*||J||_* + (1/2)||J - y||_F^2.
///
/// Singular values within 1e-12 of tau are shrunk to zero (ties break toward
/// lower rank). If rank_out is non-null it receives the number of singular
/// values kept. Throws NumericError on non-finite input.
Mat svt(const Mat& y, double tau, Index* rank_out = nullptr);

/// Sum of singular values.
double nuclear_norm(const Mat& m);

} // namespace rbds
