#include "rbds/kernels.hpp"

#include <cmath>

// Reference lane. Compiled with -ffp-contract=off (see src/CMakeLists.txt) so
// the mul+add sequences here are never fused; the SIMD lanes mirror the same
// two-rounding sequences.
namespace rbds::kernels::scalar {

void soft_threshold(const double* x, double* out, std::size_t n, double eps) {
    for (std::size_t i = 0; i < n; ++i) {
        const double v = x[i];
        if (v > eps) {
            out[i] = v - eps;
        } else if (v < -eps) {
            out[i] = v + eps;
        } else {
            out[i] = 0.0;
        }
    }
}

void hadamard(const double* a, const double* b, double* out, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) out[i] = a[i] * b[i];
}

void axpy(double alpha, const double* x, double* y, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) y[i] += alpha * x[i];
}

double max_abs(const double* x, std::size_t n) {
    double m = 0.0;
    for (std::size_t i = 0; i < n; ++i) m = std::max(m, std::fabs(x[i]));
    return m;
}

double max_abs_diff(const double* a, const double* b, std::size_t n) {
    double m = 0.0;
    for (std::size_t i = 0; i < n; ++i) m = std::max(m, std::fabs(a[i] - b[i]));
    return m;
}

double sum_abs(const double* x, std::size_t n) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += std::fabs(x[i]);
    return s;
}

double sum_sq(const double* x, std::size_t n) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += x[i] * x[i];
    return s;
}

double masked_sum_sq(const double* mask, const double* x, std::size_t n) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += mask[i] * (x[i] * x[i]);
    return s;
}

} // namespace rbds::kernels::scalar
