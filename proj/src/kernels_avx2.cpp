#include "rbds/kernels.hpp"

#ifdef RBDS_HAVE_AVX2

#include <cmath>
#include <immintrin.h>

// AVX2 lane. Elementwise ops reproduce the scalar lane bit-for-bit
// (mul and add only, no fma, so each element sees the same rounding
// sequence); sum reductions use four packed accumulators folded once at the
// end, which reassociates the sum.
namespace rbds::kernels::avx2 {

namespace {

inline __m256d abs_pd(__m256d v) {
    return _mm256_andnot_pd(_mm256_set1_pd(-0.0), v);
}

inline double hsum(__m256d v) {
    __m128d lo = _mm256_castpd256_pd128(v);
    const __m128d hi = _mm256_extractf128_pd(v, 1);
    lo = _mm_add_pd(lo, hi);
    const __m128d shuf = _mm_unpackhi_pd(lo, lo);
    return _mm_cvtsd_f64(_mm_add_sd(lo, shuf));
}

inline double hmax(__m256d v) {
    __m128d lo = _mm256_castpd256_pd128(v);
    const __m128d hi = _mm256_extractf128_pd(v, 1);
    lo = _mm_max_pd(lo, hi);
    const __m128d shuf = _mm_unpackhi_pd(lo, lo);
    return _mm_cvtsd_f64(_mm_max_sd(lo, shuf));
}

} // namespace

void soft_threshold(const double* x, double* out, std::size_t n, double eps) {
    const __m256d veps = _mm256_set1_pd(eps);
    const __m256d zero = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d v = _mm256_loadu_pd(x + i);
        // max(x-eps, 0) + min(x+eps, 0) equals the three-branch definition
        const __m256d hi = _mm256_max_pd(_mm256_sub_pd(v, veps), zero);
        const __m256d lo = _mm256_min_pd(_mm256_add_pd(v, veps), zero);
        _mm256_storeu_pd(out + i, _mm256_add_pd(hi, lo));
    }
    for (; i < n; ++i) {
        const double v = x[i];
        out[i] = v > eps ? v - eps : (v < -eps ? v + eps : 0.0);
    }
}

void hadamard(const double* a, const double* b, double* out, std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        _mm256_storeu_pd(out + i, _mm256_mul_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i)));
    }
    for (; i < n; ++i) out[i] = a[i] * b[i];
}

void axpy(double alpha, const double* x, double* y, std::size_t n) {
    const __m256d va = _mm256_set1_pd(alpha);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d prod = _mm256_mul_pd(va, _mm256_loadu_pd(x + i));
        _mm256_storeu_pd(y + i, _mm256_add_pd(_mm256_loadu_pd(y + i), prod));
    }
    for (; i < n; ++i) y[i] += alpha * x[i];
}

double max_abs(const double* x, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        acc = _mm256_max_pd(acc, abs_pd(_mm256_loadu_pd(x + i)));
    }
    double m = hmax(acc);
    for (; i < n; ++i) m = std::max(m, std::fabs(x[i]));
    return m;
}

double max_abs_diff(const double* a, const double* b, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d d = _mm256_sub_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i));
        acc = _mm256_max_pd(acc, abs_pd(d));
    }
    double m = hmax(acc);
    for (; i < n; ++i) m = std::max(m, std::fabs(a[i] - b[i]));
    return m;
}

double sum_abs(const double* x, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        acc = _mm256_add_pd(acc, abs_pd(_mm256_loadu_pd(x + i)));
    }
    double s = hsum(acc);
    for (; i < n; ++i) s += std::fabs(x[i]);
    return s;
}

double sum_sq(const double* x, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d v = _mm256_loadu_pd(x + i);
        acc = _mm256_add_pd(acc, _mm256_mul_pd(v, v));
    }
    double s = hsum(acc);
    for (; i < n; ++i) s += x[i] * x[i];
    return s;
}

double masked_sum_sq(const double* mask, const double* x, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d v = _mm256_loadu_pd(x + i);
        const __m256d m = _mm256_loadu_pd(mask + i);
        acc = _mm256_add_pd(acc, _mm256_mul_pd(m, _mm256_mul_pd(v, v)));
    }
    double s = hsum(acc);
    for (; i < n; ++i) s += mask[i] * (x[i] * x[i]);
    return s;
}

} // namespace rbds::kernels::avx2

#endif // RBDS_HAVE_AVX2
