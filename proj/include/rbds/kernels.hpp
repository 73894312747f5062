#pragma once

#include <cstddef>

// Elementwise arithmetic kernels used by the prox operators, the mask module
// and the ALM iteration. Every operation has a scalar reference
// implementation (namespace kernels::scalar) and, on x86-64 hardware with
// AVX2, a vectorized variant selected once at startup. The dispatched entry
// points below are the only ones the rest of the library calls.
//
// Determinism contract: for a fixed input and a fixed machine the dispatched
// result is bit-stable across runs and across thread counts. Sum reductions
// are accumulated over fixed-size chunks combined in chunk order, so enabling
// threads never changes the rounding. The scalar and SIMD lanes agree exactly
// on elementwise ops and max-reductions and to ~1 ulp-per-element on sums
// (different association); the equivalence tests pin both statements.
namespace rbds::kernels {

enum class Lane { scalar, avx2 };

/// Lane chosen at startup for the current CPU.
Lane active_lane();
const char* lane_name(Lane lane);

/// Caps the number of worker threads kernels may use. 0 restores the default
/// (hardware concurrency). Serial and threaded results are identical.
void set_max_threads(unsigned n);
unsigned max_threads();

/// Reads the RBDS_THREADS environment variable (0 = auto) if set.
void configure_threads_from_env();

/// out[i] = x[i]-eps if x[i]>eps, x[i]+eps if x[i]<-eps, else 0.
void soft_threshold(const double* x, double* out, std::size_t n, double eps);

/// out[i] = a[i]*b[i]
void hadamard(const double* a, const double* b, double* out, std::size_t n);

/// y[i] += alpha*x[i]
void axpy(double alpha, const double* x, double* y, std::size_t n);

/// max_i |x[i]|; 0 for n == 0.
double max_abs(const double* x, std::size_t n);

/// max_i |a[i]-b[i]|; 0 for n == 0.
double max_abs_diff(const double* a, const double* b, std::size_t n);

/// sum_i |x[i]|
double sum_abs(const double* x, std::size_t n);

/// sum_i x[i]^2
double sum_sq(const double* x, std::size_t n);

/// sum_i mask[i]*x[i]^2
double masked_sum_sq(const double* mask, const double* x, std::size_t n);

/// Scalar reference lane. Tests compare the dispatched results against these.
namespace scalar {
void soft_threshold(const double* x, double* out, std::size_t n, double eps);
void hadamard(const double* a, const double* b, double* out, std::size_t n);
void axpy(double alpha, const double* x, double* y, std::size_t n);
double max_abs(const double* x, std::size_t n);
double max_abs_diff(const double* a, const double* b, std::size_t n);
double sum_abs(const double* x, std::size_t n);
double sum_sq(const double* x, std::size_t n);
double masked_sum_sq(const double* mask, const double* x, std::size_t n);
} // namespace scalar

#ifdef RBDS_HAVE_AVX2
namespace avx2 {
void soft_threshold(const double* x, double* out, std::size_t n, double eps);
void hadamard(const double* a, const double* b, double* out, std::size_t n);
void axpy(double alpha, const double* x, double* y, std::size_t n);
double max_abs(const double* x, std::size_t n);
double max_abs_diff(const double* a, const double* b, std::size_t n);
double sum_abs(const double* x, std::size_t n);
double sum_sq(const double* x, std::size_t n);
double masked_sum_sq(const double* mask, const double* x, std::size_t n);
} // namespace avx2
#endif

} // namespace rbds::kernels
