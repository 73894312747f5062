#include "rbds/kernels.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace rbds::kernels {

namespace {

struct Ops {
    void (*soft_threshold)(const double*, double*, std::size_t, double);
    void (*hadamard)(const double*, const double*, double*, std::size_t);
    void (*axpy)(double, const double*, double*, std::size_t);
    double (*max_abs)(const double*, std::size_t);
    double (*max_abs_diff)(const double*, const double*, std::size_t);
    double (*sum_abs)(const double*, std::size_t);
    double (*sum_sq)(const double*, std::size_t);
    double (*masked_sum_sq)(const double*, const double*, std::size_t);
    Lane lane;
};

constexpr Ops kScalarOps = {
    scalar::soft_threshold, scalar::hadamard, scalar::axpy,      scalar::max_abs,
    scalar::max_abs_diff,   scalar::sum_abs,  scalar::sum_sq,    scalar::masked_sum_sq,
    Lane::scalar,
};

#ifdef RBDS_HAVE_AVX2
constexpr Ops kAvx2Ops = {
    avx2::soft_threshold, avx2::hadamard, avx2::axpy,   avx2::max_abs,
    avx2::max_abs_diff,   avx2::sum_abs,  avx2::sum_sq, avx2::masked_sum_sq,
    Lane::avx2,
};
#endif

const Ops& ops() {
    static const Ops selected = [] {
#ifdef RBDS_HAVE_AVX2
        if (__builtin_cpu_supports("avx2")) return kAvx2Ops;
#endif
        return kScalarOps;
    }();
    return selected;
}

std::atomic<unsigned> g_max_threads{0};

unsigned resolved_threads() {
    unsigned n = g_max_threads.load(std::memory_order_relaxed);
    if (n == 0) n = std::thread::hardware_concurrency();
    return std::max(1u, n);
}

// Fixed reduction granule: sums are accumulated per chunk and combined in
// chunk order, so the result does not depend on the thread count. Multiple of
// the SIMD width, so chunking never introduces mid-array scalar tails.
constexpr std::size_t kChunk = std::size_t{1} << 14;
// Arrays smaller than this are not worth spawning threads for.
constexpr std::size_t kParallelMin = std::size_t{1} << 16;

template <class F>
void for_chunks(std::size_t nchunks, unsigned threads, F&& f) {
    if (threads <= 1 || nchunks <= 1) {
        for (std::size_t i = 0; i < nchunks; ++i) f(i);
        return;
    }
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, nchunks));
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1, std::memory_order_relaxed);
            if (i >= nchunks) break;
            f(i);
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(threads - 1);
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();
}

std::size_t chunk_count(std::size_t n) { return (n + kChunk - 1) / kChunk; }

std::size_t chunk_len(std::size_t n, std::size_t i) {
    const std::size_t begin = i * kChunk;
    return std::min(kChunk, n - begin);
}

template <class PerChunk>
double reduce_sum(std::size_t n, PerChunk chunk_value) {
    if (n == 0) return 0.0;
    const std::size_t nchunks = chunk_count(n);
    const unsigned threads = n >= kParallelMin ? resolved_threads() : 1;
    if (threads <= 1) {
        double acc = 0.0;
        for (std::size_t i = 0; i < nchunks; ++i) acc += chunk_value(i);
        return acc;
    }
    std::vector<double> partial(nchunks);
    for_chunks(nchunks, threads, [&](std::size_t i) { partial[i] = chunk_value(i); });
    double acc = 0.0;
    for (double p : partial) acc += p;
    return acc;
}

template <class PerChunk>
double reduce_max(std::size_t n, PerChunk chunk_value) {
    if (n == 0) return 0.0;
    const std::size_t nchunks = chunk_count(n);
    const unsigned threads = n >= kParallelMin ? resolved_threads() : 1;
    if (threads <= 1) {
        double m = 0.0;
        for (std::size_t i = 0; i < nchunks; ++i) m = std::max(m, chunk_value(i));
        return m;
    }
    std::vector<double> partial(nchunks);
    for_chunks(nchunks, threads, [&](std::size_t i) { partial[i] = chunk_value(i); });
    double m = 0.0;
    for (double p : partial) m = std::max(m, p);
    return m;
}

template <class PerRange>
void map_ranges(std::size_t n, PerRange apply) {
    const unsigned threads = n >= kParallelMin ? resolved_threads() : 1;
    if (threads <= 1) {
        apply(std::size_t{0}, n);
        return;
    }
    const std::size_t nchunks = chunk_count(n);
    for_chunks(nchunks, threads, [&](std::size_t i) {
        apply(i * kChunk, chunk_len(n, i));
    });
}

} // namespace

Lane active_lane() { return ops().lane; }

const char* lane_name(Lane lane) {
    switch (lane) {
        case Lane::avx2: return "avx2";
        case Lane::scalar: return "scalar";
    }
    return "?";
}

void set_max_threads(unsigned n) { g_max_threads.store(n, std::memory_order_relaxed); }

unsigned max_threads() { return resolved_threads(); }

void configure_threads_from_env() {
    if (const char* env = std::getenv("RBDS_THREADS")) {
        set_max_threads(static_cast<unsigned>(std::strtoul(env, nullptr, 10)));
    }
}

void soft_threshold(const double* x, double* out, std::size_t n, double eps) {
    map_ranges(n, [&](std::size_t b, std::size_t len) { ops().soft_threshold(x + b, out + b, len, eps); });
}

void hadamard(const double* a, const double* b, double* out, std::size_t n) {
    map_ranges(n, [&](std::size_t off, std::size_t len) { ops().hadamard(a + off, b + off, out + off, len); });
}

void axpy(double alpha, const double* x, double* y, std::size_t n) {
    map_ranges(n, [&](std::size_t b, std::size_t len) { ops().axpy(alpha, x + b, y + b, len); });
}

double max_abs(const double* x, std::size_t n) {
    return reduce_max(n, [&](std::size_t i) { return ops().max_abs(x + i * kChunk, chunk_len(n, i)); });
}

double max_abs_diff(const double* a, const double* b, std::size_t n) {
    return reduce_max(n, [&](std::size_t i) {
        return ops().max_abs_diff(a + i * kChunk, b + i * kChunk, chunk_len(n, i));
    });
}

double sum_abs(const double* x, std::size_t n) {
    return reduce_sum(n, [&](std::size_t i) { return ops().sum_abs(x + i * kChunk, chunk_len(n, i)); });
}

double sum_sq(const double* x, std::size_t n) {
    return reduce_sum(n, [&](std::size_t i) { return ops().sum_sq(x + i * kChunk, chunk_len(n, i)); });
}

double masked_sum_sq(const double* mask, const double* x, std::size_t n) {
    return reduce_sum(n, [&](std::size_t i) {
        return ops().masked_sum_sq(mask + i * kChunk, x + i * kChunk, chunk_len(n, i));
    });
}

} // namespace rbds::kernels
