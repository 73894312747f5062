#include "rbds/datagen.hpp"

#include <Eigen/QR>
#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "rbds/rng.hpp"

namespace rbds {

void SubspaceSpec::validate() const {
    if (class_count < 1 || ambient_dim < 1 || subspace_rank < 1 || samples_per_class < 1) {
        throw ConfigError("SubspaceSpec: all counts must be >= 1");
    }
    if (subspace_rank > ambient_dim) {
        throw ConfigError("SubspaceSpec: subspace_rank " + std::to_string(subspace_rank) +
                          " exceeds ambient_dim " + std::to_string(ambient_dim));
    }
    if (!(noise_sigma >= 0.0) || !std::isfinite(noise_sigma)) {
        throw ConfigError("SubspaceSpec: noise_sigma must be finite and >= 0");
    }
    if (!(mean_scale >= 0.0) || !std::isfinite(mean_scale)) {
        throw ConfigError("SubspaceSpec: mean_scale must be finite and >= 0");
    }
}

LabeledDataset gen_subspaces(const SubspaceSpec& spec) {
    spec.validate();
    SplitMix64 rng(spec.seed);

    const Index d = spec.ambient_dim;
    const Index r = spec.subspace_rank;
    const Index per = spec.samples_per_class;
    const Index n = per * spec.class_count;

    Mat data(d, n);
    std::vector<int> labels(static_cast<std::size_t>(n));

    for (int c = 0; c < spec.class_count; ++c) {
        Mat g(d, r);
        for (Index j = 0; j < r; ++j)
            for (Index i = 0; i < d; ++i) g(i, j) = rng.next_normal();
        const Mat basis = Eigen::HouseholderQR<Mat>(g).householderQ() * Mat::Identity(d, r);

        Mat coeffs(r, per);
        for (Index j = 0; j < per; ++j)
            for (Index i = 0; i < r; ++i) coeffs(i, j) = rng.next_normal();
        coeffs.row(0).array() += spec.mean_scale;

        Mat block = basis * coeffs;
        if (spec.noise_sigma > 0.0) {
            for (Index j = 0; j < per; ++j)
                for (Index i = 0; i < d; ++i) block(i, j) += spec.noise_sigma * rng.next_normal();
        }
        data.middleCols(c * per, per) = block;
        for (Index j = 0; j < per; ++j) labels[static_cast<std::size_t>(c * per + j)] = c + 1;
    }

    normalize_columns_inplace(data);
    return LabeledDataset(std::move(data), std::move(labels));
}

namespace {

void check_fraction(double fraction) {
    if (!(fraction >= 0.0 && fraction <= 1.0)) {
        throw ValidationError("corruption fraction must lie in [0,1], got " +
                              std::to_string(fraction));
    }
}

} // namespace

PixelCorruption corrupt_pixels(const Mat& X, const CorruptionSpec& spec) {
    if (spec.kind != CorruptionKind::pixel_uniform) {
        throw ConfigError("corrupt_pixels: spec.kind must be pixel_uniform");
    }
    check_fraction(spec.fraction);
    validate_matrix(X, "corrupt_pixels: X");

    const std::size_t total = static_cast<std::size_t>(X.size());
    const std::size_t k = static_cast<std::size_t>(std::llround(spec.fraction * static_cast<double>(total)));

    PixelCorruption out;
    out.corrupted = X;
    if (k == 0) return out;

    SplitMix64 rng(spec.seed);
    std::vector<std::size_t> all(total);
    std::iota(all.begin(), all.end(), std::size_t{0});
    for (std::size_t i = 0; i < k; ++i) {
        const std::size_t j = i + static_cast<std::size_t>(rng.next_below(total - i));
        std::swap(all[i], all[j]);
    }
    out.indices.assign(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(k));
    std::sort(out.indices.begin(), out.indices.end());

    const double lo = X.minCoeff();
    const double hi = X.maxCoeff();
    double* values = out.corrupted.data();
    for (std::size_t idx : out.indices) values[idx] = rng.next_uniform(lo, hi);
    return out;
}

BlockCorruption corrupt_block(const Mat& X, const CorruptionSpec& spec) {
    if (spec.kind != CorruptionKind::block_occlusion) {
        throw ConfigError("corrupt_block: spec.kind must be block_occlusion");
    }
    check_fraction(spec.fraction);
    validate_matrix(X, "corrupt_block: X");
    const int h = spec.image_h;
    const int w = spec.image_w;
    if (h < 1 || w < 1 || static_cast<Index>(h) * w != X.rows()) {
        throw ValidationError("corrupt_block: image shape " + std::to_string(h) + "x" +
                              std::to_string(w) + " does not match " + std::to_string(X.rows()) +
                              " rows");
    }

    int side = static_cast<int>(std::llround(std::sqrt(spec.fraction * h * w)));
    side = std::min(side, std::min(h, w));

    BlockCorruption out;
    out.corrupted = X;
    out.rects.reserve(static_cast<std::size_t>(X.cols()));

    SplitMix64 rng(spec.seed);
    const double lo = X.minCoeff();
    const double hi = X.maxCoeff();

    for (Index j = 0; j < X.cols(); ++j) {
        BlockRect rect{j, 0, 0, side};
        if (side > 0) {
            rect.row0 = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(h - side + 1)));
            rect.col0 = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(w - side + 1)));
            for (int r = rect.row0; r < rect.row0 + side; ++r) {
                for (int c = rect.col0; c < rect.col0 + side; ++c) {
                    out.corrupted(static_cast<Index>(r) * w + c, j) = rng.next_uniform(lo, hi);
                }
            }
        }
        out.rects.push_back(rect);
    }
    return out;
}

Mat corrupt(const Mat& X, const CorruptionSpec& spec) {
    switch (spec.kind) {
        case CorruptionKind::none: return X;
        case CorruptionKind::pixel_uniform: return corrupt_pixels(X, spec).corrupted;
        case CorruptionKind::block_occlusion: return corrupt_block(X, spec).corrupted;
    }
    throw ConfigError("corrupt: unknown corruption kind");
}

} // namespace rbds
