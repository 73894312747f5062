#pragma once

#include <cstdint>
#include <vector>

#include "rbds/matrix.hpp"

namespace rbds {

/// Synthetic union-of-subspaces dataset: one random r-dimensional subspace
/// per class, standard-normal coefficients around a class mean, optional
/// additive Gaussian noise, unit-normalized columns, class-sorted labels.
///
/// mean_scale shifts the first subspace coefficient so each class clusters
/// around a nonzero mean direction inside its subspace (image-like data:
/// class mean plus variation). 0 gives the fully centered model.
struct SubspaceSpec {
    int class_count = 5;
    int ambient_dim = 50;
    int subspace_rank = 3;
    int samples_per_class = 20;
    double noise_sigma = 0.0;
    double mean_scale = 3.0;
    std::uint64_t seed = 0;

    void validate() const;
};

LabeledDataset gen_subspaces(const SubspaceSpec& spec);

enum class CorruptionKind { none, pixel_uniform, block_occlusion };

struct CorruptionSpec {
    CorruptionKind kind = CorruptionKind::none;
    double fraction = 0.0;  // pixel fraction, or occluded-area ratio
    int image_h = 0;        // block_occlusion only; image_h * image_w must equal rows
    int image_w = 0;
    std::uint64_t seed = 0;
};

struct PixelCorruption {
    Mat corrupted;
    /// Column-major linear indices (col * rows + row) of the replaced
    /// entries, sorted ascending.
    std::vector<std::size_t> indices;
};

/// Replaces exactly round(fraction * rows * cols) distinct entries, chosen
/// uniformly, with draws uniform on [min(X), max(X)]. Everything else is
/// untouched.
PixelCorruption corrupt_pixels(const Mat& X, const CorruptionSpec& spec);

struct BlockRect {
    Index col;       // which sample
    int row0, col0;  // top-left pixel of the block in the h x w image
    int side;        // square side length (0 = column untouched)
};

struct BlockCorruption {
    Mat corrupted;
    std::vector<BlockRect> rects;  // one per column
};

/// Occludes one square block per column. Each column is viewed as an h x w
/// image in row-major order (pixel (r,c) at row index r*w + c); the block has
/// side round(sqrt(fraction*h*w)) clipped to fit, is placed uniformly at
/// random, and is overwritten with values uniform on [min(X), max(X)].
BlockCorruption corrupt_block(const Mat& X, const CorruptionSpec& spec);

/// Dispatches on spec.kind; none returns X unchanged.
Mat corrupt(const Mat& X, const CorruptionSpec& spec);

} // namespace rbds
