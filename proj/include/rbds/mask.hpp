#pragma once

#include <vector>

#include "rbds/matrix.hpp"

namespace rbds {

/// Binary atom-by-sample incoherence mask: A(i,j) = 0 when atom i and sample
/// j share a class, 1 otherwise. With atoms and samples ordered class by
/// class the zero region is block-diagonal.
struct Mask {
    Mat a;  // m x n, entries in {0, 1}
    std::vector<int> atom_labels;
    std::vector<int> sample_labels;

    Index atom_count() const { return a.rows(); }
    Index sample_count() const { return a.cols(); }
};

/// Builds the mask from 1-based class labels; both lists must be non-empty.
Mask build_mask(const std::vector<int>& atom_labels, const std::vector<int>& sample_labels);

/// M = 1*1^T - A, i.e. M(i,j) = 1 - A(i,j).
Mat complement(const Mask& mask);

/// Squared Frobenius norm of the masked entries: sum_ij A(i,j) * Z(i,j)^2.
double offblock_energy(const Mat& z, const Mask& mask);

} // namespace rbds
