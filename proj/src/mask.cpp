#include "rbds/mask.hpp"

#include "rbds/kernels.hpp"

namespace rbds {

Mask build_mask(const std::vector<int>& atom_labels, const std::vector<int>& sample_labels) {
    if (atom_labels.empty() || sample_labels.empty()) {
        throw ValidationError("build_mask: label lists must be non-empty");
    }
    for (int l : atom_labels) {
        if (l < 1) throw ValidationError("build_mask: atom label " + std::to_string(l) + " is not 1-based");
    }
    for (int l : sample_labels) {
        if (l < 1) throw ValidationError("build_mask: sample label " + std::to_string(l) + " is not 1-based");
    }
    Mask mask;
    mask.atom_labels = atom_labels;
    mask.sample_labels = sample_labels;
    mask.a.resize(static_cast<Index>(atom_labels.size()), static_cast<Index>(sample_labels.size()));
    for (Index j = 0; j < mask.a.cols(); ++j) {
        const int sj = sample_labels[static_cast<std::size_t>(j)];
        for (Index i = 0; i < mask.a.rows(); ++i) {
            mask.a(i, j) = atom_labels[static_cast<std::size_t>(i)] == sj ? 0.0 : 1.0;
        }
    }
    return mask;
}

Mat complement(const Mask& mask) {
    return Mat::Ones(mask.a.rows(), mask.a.cols()) - mask.a;
}

double offblock_energy(const Mat& z, const Mask& mask) {
    if (z.rows() != mask.a.rows() || z.cols() != mask.a.cols()) {
        throw ValidationError("offblock_energy: Z is " + std::to_string(z.rows()) + "x" +
                              std::to_string(z.cols()) + " but mask is " +
                              std::to_string(mask.a.rows()) + "x" + std::to_string(mask.a.cols()));
    }
    return kernels::masked_sum_sq(mask.a.data(), z.data(), static_cast<std::size_t>(z.size()));
}

} // namespace rbds
