#include "rbds/matrix.hpp"

#include <algorithm>

namespace rbds {

void validate_matrix(const Mat& m, const std::string& what) {
    if (m.rows() < 1 || m.cols() < 1) {
        throw ValidationError(what + ": matrix must have at least one row and one column, got " +
                              std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
    }
    if (!m.allFinite()) {
        throw ValidationError(what + ": matrix contains a non-finite value");
    }
}

LabeledDataset::LabeledDataset(Mat data_in, std::vector<int> labels_in)
    : data(std::move(data_in)), labels(std::move(labels_in)) {
    validate_matrix(data, "LabeledDataset.data");
    if (static_cast<Index>(labels.size()) != data.cols()) {
        throw ValidationError("LabeledDataset: " + std::to_string(labels.size()) +
                              " labels for " + std::to_string(data.cols()) + " columns");
    }
    const int max_label = *std::max_element(labels.begin(), labels.end());
    const int min_label = *std::min_element(labels.begin(), labels.end());
    if (min_label < 1) {
        throw ValidationError("LabeledDataset: class ids are 1-based, found " +
                              std::to_string(min_label));
    }
    class_count = max_label;
    std::vector<bool> seen(static_cast<std::size_t>(class_count), false);
    for (int l : labels) seen[static_cast<std::size_t>(l - 1)] = true;
    for (int c = 0; c < class_count; ++c) {
        if (!seen[static_cast<std::size_t>(c)]) {
            throw ValidationError("LabeledDataset: class " + std::to_string(c + 1) +
                                  " has no samples");
        }
    }
}

std::vector<int> LabeledDataset::class_counts() const {
    std::vector<int> counts(static_cast<std::size_t>(class_count), 0);
    for (int l : labels) ++counts[static_cast<std::size_t>(l - 1)];
    return counts;
}

std::vector<Index> LabeledDataset::class_columns(int cls) const {
    std::vector<Index> cols;
    for (Index j = 0; j < static_cast<Index>(labels.size()); ++j) {
        if (labels[static_cast<std::size_t>(j)] == cls) cols.push_back(j);
    }
    return cols;
}

Mat one_hot(const LabeledDataset& ds) {
    Mat h = Mat::Zero(ds.class_count, ds.cols());
    for (Index j = 0; j < ds.cols(); ++j) {
        h(ds.labels[static_cast<std::size_t>(j)] - 1, j) = 1.0;
    }
    return h;
}

void normalize_columns_inplace(Mat& m) {
    for (Index j = 0; j < m.cols(); ++j) {
        const double norm = m.col(j).norm();
        if (norm > 0.0) m.col(j) /= norm;
    }
}

Mat normalized_columns(const Mat& m) {
    Mat out = m;
    normalize_columns_inplace(out);
    return out;
}

} // namespace rbds
