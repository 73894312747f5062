#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "rbds/error.hpp"

namespace rbds {

/// Dense real matrix, samples stored as columns (d x n).
using Mat = Eigen::MatrixXd;
using Vec = Eigen::VectorXd;
using Index = Eigen::Index;

/// True iff every entry is finite (no NaN/Inf).
inline bool all_finite(const Mat& m) { return m.allFinite(); }

/// Enforces the DataMatrix invariants: both dimensions >= 1 and all entries
/// finite. `what` names the offending matrix in the error message.
void validate_matrix(const Mat& m, const std::string& what);

/// Column-sample dataset with 1-based class labels.
///
/// Invariants (checked on construction): labels.size() == data.cols(),
/// every class id lies in 1..class_count, and every id in that range occurs
/// at least once.
struct LabeledDataset {
    Mat data;                 // d x n
    std::vector<int> labels;  // size n, values in 1..class_count
    int class_count = 0;

    LabeledDataset() = default;
    LabeledDataset(Mat data, std::vector<int> labels);

    Index rows() const { return data.rows(); }
    Index cols() const { return data.cols(); }

    /// Per-class sample counts n_i, indexed by class id - 1.
    std::vector<int> class_counts() const;

    /// Column indices belonging to class `cls` (1-based), in column order.
    std::vector<Index> class_columns(int cls) const;
};

/// One-hot label matrix H (class_count x n): H(labels[j]-1, j) = 1.
Mat one_hot(const LabeledDataset& ds);

/// Rescales every column to unit Euclidean length. Zero columns are left
/// untouched.
void normalize_columns_inplace(Mat& m);
Mat normalized_columns(const Mat& m);

} // namespace rbds
