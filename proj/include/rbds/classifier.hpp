#pragma once

#include <filesystem>
#include <vector>

#include "rbds/coder.hpp"
#include "rbds/matrix.hpp"

namespace rbds {

/// Ridge linear classifier over representations: W is C x m.
struct ClassifierModel {
    Mat W;
    double eta = 1.0;

    Index class_count() const { return W.rows(); }
    Index code_dim() const { return W.cols(); }
};

/// Closed-form ridge fit W = H Z^T (Z Z^T + eta I)^{-1} from the training
/// representation Z (m x n) and one-hot labels H (C x n). eta must be > 0.
ClassifierModel train_classifier(const Mat& Z, const Mat& H, double eta);

/// Class id (1-based) with the largest score W z; ties break toward the
/// smallest class id.
int predict_one(const ClassifierModel& model, const Vec& z);
std::vector<int> predict(const ClassifierModel& model, const Mat& z_hat);

/// Fraction of coded test columns whose prediction matches the true label.
/// Throws on an empty test set or a length mismatch.
double evaluate(const ClassifierModel& model, const CodingResult& coding,
                const std::vector<int>& true_labels);

/// Serialization: W in a matrix file plus a one-line eta sidecar.
void save_classifier(const ClassifierModel& model, const std::filesystem::path& w_path,
                     const std::filesystem::path& eta_path);
ClassifierModel load_classifier(const std::filesystem::path& w_path,
                                const std::filesystem::path& eta_path);

} // namespace rbds
