#include "rbds/classifier.hpp"

#include <Eigen/Cholesky>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <string>

#include "rbds/matrix_io.hpp"

namespace rbds {

ClassifierModel train_classifier(const Mat& Z, const Mat& H, double eta) {
    if (!(eta > 0.0) || !std::isfinite(eta)) {
        throw ValidationError("train_classifier: eta must be finite and > 0, got " +
                              std::to_string(eta));
    }
    validate_matrix(Z, "train_classifier: Z");
    validate_matrix(H, "train_classifier: H");
    if (Z.cols() != H.cols()) {
        throw ValidationError("train_classifier: Z has " + std::to_string(Z.cols()) +
                              " columns but H has " + std::to_string(H.cols()));
    }

    Mat gram = Z * Z.transpose();  // m x m
    gram.diagonal().array() += eta;
    // W (ZZ^T + eta I) = H Z^T, solved on the transpose (gram is symmetric)
    Mat w = gram.ldlt().solve(Z * H.transpose()).transpose();
    if (!w.allFinite()) throw NumericError("train_classifier: solve produced a non-finite result");
    return ClassifierModel{std::move(w), eta};
}

int predict_one(const ClassifierModel& model, const Vec& z) {
    if (z.size() != model.W.cols()) {
        throw ValidationError("predict: code length " + std::to_string(z.size()) +
                              " does not match classifier dimension " +
                              std::to_string(model.W.cols()));
    }
    const Vec scores = model.W * z;
    Index best = 0;
    for (Index i = 1; i < scores.size(); ++i) {
        if (scores(i) > scores(best)) best = i;  // strict: ties keep the smaller id
    }
    return static_cast<int>(best) + 1;
}

std::vector<int> predict(const ClassifierModel& model, const Mat& z_hat) {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(z_hat.cols()));
    for (Index j = 0; j < z_hat.cols(); ++j) out.push_back(predict_one(model, z_hat.col(j)));
    return out;
}

double evaluate(const ClassifierModel& model, const CodingResult& coding,
                const std::vector<int>& true_labels) {
    if (coding.Z_hat.cols() == 0) throw ValidationError("evaluate: empty test set");
    if (static_cast<Index>(true_labels.size()) != coding.Z_hat.cols()) {
        throw ValidationError("evaluate: " + std::to_string(true_labels.size()) +
                              " labels for " + std::to_string(coding.Z_hat.cols()) + " test columns");
    }
    const std::vector<int> predicted = predict(model, coding.Z_hat);
    std::size_t correct = 0;
    for (std::size_t j = 0; j < predicted.size(); ++j) {
        if (predicted[j] == true_labels[j]) ++correct;
    }
    return static_cast<double>(correct) / static_cast<double>(predicted.size());
}

void save_classifier(const ClassifierModel& model, const std::filesystem::path& w_path,
                     const std::filesystem::path& eta_path) {
    io::save_matrix(model.W, w_path);
    std::ofstream out(eta_path);
    if (!out) throw IoError("cannot open " + eta_path.string() + " for writing");
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", model.eta);
    out << buf << '\n';
}

ClassifierModel load_classifier(const std::filesystem::path& w_path,
                                const std::filesystem::path& eta_path) {
    ClassifierModel model;
    model.W = io::load_matrix(w_path);
    std::ifstream in(eta_path);
    if (!in || !(in >> model.eta)) throw IoError("cannot read eta from " + eta_path.string());
    return model;
}

} // namespace rbds
