#pragma once

#include "rbds/dictionary.hpp"
#include "rbds/solver.hpp"

namespace rbds {

/// Low-rank + sparse codes of t test columns against a fixed dictionary.
struct CodingResult {
    Mat Z_hat;  // m x t
    Mat E_hat;  // d x t
    bool converged = false;
    int iterations_used = 0;
};

/// Codes test columns against `dict` by the same inexact-ALM loop as
/// training, with the block term off and the dictionary held fixed:
///   min ||Z||_* + lambda ||E||_1 + beta ||Z||_1  s.t.  X_test = D Z + E.
///
/// lambda/beta and the schedule come from cfg (training values by default).
/// With per_sample set, each column is coded independently instead of
/// jointly; converged is then the conjunction over columns and
/// iterations_used the maximum.
CodingResult code(const Mat& test, const Dictionary& dict, const SolverConfig& cfg,
                  bool per_sample = false);

/// Coding objective at a candidate (Z, E):
/// ||Z||_* + lambda ||E||_1 + beta ||Z||_1.
double coding_objective(const Mat& z, const Mat& e, const SolverConfig& cfg);

} // namespace rbds
