#pragma once

#include "rbds/solver.hpp"

namespace rbds {

/// One RPCA iteration record; objective is ||A||_* + lambda ||E||_1 and is
/// NaN unless objective recording was requested.
struct RpcaIterStats {
    int iter;
    double recon_inf;  // ||X - A - E||_inf
    double mu;
    double objective;
};

struct RpcaResult {
    Mat A_lowrank;  // d x n
    Mat E_sparse;   // d x n
    bool converged = false;
    int iterations_used = 0;
    std::vector<RpcaIterStats> history;
};

/// Standard convention 1/sqrt(max(rows, cols)).
double rpca_default_lambda(Index rows, Index cols);

/// Low-rank + sparse decomposition X = A + E by inexact ALM:
/// A-step svt(X - E + Y/mu, 1/mu), E-step soft_threshold(X - A + Y/mu,
/// lambda/mu), multiplier and penalty schedule as in the main solver.
/// Only lambda, mu0, mu_max, rho, eps_tol and max_iters of cfg are used.
RpcaResult rpca(const Mat& X, double lambda, const SolverConfig& cfg,
                bool record_objective = false);

/// Ablation solving the plain low-rank + sparse coding problem: the main ALM
/// loop with the block term off and D fixed to the (normalized) training
/// matrix, atom labels = sample labels.
RbdsModel fit_lrrs(const LabeledDataset& train, const SolverConfig& cfg,
                   const SolveOptions& opts = {});

/// Ablation with the block term on (alpha from cfg) and the dictionary still
/// fixed to the training matrix.
RbdsModel fit_lrrs_bd(const LabeledDataset& train, const SolverConfig& cfg,
                      const SolveOptions& opts = {});

} // namespace rbds
