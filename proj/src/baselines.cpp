#include "rbds/baselines.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "rbds/kernels.hpp"
#include "rbds/prox.hpp"

namespace rbds {

double rpca_default_lambda(Index rows, Index cols) {
    return 1.0 / std::sqrt(static_cast<double>(std::max(rows, cols)));
}

RpcaResult rpca(const Mat& X, double lambda, const SolverConfig& cfg, bool record_objective) {
    validate_matrix(X, "rpca: X");
    if (!(lambda > 0.0) || !std::isfinite(lambda)) {
        throw ValidationError("rpca: lambda must be finite and > 0, got " + std::to_string(lambda));
    }

    RpcaResult res;
    res.A_lowrank = Mat::Zero(X.rows(), X.cols());
    res.E_sparse = Mat::Zero(X.rows(), X.cols());
    Mat Y = Mat::Zero(X.rows(), X.cols());
    double mu = cfg.mu0;

    for (int k = 0; k < cfg.max_iters; ++k) {
        const double mu_k = mu;
        res.A_lowrank = svt(Mat(X - res.E_sparse + Y / mu), 1.0 / mu);
        res.E_sparse = soft_threshold(Mat(X - res.A_lowrank + Y / mu), lambda / mu);

        const Mat r = X - res.A_lowrank - res.E_sparse;
        const double recon_inf = kernels::max_abs(r.data(), static_cast<std::size_t>(r.size()));
        kernels::axpy(mu, r.data(), Y.data(), static_cast<std::size_t>(r.size()));
        mu = std::min(cfg.mu_max, cfg.rho * mu);

        if (!res.A_lowrank.allFinite() || !res.E_sparse.allFinite()) {
            throw DivergedError("rpca iterate went non-finite at iteration " + std::to_string(k), k);
        }

        RpcaIterStats stats;
        stats.iter = k;
        stats.recon_inf = recon_inf;
        stats.mu = mu_k;
        stats.objective = record_objective
                              ? nuclear_norm(res.A_lowrank) +
                                    lambda * kernels::sum_abs(res.E_sparse.data(),
                                                              static_cast<std::size_t>(res.E_sparse.size()))
                              : std::numeric_limits<double>::quiet_NaN();
        res.history.push_back(stats);

        res.iterations_used = k + 1;
        if (recon_inf < cfg.eps_tol) {
            res.converged = true;
            break;
        }
    }
    return res;
}

namespace {

RbdsModel fit_fixed_dictionary(const LabeledDataset& train, const SolverConfig& cfg,
                               const SolveOptions& opts) {
    cfg.validate();
    Mat X = train.data;
    if (cfg.normalize_columns) normalize_columns_inplace(X);
    Dictionary dict = training_data_dictionary(train, cfg.normalize_columns);
    return solve_alm(std::move(X), std::move(dict), train.labels, cfg, opts);
}

} // namespace

RbdsModel fit_lrrs(const LabeledDataset& train, const SolverConfig& cfg, const SolveOptions& opts) {
    SolverConfig lrrs_cfg = cfg;
    lrrs_cfg.alpha = 0.0;
    lrrs_cfg.dict_update_enabled = false;
    lrrs_cfg.dict_init = DictInit::training_data;
    return fit_fixed_dictionary(train, lrrs_cfg, opts);
}

RbdsModel fit_lrrs_bd(const LabeledDataset& train, const SolverConfig& cfg,
                      const SolveOptions& opts) {
    SolverConfig bd_cfg = cfg;
    bd_cfg.dict_update_enabled = false;
    bd_cfg.dict_init = DictInit::training_data;
    return fit_fixed_dictionary(train, bd_cfg, opts);
}

} // namespace rbds
