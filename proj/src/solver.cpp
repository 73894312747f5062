#include "rbds/solver.hpp"

#include <Eigen/Cholesky>
#include <cmath>
#include <limits>
#include <string>

#include "rbds/kernels.hpp"
#include "rbds/prox.hpp"

namespace rbds {

namespace {

double inf_norm(const Mat& m) {
    return kernels::max_abs(m.data(), static_cast<std::size_t>(m.size()));
}

double l1_norm(const Mat& m) {
    return kernels::sum_abs(m.data(), static_cast<std::size_t>(m.size()));
}

void check_finite_state(const SolverState& s, const Residuals& res, int iter) {
    if (s.Z.allFinite() && s.E.allFinite() && s.D.allFinite() && s.J.allFinite() &&
        s.L.allFinite() && s.Y1.allFinite() && s.Y2.allFinite() && s.Y3.allFinite()) {
        return;
    }
    throw DivergedError("ALM iterate went non-finite at iteration " + std::to_string(iter) +
                            " (residuals " + std::to_string(res.recon_inf) + ", " +
                            std::to_string(res.zj_inf) + ", " + std::to_string(res.zl_inf) + ")",
                        iter);
}

} // namespace

void SolverConfig::validate() const {
    auto require = [](bool ok, const char* msg) {
        if (!ok) throw ConfigError(std::string("SolverConfig: ") + msg);
    };
    require(std::isfinite(lambda) && lambda > 0.0, "lambda must be > 0");
    require(std::isfinite(alpha) && alpha >= 0.0, "alpha must be >= 0");
    require(std::isfinite(beta) && beta >= 0.0, "beta must be >= 0");
    require(std::isfinite(gamma) && gamma >= 0.0, "gamma must be >= 0");
    require(std::isfinite(mu0) && mu0 > 0.0, "mu0 must be > 0");
    require(std::isfinite(mu_max) && mu_max > mu0, "mu_max must be > mu0");
    require(std::isfinite(rho) && rho > 1.0, "rho must be > 1");
    require(std::isfinite(eps_tol) && eps_tol > 0.0, "eps_tol must be > 0");
    require(max_iters >= 1, "max_iters must be >= 1");
    require(atoms_per_class >= 1, "atoms_per_class must be >= 1");
}

SolverState make_initial_state(Mat X, const Dictionary& dict,
                               const std::vector<int>& sample_labels, const SolverConfig& cfg) {
    validate_matrix(X, "solver X");
    validate_matrix(dict.atoms, "solver D");
    if (dict.atoms.rows() != X.rows()) {
        throw ValidationError("solver: dictionary dimension " + std::to_string(dict.atoms.rows()) +
                              " does not match data dimension " + std::to_string(X.rows()));
    }
    SolverState s;
    const Index m = dict.atoms.cols();
    const Index n = X.cols();
    const Index d = X.rows();
    if (!sample_labels.empty()) {
        if (static_cast<Index>(sample_labels.size()) != n) {
            throw ValidationError("solver: label count does not match sample count");
        }
        Mask mask = build_mask(dict.atom_labels, sample_labels);
        s.A = std::move(mask.a);
        s.M = Mat::Ones(m, n) - s.A;
    } else if (cfg.alpha != 0.0) {
        throw ConfigError("solver: the block term (alpha != 0) needs sample labels");
    }
    s.X = std::move(X);
    s.D = dict.atoms;
    s.Z = Mat::Zero(m, n);
    s.J = Mat::Zero(m, n);
    s.L = Mat::Zero(m, n);
    s.E = Mat::Zero(d, n);
    s.Y1 = Mat::Zero(d, n);
    s.Y2 = Mat::Zero(m, n);
    s.Y3 = Mat::Zero(m, n);
    s.mu = cfg.mu0;
    s.iter = 0;
    return s;
}

Mat update_J(const SolverState& s, const SolverConfig& cfg) {
    (void)cfg;
    return svt(s.Z + s.Y2 / s.mu, 1.0 / s.mu);
}

Mat update_Z(const SolverState& s, const SolverConfig& cfg) {
    const Index m = s.D.cols();
    const double mu = s.mu;

    Mat lhs = s.D.transpose() * s.D;
    lhs.diagonal().array() += cfg.alpha / mu + 2.0;

    // rhs = D^T(X - E) + J + L + (alpha*R + D^T Y1 - Y2 - Y3)/mu, R = M (.) Z
    Mat rhs = s.D.transpose() * (s.X - s.E) + s.J + s.L;
    Mat scaled = s.D.transpose() * s.Y1 - s.Y2 - s.Y3;
    if (cfg.alpha != 0.0) {
        Mat r(m, s.Z.cols());
        kernels::hadamard(s.M.data(), s.Z.data(), r.data(), static_cast<std::size_t>(r.size()));
        scaled += cfg.alpha * r;
    }
    rhs += scaled / mu;

    Mat z = lhs.ldlt().solve(rhs);
    if (!z.allFinite()) throw NumericError("update_Z: solve produced a non-finite result");
    return z;
}

Mat update_L(const SolverState& s, const SolverConfig& cfg) {
    return soft_threshold(Mat(s.Z + s.Y3 / s.mu), cfg.beta / s.mu);
}

Mat update_E(const SolverState& s, const SolverConfig& cfg) {
    return soft_threshold(Mat(s.X - s.D * s.Z + s.Y1 / s.mu), cfg.lambda / s.mu);
}

Mat update_D(const SolverState& s, const SolverConfig& cfg) {
    const double mu = s.mu;
    Mat lhs = s.Z * s.Z.transpose();  // m x m, symmetric
    lhs.diagonal().array() += cfg.gamma / mu;

    const Mat rhs = s.Y1 * s.Z.transpose() / mu - (s.E - s.X) * s.Z.transpose();  // d x m

    // D = rhs * lhs^{-1}; lhs is symmetric, so solve on the transpose
    Mat d = lhs.ldlt().solve(rhs.transpose()).transpose();
    if (!d.allFinite()) throw NumericError("update_D: solve produced a non-finite result");
    return d;
}

Residuals update_multipliers(SolverState& s, const SolverConfig& cfg) {
    const Mat r1 = s.X - s.D * s.Z - s.E;
    const Mat r2 = s.Z - s.J;
    const Mat r3 = s.Z - s.L;

    Residuals res;
    res.recon_inf = inf_norm(r1);
    res.zj_inf = inf_norm(r2);
    res.zl_inf = inf_norm(r3);

    const double mu = s.mu;
    kernels::axpy(mu, r1.data(), s.Y1.data(), static_cast<std::size_t>(r1.size()));
    kernels::axpy(mu, r2.data(), s.Y2.data(), static_cast<std::size_t>(r2.size()));
    kernels::axpy(mu, r3.data(), s.Y3.data(), static_cast<std::size_t>(r3.size()));
    s.mu = std::min(cfg.mu_max, cfg.rho * mu);
    return res;
}

bool check_convergence(const Residuals& r, const SolverConfig& cfg) {
    return r.recon_inf < cfg.eps_tol && r.zj_inf < cfg.eps_tol && r.zl_inf < cfg.eps_tol;
}

bool check_convergence(const SolverState& s, const SolverConfig& cfg) {
    Residuals r;
    r.recon_inf = inf_norm(Mat(s.X - s.D * s.Z - s.E));
    r.zj_inf = inf_norm(Mat(s.Z - s.J));
    r.zl_inf = inf_norm(Mat(s.Z - s.L));
    return check_convergence(r, cfg);
}

double solver_objective(const SolverState& s, const SolverConfig& cfg) {
    double obj = nuclear_norm(s.Z) + cfg.lambda * l1_norm(s.E) + cfg.beta * l1_norm(s.Z);
    if (cfg.alpha != 0.0 && s.A.size() > 0) {
        obj += 0.5 * cfg.alpha *
               kernels::masked_sum_sq(s.A.data(), s.Z.data(), static_cast<std::size_t>(s.Z.size()));
    }
    if (cfg.dict_update_enabled) {
        obj += 0.5 * cfg.gamma * kernels::sum_sq(s.D.data(), static_cast<std::size_t>(s.D.size()));
    }
    return obj;
}

RbdsModel solve_alm(Mat X, Dictionary dict, const std::vector<int>& sample_labels,
                    const SolverConfig& cfg, const SolveOptions& opts) {
    SolverState s = make_initial_state(std::move(X), dict, sample_labels, cfg);

    bool converged = false;
    int used = 0;
    for (int k = 0; k < cfg.max_iters; ++k) {
        s.iter = k;
        const double mu_k = s.mu;

        s.J = update_J(s, cfg);
        s.Z = update_Z(s, cfg);
        s.L = update_L(s, cfg);
        s.E = update_E(s, cfg);
        if (cfg.dict_update_enabled) s.D = update_D(s, cfg);
        const Residuals res = update_multipliers(s, cfg);

        check_finite_state(s, res, k);

        IterStats stats;
        stats.iter = k;
        stats.recon_inf = res.recon_inf;
        stats.zj_inf = res.zj_inf;
        stats.zl_inf = res.zl_inf;
        stats.mu = mu_k;
        stats.objective =
            opts.record_objective ? solver_objective(s, cfg) : std::numeric_limits<double>::quiet_NaN();
        s.history.push_back(stats);

        used = k + 1;
        if (check_convergence(res, cfg)) {
            converged = true;
            break;
        }
    }

    RbdsModel model;
    model.dictionary.atoms = std::move(s.D);
    model.dictionary.atom_labels = dict.atom_labels;
    model.Z_train = std::move(s.Z);
    model.E_train = std::move(s.E);
    model.config = cfg;
    model.converged = converged;
    model.iterations_used = used;
    model.history = std::move(s.history);
    if (s.A.size() > 0) {
        model.offblock =
            kernels::masked_sum_sq(s.A.data(), model.Z_train.data(),
                                   static_cast<std::size_t>(model.Z_train.size()));
        const double zsq =
            kernels::sum_sq(model.Z_train.data(), static_cast<std::size_t>(model.Z_train.size()));
        model.offblock_ratio = zsq > 0.0 ? model.offblock / zsq : 0.0;
    }
    return model;
}

RbdsModel fit_rbds(const LabeledDataset& train, const SolverConfig& cfg, const SolveOptions& opts) {
    cfg.validate();
    Mat X = train.data;
    if (cfg.normalize_columns) normalize_columns_inplace(X);

    Dictionary dict = cfg.dict_init == DictInit::sampled
                          ? init_dictionary(train, cfg.atoms_per_class, cfg.seed)
                          : training_data_dictionary(train, cfg.normalize_columns);

    return solve_alm(std::move(X), std::move(dict), train.labels, cfg, opts);
}

} // namespace rbds
