#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "rbds/dictionary.hpp"
#include "rbds/mask.hpp"
#include "rbds/matrix.hpp"

namespace rbds {

/// How the ALM driver obtains its initial dictionary.
enum class DictInit {
    sampled,        // per-class seeded sampling of normalized training columns
    training_data,  // D fixed to the (normalized) training matrix
};

struct SolverConfig {
    double lambda = 0.1;  // weight of ||E||_1
    double alpha = 1.0;   // weight of the masked block term
    double beta = 0.1;    // weight of ||Z||_1
    double gamma = 1.0;   // weight of ||D||_F^2 (dictionary scale control)

    double mu0 = 1e-5;
    double mu_max = 1e8;
    double rho = 1.1;
    double eps_tol = 1e-6;
    int max_iters = 500;

    int atoms_per_class = 5;
    bool dict_update_enabled = true;
    DictInit dict_init = DictInit::sampled;
    bool normalize_columns = true;
    std::uint64_t seed = 0;

    void validate() const;
};

/// One row of the residual history (infinity norms per Algorithm step).
/// `objective` is NaN unless objective recording was requested.
struct IterStats {
    int iter;
    double recon_inf;  // ||X - D Z - E||_inf
    double zj_inf;     // ||Z - J||_inf
    double zl_inf;     // ||Z - L||_inf
    double mu;
    double objective;
};

/// All ALM iterates plus the problem data they refer to. The update_* step
/// functions read the fields at their current values, so driving them in the
/// documented order (J, Z, L, E, D, multipliers) reproduces the iteration
/// exactly; tests can also fill a state by hand and exercise one step.
struct SolverState {
    Mat X;  // data, d x n
    Mat A;  // incoherence mask, m x n; empty when no sample labels were given
    Mat M;  // mask complement (1 - A), same shape as A
    Mat Z, J, L;       // m x n
    Mat E;             // d x n
    Mat D;             // d x m
    Mat Y1;            // d x n
    Mat Y2, Y3;        // m x n
    double mu = 0.0;
    int iter = 0;
    std::vector<IterStats> history;
};

struct Residuals {
    double recon_inf, zj_inf, zl_inf;
};

struct RbdsModel {
    Dictionary dictionary;
    Mat Z_train;  // m x n
    Mat E_train;  // d x n
    SolverConfig config;
    bool converged = false;
    int iterations_used = 0;
    std::vector<IterStats> history;
    double offblock = 0.0;        // ||A (.) Z||_F^2 at the solution
    double offblock_ratio = 0.0;  // offblock / ||Z||_F^2 (0 when Z = 0)
};

/// Zero-initialized state (Algorithm start: Z=J=L=E=Y1=Y2=Y3=0, mu=mu0).
SolverState make_initial_state(Mat X, const Dictionary& dict,
                               const std::vector<int>& sample_labels, const SolverConfig& cfg);

// --- one ALM sweep, split into its closed-form / prox pieces -------------

/// J = svt(Z + Y2/mu, 1/mu): the nuclear-norm prox at the current Z, Y2.
Mat update_J(const SolverState& s, const SolverConfig& cfg);

/// Closed-form ridge solve for Z. Uses the previous iterate through
/// R = M (.) Z (Z still holds Z^k when this runs) and the already-updated J.
Mat update_Z(const SolverState& s, const SolverConfig& cfg);

/// L = soft_threshold(Z + Y3/mu, beta/mu) with the updated Z.
Mat update_L(const SolverState& s, const SolverConfig& cfg);

/// E = soft_threshold(X - D Z + Y1/mu, lambda/mu) with the updated Z.
Mat update_E(const SolverState& s, const SolverConfig& cfg);

/// Closed-form ridge solve for D from the updated Z and E.
Mat update_D(const SolverState& s, const SolverConfig& cfg);

/// Y1 += mu(X-DZ-E); Y2 += mu(Z-J); Y3 += mu(Z-L); mu = min(mu_max, rho*mu).
/// Returns the infinity-norm residuals the updates were computed from.
Residuals update_multipliers(SolverState& s, const SolverConfig& cfg);

/// True iff all three feasibility residuals are strictly below eps_tol.
bool check_convergence(const SolverState& s, const SolverConfig& cfg);
bool check_convergence(const Residuals& r, const SolverConfig& cfg);

/// Objective at the current iterate:
/// ||Z||_* + lambda ||E||_1 + (alpha/2) ||A (.) Z||_F^2 + beta ||Z||_1,
/// plus (gamma/2) ||D||_F^2 when the dictionary is being learned.
double solver_objective(const SolverState& s, const SolverConfig& cfg);

struct SolveOptions {
    bool record_objective = false;  // adds an SVD per iteration
};

/// Runs the full ALM loop on prepared inputs (X already normalized if
/// requested, dictionary fixed). Shared by training, the ablation baselines
/// and test-time coding. Throws DivergedError when an iterate goes
/// non-finite.
RbdsModel solve_alm(Mat X, Dictionary dict, const std::vector<int>& sample_labels,
                    const SolverConfig& cfg, const SolveOptions& opts = {});

/// Trains the full model: dictionary init per cfg.dict_init, then the ALM
/// loop over the (optionally column-normalized) training data. Deterministic
/// for a fixed seed.
RbdsModel fit_rbds(const LabeledDataset& train, const SolverConfig& cfg,
                   const SolveOptions& opts = {});

} // namespace rbds
