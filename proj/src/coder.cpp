#include "rbds/coder.hpp"

#include <string>

#include "rbds/kernels.hpp"
#include "rbds/prox.hpp"

namespace rbds {

CodingResult code(const Mat& test, const Dictionary& dict, const SolverConfig& cfg,
                  bool per_sample) {
    validate_matrix(test, "code: test matrix");
    if (test.rows() != dict.dim()) {
        throw ValidationError("code: test rows " + std::to_string(test.rows()) +
                              " do not match dictionary dimension " + std::to_string(dict.dim()));
    }

    SolverConfig coding_cfg = cfg;
    coding_cfg.alpha = 0.0;  // no block term at test time (labels unknown)
    coding_cfg.dict_update_enabled = false;
    coding_cfg.validate();

    Mat X = test;
    if (coding_cfg.normalize_columns) normalize_columns_inplace(X);

    if (!per_sample) {
        RbdsModel m = solve_alm(std::move(X), dict, {}, coding_cfg);
        return CodingResult{std::move(m.Z_train), std::move(m.E_train), m.converged,
                            m.iterations_used};
    }

    CodingResult out;
    out.Z_hat.resize(dict.atom_count(), X.cols());
    out.E_hat.resize(X.rows(), X.cols());
    out.converged = true;
    out.iterations_used = 0;
    for (Index j = 0; j < X.cols(); ++j) {
        RbdsModel m = solve_alm(X.col(j), dict, {}, coding_cfg);
        out.Z_hat.col(j) = m.Z_train;
        out.E_hat.col(j) = m.E_train;
        out.converged = out.converged && m.converged;
        out.iterations_used = std::max(out.iterations_used, m.iterations_used);
    }
    return out;
}

double coding_objective(const Mat& z, const Mat& e, const SolverConfig& cfg) {
    return nuclear_norm(z) + cfg.lambda * kernels::sum_abs(e.data(), static_cast<std::size_t>(e.size())) +
           cfg.beta * kernels::sum_abs(z.data(), static_cast<std::size_t>(z.size()));
}

} // namespace rbds
