#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "rbds/classifier.hpp"
#include "rbds/config.hpp"
#include "rbds/datagen.hpp"
#include "rbds/solver.hpp"

namespace rbds {

enum class Method { rbds, lrrs, lrrs_bd, rpca_preclean_lrrs };

const char* method_name(Method m);
Method method_from_name(const std::string& name);

/// End-to-end experiment description, normally built from a Config (see
/// from_config for the key schema).
struct ExperimentConfig {
    // data source: synthetic subspaces, or matrices + label sidecars on disk
    bool synthetic = true;
    SubspaceSpec subspaces;
    std::string train_matrix_path, train_labels_path;
    std::string test_matrix_path, test_labels_path;  // empty = split the train files

    double split_ratio = 0.5;  // train fraction when splitting a pool
    CorruptionSpec corrupt_train, corrupt_test;

    std::vector<Method> methods;
    std::vector<SolverConfig> method_cfgs;  // parallel to methods
    double rpca_lambda = 0.0;               // 0 = 1/sqrt(max(d,n)) at run time
    double eta = 1.0;

    int repetitions = 10;
    std::uint64_t master_seed = 0;
    std::string out_dir;      // empty = keep everything in memory
    bool write_traces = true;
    bool trace_objective = false;

    std::uint64_t config_hash = 0;

    /// Key schema (all optional unless noted):
    ///   data.source = synthetic | files
    ///   data.classes, data.dim, data.rank, data.samples_per_class,
    ///   data.noise_sigma                       (synthetic)
    ///   data.train_matrix, data.train_labels,
    ///   data.test_matrix, data.test_labels     (files)
    ///   data.split                             train fraction in (0,1)
    ///   corrupt.{train,test}.kind = none | pixel_uniform | block_occlusion
    ///   corrupt.{train,test}.fraction, .image_h, .image_w
    ///   methods = comma list of rbds, lrrs, lrrs_bd, rpca_preclean+lrrs
    ///   solver.<param>                         defaults for every method
    ///   <method>.<param>                       per-method override; params:
    ///     lambda alpha beta gamma mu0 mu_max rho eps_tol max_iters
    ///     atoms_per_class normalize
    ///   rpca.lambda                            preclean sparsity weight
    ///   classifier.eta, repetitions, seed, out, trace, trace.objective
    static ExperimentConfig from_config(const Config& cfg);

    void validate() const;
};

struct RunRecord {
    Method method;
    int repetition;
    std::uint64_t seed;
    double accuracy;
    int iterations;
    bool converged;
    double wall_seconds;
    double offblock_ratio;
};

struct MethodSummary {
    Method method;
    int repetitions;
    double mean_accuracy;
    double std_accuracy;  // sample standard deviation over repetitions
    double mean_iterations;
    double convergence_rate;
    double mean_offblock_ratio;
};

struct ExperimentReport {
    std::vector<Method> method_order;
    std::vector<RunRecord> runs;
    std::uint64_t config_hash = 0;

    /// One row per method, in method_order.
    std::vector<MethodSummary> summaries() const;
};

/// Runs the full pipeline: per repetition, derive the seed, generate or load
/// data, split, corrupt train and test, fit every method, code the test set,
/// train the classifier on the training representation, predict, and record
/// metrics. Solver divergence is recorded per run (converged = false,
/// accuracy 0), not fatal. With out_dir set, writes report.csv, runs.csv,
/// per-run trace CSVs and a config echo.
ExperimentReport run_experiment(const ExperimentConfig& cfg);

/// One experiment per value of a numeric config key (e.g.
/// "corrupt.train.fraction" or "rbds.alpha"). Reports land under
/// <out>/<index>/ and a combined CSV at <out>/sweep.csv when out is set.
/// Throws ConfigError for an unknown key or an empty value list.
std::vector<ExperimentReport> sweep(const Config& base, const std::string& parameter,
                                    const std::vector<double>& values);

/// Fixed-width text table of the per-method summary rows.
std::string report_table(const ExperimentReport& report);

/// report.csv: header then one row per method, columns
/// method,mean_accuracy,std_accuracy,mean_iterations,convergence_rate,
/// mean_offblock_ratio,repetitions,config_hash. Written atomically;
/// byte-identical for identical inputs.
void write_report_csv(const ExperimentReport& report, const std::filesystem::path& path);

/// Parses a report.csv back into summary rows (+ hash) for `report` and the
/// round-trip tests.
struct ParsedReport {
    std::vector<MethodSummary> rows;
    std::uint64_t config_hash = 0;
};
ParsedReport read_report_csv(const std::filesystem::path& path);
std::string report_table(const ParsedReport& parsed);

// --- model bundle on disk (used by the train / code verbs) ----------------

struct ModelBundle {
    RbdsModel model;
    ClassifierModel classifier;
    Method method = Method::rbds;
};

void save_model(const ModelBundle& bundle, const std::filesystem::path& dir);
ModelBundle load_model(const std::filesystem::path& dir);

/// Resolves the (train, test) dataset pair for one repetition seed,
/// including corruption. Exposed for the CLI verbs that need the same
/// derivation as run_experiment.
struct SplitData {
    LabeledDataset train;
    LabeledDataset test;
};
SplitData prepare_data(const ExperimentConfig& cfg, std::uint64_t rep_seed);

} // namespace rbds
