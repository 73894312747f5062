// Command-line harness: synthesize datasets, train models, code test
// samples, and run full classification experiments with reports and traces.

#include <CLI11.hpp>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "rbds/baselines.hpp"
#include "rbds/experiment.hpp"
#include "rbds/kernels.hpp"
#include "rbds/matrix_io.hpp"
#include "rbds/rng.hpp"

namespace {

struct CommonArgs {
    std::string config_path;
    std::string out_dir;
    std::string seed;  // keep as text so "unset" is distinguishable
    std::vector<std::string> methods;
    bool quiet = false;
};

void add_common(CLI::App* cmd, CommonArgs& args) {
    cmd->add_option("--config", args.config_path, "config file (key=value lines)");
    cmd->add_option("--out", args.out_dir, "output directory (overrides config 'out')");
    cmd->add_option("--seed", args.seed, "master seed (overrides config 'seed')");
    cmd->add_option("--method", args.methods,
                    "method to run (repeatable; overrides config 'methods')");
    cmd->add_flag("--quiet", args.quiet, "suppress progress output");
}

rbds::Config load_config(const CommonArgs& args) {
    rbds::Config cfg;
    if (!args.config_path.empty()) cfg = rbds::Config::parse_file(args.config_path);
    if (!args.out_dir.empty()) cfg.set("out", args.out_dir);
    if (!args.seed.empty()) cfg.set("seed", args.seed);
    if (!args.methods.empty()) {
        std::string joined;
        for (const auto& m : args.methods) {
            if (!joined.empty()) joined += ",";
            joined += m;
        }
        cfg.set("methods", joined);
    }
    return cfg;
}

void echo_config(const rbds::Config& cfg) {
    const std::string out = cfg.get_str("out", "");
    if (out.empty()) return;
    std::filesystem::create_directories(out);
    const std::filesystem::path path = std::filesystem::path(out) / "config_echo.cfg";
    const std::filesystem::path tmp = path.string() + ".tmp";
    {
        std::ofstream f(tmp, std::ios::binary);
        f << cfg.canonical_text();
        f << "# config_hash = " << cfg.hash() << "\n";
    }
    std::filesystem::rename(tmp, path);
}

std::filesystem::path data_path(const std::filesystem::path& dir, const std::string& stem,
                                const std::string& format) {
    return dir / (stem + (format == "csv" ? ".csv" : ".rbm"));
}

int cmd_gen(const CommonArgs& args) {
    rbds::Config cfg = load_config(args);
    const auto ec = rbds::ExperimentConfig::from_config(cfg);
    if (ec.out_dir.empty()) throw rbds::ConfigError("gen: an output directory is required");
    const std::string format = cfg.get_str("data.format", "rawbin");

    const auto rep_seed = rbds::derive_seed(ec.master_seed, 0);
    const rbds::SplitData data = rbds::prepare_data(ec, rep_seed);

    const std::filesystem::path dir(ec.out_dir);
    std::filesystem::create_directories(dir);
    rbds::io::save_matrix(data.train.data, data_path(dir, "train_matrix", format));
    rbds::io::save_labels(data.train.labels, dir / "train_labels.csv");
    rbds::io::save_matrix(data.test.data, data_path(dir, "test_matrix", format));
    rbds::io::save_labels(data.test.labels, dir / "test_labels.csv");
    echo_config(cfg);

    if (!args.quiet) {
        std::cout << "wrote " << data.train.cols() << " train / " << data.test.cols()
                  << " test columns (" << data.train.rows() << " rows) to " << ec.out_dir << "\n";
    }
    return 0;
}

int cmd_train(const CommonArgs& args) {
    rbds::Config cfg = load_config(args);
    const auto ec = rbds::ExperimentConfig::from_config(cfg);
    if (ec.out_dir.empty()) throw rbds::ConfigError("train: an output directory is required");
    if (ec.methods.size() != 1) {
        throw rbds::ConfigError("train fits exactly one method; pass --method NAME");
    }
    const rbds::Method method = ec.methods[0];

    const auto rep_seed = rbds::derive_seed(ec.master_seed, 0);
    const rbds::SplitData data = rbds::prepare_data(ec, rep_seed);

    rbds::SolverConfig sc = ec.method_cfgs[0];
    sc.seed = rbds::derive_seed(rep_seed, 4);

    rbds::ModelBundle bundle;
    bundle.method = method;
    switch (method) {
        case rbds::Method::rbds: bundle.model = rbds::fit_rbds(data.train, sc); break;
        case rbds::Method::lrrs: bundle.model = rbds::fit_lrrs(data.train, sc); break;
        case rbds::Method::lrrs_bd: bundle.model = rbds::fit_lrrs_bd(data.train, sc); break;
        case rbds::Method::rpca_preclean_lrrs: {
            const double lam = ec.rpca_lambda > 0.0
                                   ? ec.rpca_lambda
                                   : rbds::rpca_default_lambda(data.train.rows(), data.train.cols());
            const auto pre = rbds::rpca(data.train.data, lam, sc);
            bundle.model = rbds::fit_lrrs(rbds::LabeledDataset(pre.A_lowrank, data.train.labels), sc);
            break;
        }
    }
    bundle.classifier =
        rbds::train_classifier(bundle.model.Z_train, rbds::one_hot(data.train), ec.eta);
    rbds::save_model(bundle, ec.out_dir);
    echo_config(cfg);

    if (!args.quiet) {
        std::cout << rbds::method_name(method) << ": "
                  << (bundle.model.converged ? "converged" : "hit max_iters") << " after "
                  << bundle.model.iterations_used << " iterations; model in " << ec.out_dir << "\n";
    }
    return 0;
}

int cmd_code(const CommonArgs& args, const std::string& model_dir, bool per_sample) {
    rbds::Config cfg = load_config(args);
    const std::string test_matrix = cfg.get_str("data.test_matrix");
    const std::string out = cfg.get_str("out", "");
    if (out.empty()) throw rbds::ConfigError("code: an output directory is required");

    const rbds::ModelBundle bundle = rbds::load_model(model_dir);
    const rbds::Mat test = rbds::io::load_matrix(test_matrix);
    const rbds::CodingResult coding =
        rbds::code(test, bundle.model.dictionary, bundle.model.config, per_sample);

    const std::filesystem::path dir(out);
    std::filesystem::create_directories(dir);
    rbds::io::save_matrix(coding.Z_hat, dir / "Z_hat.rbm");
    rbds::io::save_matrix(coding.E_hat, dir / "E_hat.rbm");
    rbds::io::save_labels(rbds::predict(bundle.classifier, coding.Z_hat), dir / "predictions.csv");

    if (!args.quiet) {
        std::cout << "coded " << coding.Z_hat.cols() << " columns ("
                  << (coding.converged ? "converged" : "hit max_iters") << ", "
                  << coding.iterations_used << " iterations); results in " << out << "\n";
    }
    return 0;
}

int cmd_eval(const CommonArgs& args) {
    rbds::Config cfg = load_config(args);
    const auto ec = rbds::ExperimentConfig::from_config(cfg);
    const rbds::ExperimentReport report = rbds::run_experiment(ec);
    echo_config(cfg);
    if (!args.quiet) std::cout << rbds::report_table(report);
    return 0;
}

int cmd_sweep(const CommonArgs& args, const std::string& parameter,
              const std::vector<double>& values) {
    rbds::Config cfg = load_config(args);
    const auto reports = rbds::sweep(cfg, parameter, values);
    if (!args.quiet) {
        for (std::size_t i = 0; i < reports.size(); ++i) {
            std::cout << parameter << " = " << values[i] << "\n"
                      << rbds::report_table(reports[i]) << "\n";
        }
    }
    return 0;
}

int cmd_report(const CommonArgs& args, const std::string& report_path) {
    const rbds::ParsedReport parsed = rbds::read_report_csv(report_path);
    if (!args.quiet) std::cout << rbds::report_table(parsed);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    rbds::kernels::configure_threads_from_env();

    CLI::App app{"rbds: block-diagonal representation learning benchmark harness"};
    app.require_subcommand(1);

    CommonArgs gen_args, train_args, code_args, eval_args, sweep_args, report_args;

    auto* gen = app.add_subcommand("gen", "synthesize dataset files");
    add_common(gen, gen_args);

    auto* train = app.add_subcommand("train", "fit one method and save the model");
    add_common(train, train_args);

    auto* code = app.add_subcommand("code", "code test samples against a saved model");
    add_common(code, code_args);
    std::string model_dir;
    bool per_sample = false;
    code->add_option("--model", model_dir, "model directory written by train")->required();
    code->add_flag("--per-sample", per_sample, "code each column independently");

    auto* eval = app.add_subcommand("eval", "full train/code/classify pipeline with a report");
    add_common(eval, eval_args);

    auto* sweep = app.add_subcommand("sweep", "eval once per value of a numeric config key");
    add_common(sweep, sweep_args);
    std::string parameter;
    std::vector<double> values;
    sweep->add_option("--param", parameter, "config key to sweep")->required();
    sweep->add_option("--values", values, "values to sweep over")->required();

    auto* report = app.add_subcommand("report", "render a report.csv as a table");
    add_common(report, report_args);
    std::string report_path;
    report->add_option("--in", report_path, "report.csv path")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen->parsed()) return cmd_gen(gen_args);
        if (train->parsed()) return cmd_train(train_args);
        if (code->parsed()) return cmd_code(code_args, model_dir, per_sample);
        if (eval->parsed()) return cmd_eval(eval_args);
        if (sweep->parsed()) return cmd_sweep(sweep_args, parameter, values);
        if (report->parsed()) return cmd_report(report_args, report_path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
