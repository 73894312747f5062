#include "rbds/experiment.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "rbds/baselines.hpp"
#include "rbds/matrix_io.hpp"
#include "rbds/rng.hpp"

namespace rbds {

namespace {

constexpr const char* kSolverParams[] = {"lambda", "alpha",   "beta",      "gamma",
                                         "mu0",    "mu_max",  "rho",       "eps_tol",
                                         "max_iters", "atoms_per_class", "normalize"};

const char* method_config_ns(Method m) {
    switch (m) {
        case Method::rbds: return "rbds";
        case Method::lrrs: return "lrrs";
        case Method::lrrs_bd: return "lrrs_bd";
        case Method::rpca_preclean_lrrs: return "rpca_lrrs";
    }
    return "?";
}

void apply_solver_keys(const Config& cfg, const std::string& ns, SolverConfig& sc) {
    auto key = [&](const char* p) { return ns + "." + p; };
    sc.lambda = cfg.get_double(key("lambda"), sc.lambda);
    sc.alpha = cfg.get_double(key("alpha"), sc.alpha);
    sc.beta = cfg.get_double(key("beta"), sc.beta);
    sc.gamma = cfg.get_double(key("gamma"), sc.gamma);
    sc.mu0 = cfg.get_double(key("mu0"), sc.mu0);
    sc.mu_max = cfg.get_double(key("mu_max"), sc.mu_max);
    sc.rho = cfg.get_double(key("rho"), sc.rho);
    sc.eps_tol = cfg.get_double(key("eps_tol"), sc.eps_tol);
    sc.max_iters = cfg.get_int(key("max_iters"), sc.max_iters);
    sc.atoms_per_class = cfg.get_int(key("atoms_per_class"), sc.atoms_per_class);
    sc.normalize_columns = cfg.get_bool(key("normalize"), sc.normalize_columns);
}

CorruptionKind corruption_kind_from_name(const std::string& name) {
    if (name == "none") return CorruptionKind::none;
    if (name == "pixel_uniform") return CorruptionKind::pixel_uniform;
    if (name == "block_occlusion") return CorruptionKind::block_occlusion;
    throw ConfigError("unknown corruption kind '" + name + "'");
}

CorruptionSpec parse_corruption(const Config& cfg, const std::string& ns) {
    CorruptionSpec spec;
    spec.kind = corruption_kind_from_name(cfg.get_str(ns + ".kind", "none"));
    spec.fraction = cfg.get_double(ns + ".fraction", 0.0);
    spec.image_h = cfg.get_int(ns + ".image_h", 0);
    spec.image_w = cfg.get_int(ns + ".image_w", 0);
    return spec;
}

bool is_known_key(const std::string& key) {
    static const char* kExact[] = {
        "data.source",       "data.classes",     "data.dim",
        "data.rank",         "data.samples_per_class", "data.noise_sigma",
        "data.train_matrix", "data.train_labels", "data.test_matrix",
        "data.test_labels",  "data.split",       "data.format",
        "methods",           "rpca.lambda",      "classifier.eta",
        "repetitions",       "seed",             "out",
        "trace",             "trace.objective",
    };
    for (const char* k : kExact) {
        if (key == k) return true;
    }
    static const char* kSolverNs[] = {"solver", "rbds", "lrrs", "lrrs_bd", "rpca_lrrs"};
    for (const char* ns : kSolverNs) {
        for (const char* p : kSolverParams) {
            if (key == std::string(ns) + "." + p) return true;
        }
    }
    static const char* kCorruptParams[] = {"kind", "fraction", "image_h", "image_w"};
    for (const char* side : {"corrupt.train", "corrupt.test"}) {
        for (const char* p : kCorruptParams) {
            if (key == std::string(side) + "." + p) return true;
        }
    }
    return false;
}

std::string fmt_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void write_file_atomic(const std::filesystem::path& path, const std::string& content) {
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    const std::filesystem::path tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary);
        if (!out) throw IoError("cannot open " + tmp.string() + " for writing");
        out << content;
        if (!out) throw IoError("write failed for " + tmp.string());
    }
    std::filesystem::rename(tmp, path);
}

LabeledDataset take_columns(const LabeledDataset& pool, const std::vector<Index>& cols) {
    Mat data(pool.rows(), static_cast<Index>(cols.size()));
    std::vector<int> labels(cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        data.col(static_cast<Index>(j)) = pool.data.col(cols[j]);
        labels[j] = pool.labels[static_cast<std::size_t>(cols[j])];
    }
    return LabeledDataset(std::move(data), std::move(labels));
}

SplitData split_dataset(const LabeledDataset& pool, double ratio, std::uint64_t seed) {
    SplitMix64 rng(seed);
    std::vector<Index> train_cols, test_cols;
    for (int c = 1; c <= pool.class_count; ++c) {
        auto cols = pool.class_columns(c);
        if (cols.size() < 2) {
            throw ConfigError("split: class " + std::to_string(c) +
                              " has fewer than 2 samples, cannot split");
        }
        rng.shuffle(cols);
        const auto n_c = static_cast<long long>(cols.size());
        long long take = std::llround(ratio * static_cast<double>(n_c));
        take = std::clamp(take, 1LL, n_c - 1);
        std::sort(cols.begin(), cols.begin() + take);
        std::sort(cols.begin() + take, cols.end());
        train_cols.insert(train_cols.end(), cols.begin(), cols.begin() + take);
        test_cols.insert(test_cols.end(), cols.begin() + take, cols.end());
    }
    return SplitData{take_columns(pool, train_cols), take_columns(pool, test_cols)};
}

std::string trace_csv(const std::vector<IterStats>& history) {
    std::string out = "iter,recon_inf,zj_inf,zl_inf,mu,objective\n";
    for (const auto& row : history) {
        out += std::to_string(row.iter) + "," + fmt_double(row.recon_inf) + "," +
               fmt_double(row.zj_inf) + "," + fmt_double(row.zl_inf) + "," + fmt_double(row.mu) +
               "," + fmt_double(row.objective) + "\n";
    }
    return out;
}

} // namespace

const char* method_name(Method m) {
    switch (m) {
        case Method::rbds: return "rbds";
        case Method::lrrs: return "lrrs";
        case Method::lrrs_bd: return "lrrs_bd";
        case Method::rpca_preclean_lrrs: return "rpca_preclean+lrrs";
    }
    return "?";
}

Method method_from_name(const std::string& name) {
    if (name == "rbds") return Method::rbds;
    if (name == "lrrs") return Method::lrrs;
    if (name == "lrrs_bd") return Method::lrrs_bd;
    if (name == "rpca_preclean+lrrs" || name == "rpca_lrrs") return Method::rpca_preclean_lrrs;
    throw ConfigError("unknown method '" + name + "'");
}

ExperimentConfig ExperimentConfig::from_config(const Config& cfg) {
    for (const auto& key : cfg.keys()) {
        if (!is_known_key(key)) throw ConfigError("unknown config key '" + key + "'");
    }

    ExperimentConfig ec;
    const std::string source = cfg.get_str("data.source", "synthetic");
    if (source == "synthetic") {
        ec.synthetic = true;
    } else if (source == "files") {
        ec.synthetic = false;
    } else {
        throw ConfigError("data.source must be 'synthetic' or 'files', got '" + source + "'");
    }

    ec.subspaces.class_count = cfg.get_int("data.classes", ec.subspaces.class_count);
    ec.subspaces.ambient_dim = cfg.get_int("data.dim", ec.subspaces.ambient_dim);
    ec.subspaces.subspace_rank = cfg.get_int("data.rank", ec.subspaces.subspace_rank);
    ec.subspaces.samples_per_class =
        cfg.get_int("data.samples_per_class", ec.subspaces.samples_per_class);
    ec.subspaces.noise_sigma = cfg.get_double("data.noise_sigma", ec.subspaces.noise_sigma);

    ec.train_matrix_path = cfg.get_str("data.train_matrix", "");
    ec.train_labels_path = cfg.get_str("data.train_labels", "");
    ec.test_matrix_path = cfg.get_str("data.test_matrix", "");
    ec.test_labels_path = cfg.get_str("data.test_labels", "");

    ec.split_ratio = cfg.get_double("data.split", ec.split_ratio);
    ec.corrupt_train = parse_corruption(cfg, "corrupt.train");
    ec.corrupt_test = parse_corruption(cfg, "corrupt.test");

    for (const std::string& name : split_list(cfg.get_str("methods", "rbds,lrrs,lrrs_bd"))) {
        ec.methods.push_back(method_from_name(name));
    }

    SolverConfig base;
    apply_solver_keys(cfg, "solver", base);
    for (Method m : ec.methods) {
        SolverConfig sc = base;
        apply_solver_keys(cfg, method_config_ns(m), sc);
        ec.method_cfgs.push_back(sc);
    }

    ec.rpca_lambda = cfg.get_double("rpca.lambda", 0.0);
    ec.eta = cfg.get_double("classifier.eta", 1.0);
    ec.repetitions = cfg.get_int("repetitions", 10);
    ec.master_seed = cfg.get_u64("seed", 0);
    ec.out_dir = cfg.get_str("out", "");
    ec.write_traces = cfg.get_bool("trace", true);
    ec.trace_objective = cfg.get_bool("trace.objective", false);
    ec.config_hash = cfg.hash();

    ec.validate();
    return ec;
}

void ExperimentConfig::validate() const {
    if (methods.empty()) throw ConfigError("experiment: method list is empty");
    if (method_cfgs.size() != methods.size()) {
        throw ConfigError("experiment: one solver config required per method");
    }
    if (repetitions < 1) throw ConfigError("experiment: repetitions must be >= 1");
    if (!(split_ratio > 0.0 && split_ratio < 1.0)) {
        throw ConfigError("experiment: data.split must lie strictly between 0 and 1");
    }
    if (synthetic) {
        subspaces.validate();
    } else if (train_matrix_path.empty() || train_labels_path.empty()) {
        throw ConfigError("experiment: data.source=files needs data.train_matrix and data.train_labels");
    }
    if (test_matrix_path.empty() != test_labels_path.empty()) {
        throw ConfigError("experiment: test matrix and labels must be given together");
    }
    for (const auto& sc : method_cfgs) sc.validate();
    if (!(eta > 0.0)) throw ConfigError("experiment: classifier.eta must be > 0");
}

SplitData prepare_data(const ExperimentConfig& cfg, std::uint64_t rep_seed) {
    SplitData data;
    if (cfg.synthetic) {
        SubspaceSpec spec = cfg.subspaces;
        spec.seed = derive_seed(rep_seed, 0);
        const LabeledDataset pool = gen_subspaces(spec);
        data = split_dataset(pool, cfg.split_ratio, derive_seed(rep_seed, 1));
    } else {
        const LabeledDataset train_pool =
            io::load_dataset(cfg.train_matrix_path, cfg.train_labels_path);
        if (!cfg.test_matrix_path.empty()) {
            data.train = train_pool;
            data.test = io::load_dataset(cfg.test_matrix_path, cfg.test_labels_path);
        } else {
            data = split_dataset(train_pool, cfg.split_ratio, derive_seed(rep_seed, 1));
        }
    }

    if (cfg.corrupt_train.kind != CorruptionKind::none) {
        CorruptionSpec spec = cfg.corrupt_train;
        spec.seed = derive_seed(rep_seed, 2);
        data.train.data = corrupt(data.train.data, spec);
    }
    if (cfg.corrupt_test.kind != CorruptionKind::none) {
        CorruptionSpec spec = cfg.corrupt_test;
        spec.seed = derive_seed(rep_seed, 3);
        data.test.data = corrupt(data.test.data, spec);
    }
    return data;
}

namespace {

struct FitOutcome {
    RbdsModel model;
    bool preclean_converged = true;
};

FitOutcome fit_method(Method method, const LabeledDataset& train, const SolverConfig& sc,
                      double rpca_lambda, const SolveOptions& opts) {
    switch (method) {
        case Method::rbds: {
            return {fit_rbds(train, sc, opts), true};
        }
        case Method::lrrs: {
            return {fit_lrrs(train, sc, opts), true};
        }
        case Method::lrrs_bd: {
            return {fit_lrrs_bd(train, sc, opts), true};
        }
        case Method::rpca_preclean_lrrs: {
            const double lam = rpca_lambda > 0.0
                                   ? rpca_lambda
                                   : rpca_default_lambda(train.rows(), train.cols());
            RpcaResult pre = rpca(train.data, lam, sc);
            LabeledDataset cleaned(pre.A_lowrank, train.labels);
            return {fit_lrrs(cleaned, sc, opts), pre.converged};
        }
    }
    throw ConfigError("fit_method: unknown method");
}

} // namespace

ExperimentReport run_experiment(const ExperimentConfig& cfg) {
    cfg.validate();

    ExperimentReport report;
    report.method_order = cfg.methods;
    report.config_hash = cfg.config_hash;

    SolveOptions opts;
    opts.record_objective = cfg.trace_objective;

    for (int rep = 0; rep < cfg.repetitions; ++rep) {
        const std::uint64_t rep_seed = derive_seed(cfg.master_seed, static_cast<std::uint64_t>(rep));
        const SplitData data = prepare_data(cfg, rep_seed);
        const Mat H = one_hot(data.train);

        for (std::size_t mi = 0; mi < cfg.methods.size(); ++mi) {
            const Method method = cfg.methods[mi];
            SolverConfig sc = cfg.method_cfgs[mi];
            sc.seed = derive_seed(rep_seed, 4 + mi);

            RunRecord rec{};
            rec.method = method;
            rec.repetition = rep;
            rec.seed = rep_seed;

            const auto t0 = std::chrono::steady_clock::now();
            try {
                FitOutcome fit = fit_method(method, data.train, sc, cfg.rpca_lambda, opts);
                const CodingResult coding = code(data.test.data, fit.model.dictionary, sc);
                const ClassifierModel clf = train_classifier(fit.model.Z_train, H, cfg.eta);
                rec.accuracy = evaluate(clf, coding, data.test.labels);
                rec.iterations = fit.model.iterations_used;
                rec.converged = fit.model.converged && fit.preclean_converged;
                rec.offblock_ratio = fit.model.offblock_ratio;

                if (!cfg.out_dir.empty() && cfg.write_traces) {
                    const std::filesystem::path path =
                        std::filesystem::path(cfg.out_dir) / "traces" /
                        ("rep" + std::to_string(rep) + "_" + method_config_ns(method) + ".csv");
                    write_file_atomic(path, trace_csv(fit.model.history));
                }
            } catch (const DivergedError& e) {
                rec.accuracy = 0.0;
                rec.iterations = e.iteration;
                rec.converged = false;
                rec.offblock_ratio = 0.0;
            }
            rec.wall_seconds =
                std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
            report.runs.push_back(rec);
        }
    }

    if (!cfg.out_dir.empty()) {
        const std::filesystem::path dir(cfg.out_dir);
        write_report_csv(report, dir / "report.csv");

        std::string runs_csv =
            "method,repetition,seed,accuracy,iterations,converged,wall_seconds,offblock_ratio\n";
        for (const auto& r : report.runs) {
            runs_csv += std::string(method_name(r.method)) + "," + std::to_string(r.repetition) +
                        "," + std::to_string(r.seed) + "," + fmt_double(r.accuracy) + "," +
                        std::to_string(r.iterations) + "," + (r.converged ? "1" : "0") + "," +
                        fmt_double(r.wall_seconds) + "," + fmt_double(r.offblock_ratio) + "\n";
        }
        write_file_atomic(dir / "runs.csv", runs_csv);
    }
    return report;
}

std::vector<MethodSummary> ExperimentReport::summaries() const {
    std::vector<MethodSummary> out;
    for (Method m : method_order) {
        MethodSummary s{};
        s.method = m;
        std::vector<double> accs;
        double iter_sum = 0.0, conv_sum = 0.0, off_sum = 0.0;
        for (const auto& r : runs) {
            if (r.method != m) continue;
            accs.push_back(r.accuracy);
            iter_sum += r.iterations;
            conv_sum += r.converged ? 1.0 : 0.0;
            off_sum += r.offblock_ratio;
        }
        const auto n = static_cast<double>(accs.size());
        s.repetitions = static_cast<int>(accs.size());
        if (!accs.empty()) {
            double mean = 0.0;
            for (double a : accs) mean += a;
            mean /= n;
            double var = 0.0;
            for (double a : accs) var += (a - mean) * (a - mean);
            s.mean_accuracy = mean;
            s.std_accuracy = accs.size() > 1 ? std::sqrt(var / (n - 1.0)) : 0.0;
            s.mean_iterations = iter_sum / n;
            s.convergence_rate = conv_sum / n;
            s.mean_offblock_ratio = off_sum / n;
        }
        out.push_back(s);
    }
    return out;
}

namespace {

std::string table_from_rows(const std::vector<MethodSummary>& rows, std::uint64_t hash) {
    std::string out;
    char line[256];
    std::snprintf(line, sizeof(line), "%-20s %10s %10s %12s %10s %12s\n", "method", "mean_acc",
                  "std_acc", "mean_iters", "conv_rate", "offblock");
    out += line;
    out += std::string(78, '-') + "\n";
    for (const auto& s : rows) {
        std::snprintf(line, sizeof(line), "%-20s %10.4f %10.4f %12.1f %10.2f %12.4g\n",
                      method_name(s.method), s.mean_accuracy, s.std_accuracy, s.mean_iterations,
                      s.convergence_rate, s.mean_offblock_ratio);
        out += line;
    }
    std::snprintf(line, sizeof(line), "config_hash: %llu\n",
                  static_cast<unsigned long long>(hash));
    out += line;
    return out;
}

} // namespace

std::string report_table(const ExperimentReport& report) {
    return table_from_rows(report.summaries(), report.config_hash);
}

std::string report_table(const ParsedReport& parsed) {
    return table_from_rows(parsed.rows, parsed.config_hash);
}

void write_report_csv(const ExperimentReport& report, const std::filesystem::path& path) {
    std::string out =
        "method,mean_accuracy,std_accuracy,mean_iterations,convergence_rate,"
        "mean_offblock_ratio,repetitions,config_hash\n";
    for (const auto& s : report.summaries()) {
        out += std::string(method_name(s.method)) + "," + fmt_double(s.mean_accuracy) + "," +
               fmt_double(s.std_accuracy) + "," + fmt_double(s.mean_iterations) + "," +
               fmt_double(s.convergence_rate) + "," + fmt_double(s.mean_offblock_ratio) + "," +
               std::to_string(s.repetitions) + "," + std::to_string(report.config_hash) + "\n";
    }
    write_file_atomic(path, out);
}

ParsedReport read_report_csv(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path.string());
    std::string line;
    if (!std::getline(in, line)) throw ParseError(path.string() + ": empty report");

    ParsedReport parsed;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::stringstream ss(line);
        std::string field;
        std::vector<std::string> fields;
        while (std::getline(ss, field, ',')) fields.push_back(field);
        if (fields.size() != 8) {
            throw ParseError(path.string() + ": expected 8 columns, got " +
                             std::to_string(fields.size()));
        }
        MethodSummary s{};
        s.method = method_from_name(fields[0]);
        s.mean_accuracy = std::stod(fields[1]);
        s.std_accuracy = std::stod(fields[2]);
        s.mean_iterations = std::stod(fields[3]);
        s.convergence_rate = std::stod(fields[4]);
        s.mean_offblock_ratio = std::stod(fields[5]);
        s.repetitions = std::stoi(fields[6]);
        parsed.config_hash = std::stoull(fields[7]);
        parsed.rows.push_back(s);
    }
    return parsed;
}

std::vector<ExperimentReport> sweep(const Config& base, const std::string& parameter,
                                    const std::vector<double>& values) {
    if (values.empty()) throw ConfigError("sweep: empty value list");
    if (!is_known_key(parameter)) {
        throw ConfigError("sweep: unknown parameter '" + parameter + "'");
    }

    const std::string out_root = base.get_str("out", "");
    std::vector<ExperimentReport> reports;
    for (std::size_t i = 0; i < values.size(); ++i) {
        Config point = base;
        point.set_double(parameter, values[i]);
        if (!out_root.empty()) {
            point.set("out", out_root + "/" + std::to_string(i));
        }
        reports.push_back(run_experiment(ExperimentConfig::from_config(point)));
    }

    if (!out_root.empty()) {
        std::string csv =
            "parameter,value,method,mean_accuracy,std_accuracy,mean_iterations,"
            "convergence_rate,mean_offblock_ratio\n";
        for (std::size_t i = 0; i < values.size(); ++i) {
            for (const auto& s : reports[i].summaries()) {
                csv += parameter + "," + fmt_double(values[i]) + "," + method_name(s.method) +
                       "," + fmt_double(s.mean_accuracy) + "," + fmt_double(s.std_accuracy) + "," +
                       fmt_double(s.mean_iterations) + "," + fmt_double(s.convergence_rate) + "," +
                       fmt_double(s.mean_offblock_ratio) + "\n";
            }
        }
        write_file_atomic(std::filesystem::path(out_root) / "sweep.csv", csv);
    }
    return reports;
}

void save_model(const ModelBundle& bundle, const std::filesystem::path& dir) {
    std::filesystem::create_directories(dir);
    io::save_matrix(bundle.model.dictionary.atoms, dir / "dictionary.rbm");
    io::save_labels(bundle.model.dictionary.atom_labels, dir / "atom_labels.csv");
    io::save_matrix(bundle.model.Z_train, dir / "Z_train.rbm");
    io::save_matrix(bundle.model.E_train, dir / "E_train.rbm");
    save_classifier(bundle.classifier, dir / "W.rbm", dir / "eta.txt");

    Config meta;
    meta.set("method", method_name(bundle.method));
    meta.set("converged", bundle.model.converged ? "true" : "false");
    meta.set("iterations_used", std::to_string(bundle.model.iterations_used));
    const SolverConfig& sc = bundle.model.config;
    meta.set_double("lambda", sc.lambda);
    meta.set_double("alpha", sc.alpha);
    meta.set_double("beta", sc.beta);
    meta.set_double("gamma", sc.gamma);
    meta.set_double("mu0", sc.mu0);
    meta.set_double("mu_max", sc.mu_max);
    meta.set_double("rho", sc.rho);
    meta.set_double("eps_tol", sc.eps_tol);
    meta.set("max_iters", std::to_string(sc.max_iters));
    meta.set("atoms_per_class", std::to_string(sc.atoms_per_class));
    meta.set("normalize", sc.normalize_columns ? "true" : "false");
    meta.set("seed", std::to_string(sc.seed));
    write_file_atomic(dir / "meta.cfg", meta.canonical_text());
}

ModelBundle load_model(const std::filesystem::path& dir) {
    ModelBundle bundle;
    bundle.model.dictionary.atoms = io::load_matrix(dir / "dictionary.rbm");
    bundle.model.dictionary.atom_labels = io::load_labels(dir / "atom_labels.csv");
    bundle.model.Z_train = io::load_matrix(dir / "Z_train.rbm");
    bundle.model.E_train = io::load_matrix(dir / "E_train.rbm");
    bundle.classifier = load_classifier(dir / "W.rbm", dir / "eta.txt");

    const Config meta = Config::parse_file(dir / "meta.cfg");
    bundle.method = method_from_name(meta.get_str("method", "rbds"));
    bundle.model.converged = meta.get_bool("converged", false);
    bundle.model.iterations_used = meta.get_int("iterations_used", 0);
    SolverConfig& sc = bundle.model.config;
    sc.lambda = meta.get_double("lambda", sc.lambda);
    sc.alpha = meta.get_double("alpha", sc.alpha);
    sc.beta = meta.get_double("beta", sc.beta);
    sc.gamma = meta.get_double("gamma", sc.gamma);
    sc.mu0 = meta.get_double("mu0", sc.mu0);
    sc.mu_max = meta.get_double("mu_max", sc.mu_max);
    sc.rho = meta.get_double("rho", sc.rho);
    sc.eps_tol = meta.get_double("eps_tol", sc.eps_tol);
    sc.max_iters = meta.get_int("max_iters", sc.max_iters);
    sc.atoms_per_class = meta.get_int("atoms_per_class", sc.atoms_per_class);
    sc.normalize_columns = meta.get_bool("normalize", sc.normalize_columns);
    sc.seed = meta.get_u64("seed", 0);
    return bundle;
}

} // namespace rbds
