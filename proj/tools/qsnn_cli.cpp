// Copyright 2026 The qsnn Authors.

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//
// Command-line driver: data fetching, training, evaluation and the
// experiment sweeps, all reproducible from a single seed.

#include <CLI11.hpp>

#include <chrono>
#include <cstdint>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "qsnn/data/fetch.hpp"
#include "qsnn/data/mnist.hpp"
#include "qsnn/data/transforms.hpp"
#include "qsnn/report/csv.hpp"
#include "qsnn/report/svg.hpp"
#include "qsnn/train/model_io.hpp"
#include "qsnn/train/sweeps.hpp"
#include "qsnn/train/trainer.hpp"

namespace fs = std::filesystem;
using namespace qsnn;

namespace {

struct CommonOpts {
    std::string config_path;
    std::string data_dir = "data/mnist-mini";
    std::string out_dir = "runs";
    std::string run_name;  // empty: timestamped

    // Flag values, applied over the config file which is applied over
    // defaults (defaults < file < flags).
    std::optional<std::uint64_t> seed;
    std::optional<double> xi, lr, momentum;
    std::optional<int> qubits, epochs, batch, timesteps, hidden;
    std::optional<std::size_t> train_k, test_k;
    int n_seeds = 1;
};

void add_common_options(CLI::App* cmd, CommonOpts& o, bool with_training) {
    cmd->add_option("--config", o.config_path,
                    "JSON config file (flags take precedence)");
    cmd->add_option("--data-dir", o.data_dir,
                    "directory with the four IDX files (.gz accepted)");
    cmd->add_option("--out", o.out_dir, "output root directory");
    cmd->add_option("--run-name", o.run_name,
                    "name of the run directory (default: timestamped)");
    cmd->add_option("--seed", o.seed, "master seed");
    cmd->add_option("--train-k", o.train_k, "training subset size (0 = all)");
    cmd->add_option("--test-k", o.test_k, "test subset size (0 = all)");
    if (with_training) {
        cmd->add_option("--xi", o.xi, "quantum proportion coefficient [0,1]");
        cmd->add_option("--qubits", o.qubits, "number of qubits");
        cmd->add_option("--epochs", o.epochs, "training epochs");
        cmd->add_option("--lr", o.lr, "learning rate");
        cmd->add_option("--batch", o.batch, "minibatch size");
        cmd->add_option("--timesteps", o.timesteps, "spike-train length T");
        cmd->add_option("--hidden", o.hidden,
                        "hidden width of the classical head (0 = linear)");
        cmd->add_option("--momentum", o.momentum, "SGD momentum");
        cmd->add_option("--seeds", o.n_seeds, "seed repeats for sweeps");
    }
}

/// defaults < config file < flags, validated before any compute.
train::TrainConfig finalize_config(const CommonOpts& o) {
    train::TrainConfig cfg;
    if (!o.config_path.empty()) {
        std::ifstream in(o.config_path);
        if (!in) {
            throw std::runtime_error("cannot open config file " +
                                     o.config_path);
        }
        nlohmann::json j;
        in >> j;
        train::apply_config_json(cfg, j);
    }
    if (o.seed) cfg.seed = *o.seed;
    if (o.xi) cfg.xi = *o.xi;
    if (o.lr) cfg.lr = *o.lr;
    if (o.momentum) cfg.momentum = *o.momentum;
    if (o.qubits) cfg.n_qubits = *o.qubits;
    if (o.epochs) cfg.epochs = *o.epochs;
    if (o.batch) cfg.batch_size = *o.batch;
    if (o.timesteps) cfg.timesteps = *o.timesteps;
    if (o.hidden) cfg.hidden = *o.hidden;
    if (o.train_k) cfg.train_k = *o.train_k;
    if (o.test_k) cfg.test_k = *o.test_k;
    cfg.validate();
    if (o.n_seeds < 1) throw std::invalid_argument("seeds: must be >= 1");
    return cfg;
}

std::string timestamp_name(const std::string& prefix) {
    const std::time_t now = std::time(nullptr);
    std::tm tm{};
    localtime_r(&now, &tm);
    char buf[64];
    std::strftime(buf, sizeof(buf), "%Y%m%d-%H%M%S", &tm);
    return prefix + "-" + buf;
}

fs::path make_run_dir(const CommonOpts& o, const std::string& prefix) {
    const std::string name =
        o.run_name.empty() ? timestamp_name(prefix) : o.run_name;
    const fs::path dir = fs::path(o.out_dir) / name;
    fs::create_directories(dir);
    return dir;
}

void print_effective_config(const train::TrainConfig& cfg,
                            const CommonOpts& o) {
    std::cout << "config: " << train::config_to_json(cfg).dump()
              << "\ndata-dir: " << o.data_dir << "\n";
}

struct LoadedData {
    data::Dataset train;
    data::Dataset test;
};

LoadedData load_data(const CommonOpts& o, const train::TrainConfig& cfg) {
    LoadedData d;
    d.train = data::load_mnist_split(o.data_dir, /*train=*/true);
    d.test = data::load_mnist_split(o.data_dir, /*train=*/false);
    if (cfg.train_k > 0 && cfg.train_k < d.train.size()) {
        d.train = data::subset(d.train, cfg.train_k, cfg.seed);
    }
    if (cfg.test_k > 0 && cfg.test_k < d.test.size()) {
        d.test = data::subset(d.test, cfg.test_k, cfg.seed);
    }
    std::cout << "data: " << d.train.size() << " train / " << d.test.size()
              << " test samples\n";
    return d;
}

void write_curves_svg(const fs::path& path, const train::RunRecord& rec) {
    std::vector<double> xs, tr_acc, te_acc, tr_loss, te_loss;
    for (std::size_t e = 0; e < rec.epochs.size(); ++e) {
        xs.push_back(static_cast<double>(e + 1));
        tr_acc.push_back(rec.epochs[e].train_acc);
        te_acc.push_back(rec.epochs[e].test_acc);
        tr_loss.push_back(rec.epochs[e].train_loss);
        te_loss.push_back(rec.epochs[e].test_loss);
    }
    report::LineChart chart("Training curves", "epoch", "accuracy / loss");
    chart.add_series("train acc", xs, tr_acc);
    chart.add_series("test acc", xs, te_acc);
    chart.add_series("train loss", xs, tr_loss);
    chart.add_series("test loss", xs, te_loss);
    chart.write(path.string());
}

int cmd_train(const CommonOpts& o) {
    const train::TrainConfig cfg = finalize_config(o);
    print_effective_config(cfg, o);
    const LoadedData d = load_data(o, cfg);
    const fs::path dir = make_run_dir(o, "train");

    train::TrainResult result = train::train_model(d.train, d.test, cfg);
    const train::EpochMetrics& fin = result.record.final_metrics();

    train::write_run_json((dir / "run.json").string(), result.record);
    report::write_epochs_csv((dir / "epochs.csv").string(), result.record);
    report::write_confusion_csv((dir / "confusion.csv").string(),
                                result.record.confusion);
    write_curves_svg(dir / "curves.svg", result.record);
    train::save_model_json((dir / "model.json").string(), result.model);

    std::cout << "final: train acc " << fin.train_acc << ", test acc "
              << fin.test_acc << " (" << result.record.wall_seconds
              << " s)\nartifacts: " << dir.string() << "\n";
    return 0;
}

int cmd_eval(const CommonOpts& o, const std::string& model_path) {
    const train::TrainConfig cfg = finalize_config(o);
    print_effective_config(cfg, o);
    if (model_path.empty()) {
        throw std::invalid_argument("eval: --model is required");
    }
    const fusion::HybridModel model = train::load_model_json(model_path);
    data::Dataset test = data::load_mnist_split(o.data_dir, /*train=*/false);
    if (cfg.test_k > 0 && cfg.test_k < test.size()) {
        test = data::subset(test, cfg.test_k, cfg.seed);
    }
    const fs::path dir = make_run_dir(o, "eval");

    const train::EvalResult res =
        train::evaluate(model, train::make_pipeline(cfg), test, cfg.seed);
    report::write_confusion_csv((dir / "confusion.csv").string(),
                                res.confusion);
    nlohmann::json j = {{"schema_version", train::kSchemaVersion},
                        {"model", model_path},
                        {"samples", test.size()},
                        {"accuracy", res.accuracy},
                        {"mean_nll", res.mean_nll}};
    std::ofstream out(dir / "eval.json");
    out << j.dump(1, '\t') << '\n';

    std::cout << "accuracy " << res.accuracy << ", mean NLL " << res.mean_nll
              << "\nartifacts: " << dir.string() << "\n";
    return 0;
}

int cmd_sweep_xi(const CommonOpts& o, std::vector<double> values) {
    train::TrainConfig cfg = finalize_config(o);
    if (values.empty()) throw std::invalid_argument("sweep-xi: empty --values");
    for (double v : values) {
        if (!(v >= 0.0 && v <= 1.0)) {
            throw std::invalid_argument("sweep-xi: value outside [0, 1]");
        }
    }
    print_effective_config(cfg, o);
    const LoadedData d = load_data(o, cfg);
    const fs::path dir = make_run_dir(o, "sweep-xi");

    const std::vector<train::RunRecord> records =
        train::sweep_xi(d.train, d.test, cfg, values, o.n_seeds);
    report::write_xi_sweep_csv((dir / "xi_sweep.csv").string(), records);

    // mean final accuracy per xi across seed repeats
    std::vector<double> mean_train(values.size(), 0.0),
        mean_test(values.size(), 0.0);
    for (std::size_t vi = 0; vi < values.size(); ++vi) {
        for (int r = 0; r < o.n_seeds; ++r) {
            const train::EpochMetrics& m =
                records[vi * o.n_seeds + r].final_metrics();
            mean_train[vi] += m.train_acc / o.n_seeds;
            mean_test[vi] += m.test_acc / o.n_seeds;
        }
    }
    report::LineChart chart("Accuracy vs quantum proportion", "xi",
                            "accuracy");
    chart.add_series("train", values, mean_train);
    chart.add_series("test", values, mean_test);
    chart.write((dir / "xi_sweep.svg").string());

    std::cout << records.size() << " runs\nartifacts: " << dir.string()
              << "\n";
    return 0;
}

int cmd_sweep_qubits(const CommonOpts& o, std::vector<int> values) {
    train::TrainConfig cfg = finalize_config(o);
    if (values.empty()) {
        throw std::invalid_argument("sweep-qubits: empty --values");
    }
    print_effective_config(cfg, o);
    const LoadedData d = load_data(o, cfg);
    const fs::path dir = make_run_dir(o, "sweep-qubits");

    const std::vector<train::RunRecord> records =
        train::sweep_qubits(d.train, d.test, cfg, values, o.n_seeds);
    report::write_qubit_sweep_csv((dir / "qubit_sweep.csv").string(),
                                  records);

    std::vector<double> xs(values.begin(), values.end());
    std::vector<double> mean_train(values.size(), 0.0),
        mean_test(values.size(), 0.0);
    for (std::size_t vi = 0; vi < values.size(); ++vi) {
        for (int r = 0; r < o.n_seeds; ++r) {
            const train::EpochMetrics& m =
                records[vi * o.n_seeds + r].final_metrics();
            mean_train[vi] += m.train_acc / o.n_seeds;
            mean_test[vi] += m.test_acc / o.n_seeds;
        }
    }
    report::LineChart chart("Accuracy vs qubit count", "qubits", "accuracy");
    chart.add_series("train", xs, mean_train);
    chart.add_series("test", xs, mean_test);
    chart.write((dir / "qubit_sweep.svg").string());

    std::cout << records.size() << " runs\nartifacts: " << dir.string()
              << "\n";
    return 0;
}

int cmd_sweep_noise(const CommonOpts& o, const std::string& model_path,
                    const std::string& kind_filter,
                    std::vector<double> levels) {
    train::TrainConfig cfg = finalize_config(o);
    if (levels.empty()) {
        throw std::invalid_argument("sweep-noise: empty --levels");
    }
    for (double l : levels) {
        if (!(l >= 0.0)) {
            throw std::invalid_argument("sweep-noise: negative level");
        }
    }
    std::vector<data::NoiseSpec::Kind> kinds;
    if (kind_filter.empty() || kind_filter == "both") {
        kinds = {data::NoiseSpec::Kind::uniform,
                 data::NoiseSpec::Kind::gaussian};
    } else if (kind_filter == "uniform") {
        kinds = {data::NoiseSpec::Kind::uniform};
    } else if (kind_filter == "gaussian") {
        kinds = {data::NoiseSpec::Kind::gaussian};
    } else {
        throw std::invalid_argument(
            "sweep-noise: --noise must be uniform, gaussian or both");
    }
    print_effective_config(cfg, o);
    const LoadedData d = load_data(o, cfg);
    const fs::path dir = make_run_dir(o, "sweep-noise");
    const train::Pipeline pipe = train::make_pipeline(cfg);

    std::vector<train::NoiseRow> rows;
    if (!model_path.empty()) {
        const fusion::HybridModel model = train::load_model_json(model_path);
        rows = train::sweep_noise(model, pipe, d.test, kinds, levels,
                                  cfg.seed, cfg.seed, cfg.seed);
    } else {
        for (int r = 0; r < o.n_seeds; ++r) {
            train::TrainConfig run_cfg = cfg;
            run_cfg.seed = cfg.seed + static_cast<std::uint64_t>(r);
            std::cout << "training model for seed " << run_cfg.seed << "\n";
            const train::TrainResult res =
                train::train_model(d.train, d.test, run_cfg);
            const std::vector<train::NoiseRow> part = train::sweep_noise(
                res.model, train::make_pipeline(run_cfg), d.test, kinds,
                levels, run_cfg.seed, run_cfg.seed, run_cfg.seed);
            rows.insert(rows.end(), part.begin(), part.end());
        }
    }
    report::write_noise_sweep_csv((dir / "noise_sweep.csv").string(), rows);

    report::LineChart chart("Accuracy vs noise level", "noise level",
                            "accuracy");
    for (const data::NoiseSpec::Kind kind : kinds) {
        std::vector<double> mean(levels.size(), 0.0);
        int repeats = 0;
        for (const train::NoiseRow& row : rows) {
            if (row.kind != kind) continue;
            for (std::size_t li = 0; li < levels.size(); ++li) {
                if (row.level == levels[li]) mean[li] += row.accuracy;
            }
        }
        repeats = static_cast<int>(rows.size() / (kinds.size() * levels.size()));
        for (double& m : mean) m /= std::max(repeats, 1);
        chart.add_series(data::noise_kind_name(kind), levels, mean);
    }
    chart.write((dir / "noise_sweep.svg").string());

    std::cout << rows.size() << " rows\nartifacts: " << dir.string() << "\n";
    return 0;
}

int cmd_fetch(const std::string& cache_dir, const std::string& mirror,
              const std::string& sums_path) {
    std::vector<data::FetchItem> items = data::mnist_manifest();
    if (!sums_path.empty()) {
        // Override manifest: lines of "<md5-hex> <filename>".
        std::ifstream in(sums_path);
        if (!in) {
            throw std::runtime_error("cannot open sums file " + sums_path);
        }
        items.clear();
        std::string md5, name;
        while (in >> md5 >> name) items.push_back({name, md5});
        if (items.empty()) {
            throw std::runtime_error("sums file " + sums_path + " is empty");
        }
    }
    const data::FetchResult res =
        data::fetch_files(mirror, cache_dir, items, std::cout);
    std::cout << res.downloaded << " downloaded, " << res.up_to_date
              << " up to date\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"hybrid spiking + variational-quantum image classifier"};
    app.require_subcommand(1);

    CommonOpts train_o, eval_o, xi_o, qubits_o, noise_o;
    std::string eval_model, noise_model, noise_kind = "both";
    std::vector<double> xi_values = {0.0, 0.2, 0.4, 0.6, 0.8, 1.0};
    std::vector<int> qubit_values = {5, 6, 7};
    std::vector<double> noise_levels = {0.0, 0.1, 0.2, 0.4};
    std::string cache_dir = "data/mnist";
    std::string mirror = data::kDefaultMirror;
    std::string sums_path;

    CLI::App* fetch = app.add_subcommand(
        "fetch", "download the canonical dataset into a cache directory");
    fetch->add_option("--cache-dir", cache_dir, "download directory");
    fetch->add_option("--mirror", mirror, "base URL of the mirror");
    fetch->add_option("--sums", sums_path,
                      "checksum override file (lines: <md5> <filename>)");

    CLI::App* tr = app.add_subcommand("train", "train one hybrid model");
    add_common_options(tr, train_o, true);

    CLI::App* ev =
        app.add_subcommand("eval", "evaluate a saved model on the test split");
    add_common_options(ev, eval_o, false);
    ev->add_option("--model", eval_model, "model.json produced by train")
        ->required();

    CLI::App* sx = app.add_subcommand(
        "sweep-xi", "train across quantum-proportion values");
    add_common_options(sx, xi_o, true);
    sx->add_option("--values", xi_values, "xi values to sweep");

    CLI::App* sq =
        app.add_subcommand("sweep-qubits", "train across qubit counts");
    add_common_options(sq, qubits_o, true);
    sq->add_option("--values", qubit_values, "qubit counts to sweep");

    CLI::App* sn = app.add_subcommand(
        "sweep-noise", "evaluate under uniform/gaussian pixel noise");
    add_common_options(sn, noise_o, true);
    sn->add_option("--model", noise_model,
                   "saved model to evaluate (default: train inline)");
    sn->add_option("--noise", noise_kind, "uniform, gaussian or both");
    sn->add_option("--levels", noise_levels, "noise levels to sweep");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*fetch) return cmd_fetch(cache_dir, mirror, sums_path);
        if (*tr) return cmd_train(train_o);
        if (*ev) return cmd_eval(eval_o, eval_model);
        if (*sx) return cmd_sweep_xi(xi_o, xi_values);
        if (*sq) return cmd_sweep_qubits(qubits_o, qubit_values);
        if (*sn) return cmd_sweep_noise(noise_o, noise_model, noise_kind,
                                        noise_levels);
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid config: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
