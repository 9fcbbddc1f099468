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
/**
 * @file model_io.hpp
 * JSON serialization: trained models, run summaries and config files.
 */
#pragma once

#include <json.hpp>

#include <fstream>
#include <stdexcept>
#include <string>

#include "qsnn/fusion/model.hpp"
#include "qsnn/train/trainer.hpp"

namespace qsnn::train {

inline constexpr int kSchemaVersion = 1;

namespace detail {

inline nlohmann::json layer_to_json(const fusion::LinearLayer& l) {
    return {{"rows", l.w.rows},
            {"cols", l.w.cols},
            {"w", l.w.data},
            {"b", l.b}};
}

inline fusion::LinearLayer layer_from_json(const nlohmann::json& j) {
    fusion::LinearLayer l;
    l.w = util::Matrix(j.at("rows").get<int>(), j.at("cols").get<int>());
    l.w.data = j.at("w").get<std::vector<double>>();
    l.b = j.at("b").get<std::vector<double>>();
    if (l.w.data.size() !=
            static_cast<std::size_t>(l.w.rows) * static_cast<std::size_t>(l.w.cols) ||
        l.b.size() != static_cast<std::size_t>(l.w.rows)) {
        throw std::runtime_error("model file: layer shape mismatch");
    }
    return l;
}

inline nlohmann::json lif_to_json(const snn::LIFParams& p) {
    return {{"tau_m", p.tau_m},       {"v_rest", p.v_rest},
            {"v_th", p.v_th},         {"r_m", p.r_m},
            {"dt", p.dt},             {"soft_reset", p.soft_reset},
            {"exp_synapse", p.exp_synapse}, {"tau_syn", p.tau_syn}};
}

}  // namespace detail

inline nlohmann::json config_to_json(const TrainConfig& cfg) {
    return {{"epochs", cfg.epochs},
            {"batch_size", cfg.batch_size},
            {"lr", cfg.lr},
            {"momentum", cfg.momentum},
            {"xi", cfg.xi},
            {"n_qubits", cfg.n_qubits},
            {"hidden", cfg.hidden},
            {"timesteps", cfg.timesteps},
            {"r_max", cfg.r_max},
            {"seed", cfg.seed},
            {"train_k", cfg.train_k},
            {"test_k", cfg.test_k},
            {"freeze_spikes", cfg.freeze_spikes},
            {"shared_theta", cfg.shared_theta},
            {"ring_entangler", cfg.ring_entangler},
            {"lif", detail::lif_to_json(cfg.lif)}};
}

/// Applies the fields present in `j` onto `cfg`. Unknown keys raise an
/// error naming the key, so config-file typos fail fast instead of being
/// silently ignored.
inline void apply_config_json(TrainConfig& cfg, const nlohmann::json& j) {
    for (const auto& [key, value] : j.items()) {
        if (key == "epochs") cfg.epochs = value.get<int>();
        else if (key == "batch_size") cfg.batch_size = value.get<int>();
        else if (key == "lr") cfg.lr = value.get<double>();
        else if (key == "momentum") cfg.momentum = value.get<double>();
        else if (key == "xi") cfg.xi = value.get<double>();
        else if (key == "n_qubits") cfg.n_qubits = value.get<int>();
        else if (key == "hidden") cfg.hidden = value.get<int>();
        else if (key == "timesteps") cfg.timesteps = value.get<int>();
        else if (key == "r_max") cfg.r_max = value.get<double>();
        else if (key == "seed") cfg.seed = value.get<std::uint64_t>();
        else if (key == "train_k") cfg.train_k = value.get<std::size_t>();
        else if (key == "test_k") cfg.test_k = value.get<std::size_t>();
        else if (key == "freeze_spikes") cfg.freeze_spikes = value.get<bool>();
        else if (key == "shared_theta") cfg.shared_theta = value.get<bool>();
        else if (key == "ring_entangler") cfg.ring_entangler = value.get<bool>();
        else if (key == "lif") {
            for (const auto& [lkey, lvalue] : value.items()) {
                if (lkey == "tau_m") cfg.lif.tau_m = lvalue.get<double>();
                else if (lkey == "v_rest") cfg.lif.v_rest = lvalue.get<double>();
                else if (lkey == "v_th") cfg.lif.v_th = lvalue.get<double>();
                else if (lkey == "r_m") cfg.lif.r_m = lvalue.get<double>();
                else if (lkey == "dt") cfg.lif.dt = lvalue.get<double>();
                else if (lkey == "soft_reset") cfg.lif.soft_reset = lvalue.get<bool>();
                else if (lkey == "exp_synapse") cfg.lif.exp_synapse = lvalue.get<bool>();
                else if (lkey == "tau_syn") cfg.lif.tau_syn = lvalue.get<double>();
                else throw std::invalid_argument("config: unknown key lif." + lkey);
            }
        } else {
            throw std::invalid_argument("config: unknown key " + key);
        }
    }
}

inline void save_model_json(const std::string& path,
                            const fusion::HybridModel& m) {
    nlohmann::json j = {
        {"schema_version", kSchemaVersion},
        {"xi", m.xi},
        {"hidden", m.hidden},
        {"circuit",
         {{"n_qubits", m.quantum.spec.n_qubits},
          {"shared_theta", m.quantum.spec.shared_theta},
          {"ring_entangler", m.quantum.spec.ring_entangler}}},
        {"thetas", m.quantum.thetas},
        {"l1", detail::layer_to_json(m.l1)},
        {"readout", detail::layer_to_json(m.quantum.readout)}};
    if (m.hidden > 0) j["l2"] = detail::layer_to_json(m.l2);

    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << j.dump(1, '\t') << '\n';
}

inline fusion::HybridModel load_model_json(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    nlohmann::json j;
    in >> j;
    if (j.at("schema_version").get<int>() != kSchemaVersion) {
        throw std::runtime_error(path + ": unsupported schema_version");
    }
    fusion::HybridModel m;
    m.xi = j.at("xi").get<double>();
    m.hidden = j.at("hidden").get<int>();
    const nlohmann::json& c = j.at("circuit");
    m.quantum.spec = qsim::CircuitSpec::standard(
        c.at("n_qubits").get<int>(), c.at("shared_theta").get<bool>(),
        c.at("ring_entangler").get<bool>());
    m.quantum.thetas = j.at("thetas").get<std::vector<double>>();
    if (m.quantum.thetas.size() !=
        static_cast<std::size_t>(m.quantum.spec.n_params)) {
        throw std::runtime_error(path + ": theta count mismatch");
    }
    m.l1 = detail::layer_from_json(j.at("l1"));
    if (m.hidden > 0) m.l2 = detail::layer_from_json(j.at("l2"));
    m.quantum.readout = detail::layer_from_json(j.at("readout"));
    return m;
}

/// Run summary: config snapshot, per-epoch metrics, final metrics, the
/// confusion matrix as a 10x10 array, and wall time.
inline void write_run_json(const std::string& path, const RunRecord& rec) {
    nlohmann::json epochs = nlohmann::json::array();
    for (const EpochMetrics& m : rec.epochs) {
        epochs.push_back({{"train_acc", m.train_acc},
                          {"test_acc", m.test_acc},
                          {"train_loss", m.train_loss},
                          {"test_loss", m.test_loss}});
    }
    nlohmann::json confusion = nlohmann::json::array();
    for (int t = 0; t < ConfusionMatrix::kClasses; ++t) {
        nlohmann::json row = nlohmann::json::array();
        for (int p = 0; p < ConfusionMatrix::kClasses; ++p) {
            row.push_back(rec.confusion.at(t, p));
        }
        confusion.push_back(row);
    }
    const EpochMetrics& fin = rec.final_metrics();
    nlohmann::json j = {{"schema_version", kSchemaVersion},
                        {"config", config_to_json(rec.config)},
                        {"epochs", epochs},
                        {"final",
                         {{"train_acc", fin.train_acc},
                          {"test_acc", fin.test_acc},
                          {"train_loss", fin.train_loss},
                          {"test_loss", fin.test_loss}}},
                        {"confusion", confusion},
                        {"wall_seconds", rec.wall_seconds}};
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << j.dump(1, '\t') << '\n';
}

}  // namespace qsnn::train
