// Copyright 2026 The Stylo Authors. All Rights Reserved.
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//     http://www.apache.org/licenses/LICENSE-2.0
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "stylo/models.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <istream>
#include <limits>
#include <numeric>
#include <ostream>
#include <sstream>
#include <unordered_map>

#include "stylo/error.hpp"
#include "stylo/io.hpp"
#include "stylo/parallel.hpp"
#include "stylo/rng.hpp"

namespace stylo {

namespace {

constexpr double kHessianFloor = 1e-16;
constexpr double kProbClamp = 1e-15;

double sigmoid(double raw) { return 1.0 / (1.0 + std::exp(-raw)); }

void check_training_inputs(const Matrix& X, std::span<const int> y) {
    if (X.rows == 0 || X.rows != y.size()) {
        throw Error(ErrorKind::kInvalidData, "training data and labels disagree in size");
    }
    for (const double v : X.data) {
        if (!std::isfinite(v)) {
            throw Error(ErrorKind::kInvalidData, "non-finite value in training features");
        }
    }
    bool has[2] = {false, false};
    for (const int label : y) {
        if (label != 0 && label != 1) {
            throw Error(ErrorKind::kInvalidData, "labels must be 0 or 1");
        }
        has[label] = true;
    }
    if (!has[0] || !has[1]) {
        throw Error(ErrorKind::kInvalidData, "training labels must contain both classes");
    }
}

// ---------------------------------------------------------------------------
// Random forest
// ---------------------------------------------------------------------------

double gini(double w0, double w1) {
    const double total = w0 + w1;
    if (total <= 0.0) return 0.0;
    const double p0 = w0 / total;
    const double p1 = w1 / total;
    return 1.0 - p0 * p0 - p1 * p1;
}

struct ForestContext {
    const Matrix& X;
    std::span<const int> y;
    const ClassWeights& w;
    const ForestParams& params;
    std::size_t candidate_features;
};

struct BestSplit {
    double gain = 0.0;
    std::int32_t feature = -1;
    double threshold = 0.0;

    bool beats(double g, std::int32_t f, double t) const {
        if (g != gain) return g > gain;
        if (f != feature) return f < feature;
        return t < threshold;
    }
};

std::int32_t grow_forest_node(const ForestContext& ctx, Tree& tree,
                              std::vector<std::uint32_t>& samples, Rng& rng, std::size_t depth) {
    double w0 = 0.0;
    double w1 = 0.0;
    for (const auto i : samples) {
        if (ctx.y[i] == 0) {
            w0 += ctx.w.not_troll;
        } else {
            w1 += ctx.w.troll;
        }
    }
    const double total_weight = w0 + w1;

    const auto make_leaf = [&]() -> std::int32_t {
        TreeNode leaf;
        leaf.value = {w0 / total_weight, w1 / total_weight};
        tree.nodes.push_back(leaf);
        return static_cast<std::int32_t>(tree.nodes.size() - 1);
    };

    if (depth >= ctx.params.max_depth || samples.size() < ctx.params.min_sample_split ||
        w0 == 0.0 || w1 == 0.0) {
        return make_leaf();
    }

    // Sample candidate features without replacement.
    std::vector<std::uint32_t> features(ctx.X.cols);
    std::iota(features.begin(), features.end(), 0);
    const std::size_t k = std::min(ctx.candidate_features, features.size());
    for (std::size_t i = 0; i < k; ++i) {
        const std::size_t j = static_cast<std::size_t>(
            rng.next_int(static_cast<std::int64_t>(i), static_cast<std::int64_t>(features.size()) - 1));
        std::swap(features[i], features[j]);
    }

    const double parent_gini = gini(w0, w1);
    BestSplit best;
    std::vector<std::pair<double, std::uint32_t>> order(samples.size());
    for (std::size_t f = 0; f < k; ++f) {
        const std::uint32_t feature = features[f];
        for (std::size_t s = 0; s < samples.size(); ++s) {
            order[s] = {ctx.X.at(samples[s], feature), samples[s]};
        }
        std::sort(order.begin(), order.end());
        double left0 = 0.0;
        double left1 = 0.0;
        for (std::size_t s = 0; s + 1 < order.size(); ++s) {
            const auto i = order[s].second;
            if (ctx.y[i] == 0) {
                left0 += ctx.w.not_troll;
            } else {
                left1 += ctx.w.troll;
            }
            if (order[s + 1].first <= order[s].first) continue;  // not a boundary
            const std::size_t left_count = s + 1;
            const std::size_t right_count = order.size() - left_count;
            if (left_count < ctx.params.min_sample_leaf ||
                right_count < ctx.params.min_sample_leaf) {
                continue;
            }
            const double threshold = (order[s].first + order[s + 1].first) / 2.0;
            const double lw = left0 + left1;
            const double rw = total_weight - lw;
            const double gain = parent_gini - (lw / total_weight) * gini(left0, left1) -
                                (rw / total_weight) * gini(w0 - left0, w1 - left1);
            if (best.beats(gain, static_cast<std::int32_t>(feature), threshold)) {
                best = {gain, static_cast<std::int32_t>(feature), threshold};
            }
        }
    }
    if (best.feature < 0 || best.gain <= 0.0) return make_leaf();

    std::vector<std::uint32_t> left_samples, right_samples;
    left_samples.reserve(samples.size());
    right_samples.reserve(samples.size());
    for (const auto i : samples) {
        if (ctx.X.at(i, static_cast<std::size_t>(best.feature)) <= best.threshold) {
            left_samples.push_back(i);
        } else {
            right_samples.push_back(i);
        }
    }
    samples.clear();
    samples.shrink_to_fit();

    TreeNode node;
    node.feature = best.feature;
    node.threshold = best.threshold;
    tree.nodes.push_back(node);
    const auto index = static_cast<std::int32_t>(tree.nodes.size() - 1);
    const auto left = grow_forest_node(ctx, tree, left_samples, rng, depth + 1);
    const auto right = grow_forest_node(ctx, tree, right_samples, rng, depth + 1);
    tree.nodes[index].left = left;
    tree.nodes[index].right = right;
    return index;
}

std::size_t max_features_count(std::size_t columns, MaxFeatures mode) {
    double k = 0.0;
    switch (mode) {
        case MaxFeatures::kSqrt:
            k = std::sqrt(static_cast<double>(columns));
            break;
        case MaxFeatures::kLog:
            k = std::log2(static_cast<double>(columns));
            break;
    }
    const auto count = static_cast<std::size_t>(std::floor(k));
    return std::clamp<std::size_t>(count, 1, columns);
}

// ---------------------------------------------------------------------------
// Gradient boosting
// ---------------------------------------------------------------------------

struct BoostNode {
    double g_sum = 0.0;
    double h_sum = 0.0;
    std::int32_t tree_index = -1;
    BestSplit best;
    double best_gl = 0.0;
    double best_hl = 0.0;
    bool active = false;
};

double split_gain(double gl, double hl, double gr, double hr, double gamma) {
    const double parent = (gl + gr) * (gl + gr) / std::max(hl + hr, kHessianFloor);
    const double lhs = gl * gl / std::max(hl, kHessianFloor);
    const double rhs = gr * gr / std::max(hr, kHessianFloor);
    return 0.5 * (lhs + rhs - parent) - gamma;
}

Tree build_boost_tree(const Matrix& X, const std::vector<std::vector<std::uint32_t>>& sorted_idx,
                      std::span<const double> g, std::span<const double> h,
                      const BoostParams& params, std::vector<std::int32_t>& node_of) {
    Tree tree;
    std::vector<BoostNode> frontier(1);
    frontier[0].active = true;
    for (std::size_t i = 0; i < node_of.size(); ++i) {
        node_of[i] = 0;
        frontier[0].g_sum += g[i];
        frontier[0].h_sum += h[i];
    }
    tree.nodes.emplace_back();
    frontier[0].tree_index = 0;

    struct ScanState {
        double gl = 0.0;
        double hl = 0.0;
        double prev = 0.0;
        bool has_prev = false;
    };

    for (std::size_t level = 0; level < params.max_depth && !frontier.empty(); ++level) {
        // Find the best split of every frontier node in one presorted pass
        // per feature.
        std::vector<ScanState> states(frontier.size());
        for (std::size_t f = 0; f < X.cols; ++f) {
            std::fill(states.begin(), states.end(), ScanState{});
            for (const auto i : sorted_idx[f]) {
                const auto local = node_of[i];
                if (local < 0) continue;  // already in a finished leaf
                auto& node = frontier[static_cast<std::size_t>(local)];
                auto& state = states[static_cast<std::size_t>(local)];
                const double value = X.at(i, f);
                if (state.has_prev && value > state.prev) {
                    const double threshold = (state.prev + value) / 2.0;
                    const double gain =
                        split_gain(state.gl, state.hl, node.g_sum - state.gl,
                                   node.h_sum - state.hl, params.gamma);
                    if (gain > 0.0 &&
                        node.best.beats(gain, static_cast<std::int32_t>(f), threshold)) {
                        node.best = {gain, static_cast<std::int32_t>(f), threshold};
                        node.best_gl = state.gl;
                        node.best_hl = state.hl;
                    }
                }
                state.gl += g[i];
                state.hl += h[i];
                state.prev = value;
                state.has_prev = true;
            }
        }

        std::vector<BoostNode> next;
        std::vector<std::int32_t> child_base(frontier.size(), -1);
        for (std::size_t nd = 0; nd < frontier.size(); ++nd) {
            auto& node = frontier[nd];
            auto& tree_node = tree.nodes[static_cast<std::size_t>(node.tree_index)];
            if (node.best.feature < 0) {
                tree_node.value[0] = -node.g_sum / std::max(node.h_sum, kHessianFloor) *
                                     params.learning_rate;
                continue;
            }
            tree_node.feature = node.best.feature;
            tree_node.threshold = node.best.threshold;
            child_base[nd] = static_cast<std::int32_t>(next.size());
            BoostNode left;
            left.g_sum = node.best_gl;
            left.h_sum = node.best_hl;
            left.active = true;
            BoostNode right;
            right.g_sum = node.g_sum - node.best_gl;
            right.h_sum = node.h_sum - node.best_hl;
            right.active = true;
            tree_node.left = static_cast<std::int32_t>(tree.nodes.size());
            tree.nodes.emplace_back();
            left.tree_index = tree_node.left;
            tree_node.right = static_cast<std::int32_t>(tree.nodes.size());
            tree.nodes.emplace_back();
            right.tree_index = tree_node.right;
            next.push_back(left);
            next.push_back(right);
        }

        // Re-home samples: -1 marks membership in a finished leaf.
        for (std::size_t i = 0; i < node_of.size(); ++i) {
            const auto local = node_of[i];
            if (local < 0) continue;
            const auto& node = frontier[static_cast<std::size_t>(local)];
            if (node.best.feature < 0) {
                node_of[i] = -1 - node.tree_index;  // remember the leaf for the raw update
                continue;
            }
            const bool go_left =
                X.at(i, static_cast<std::size_t>(node.best.feature)) <= node.best.threshold;
            node_of[i] = child_base[static_cast<std::size_t>(local)] + (go_left ? 0 : 1);
        }
        frontier = std::move(next);
    }

    // Depth limit reached: everything still on the frontier becomes a leaf.
    for (auto& node : frontier) {
        auto& tree_node = tree.nodes[static_cast<std::size_t>(node.tree_index)];
        tree_node.value[0] =
            -node.g_sum / std::max(node.h_sum, kHessianFloor) * params.learning_rate;
    }
    for (std::size_t i = 0; i < node_of.size(); ++i) {
        const auto local = node_of[i];
        if (local >= 0) {
            node_of[i] = -1 - frontier[static_cast<std::size_t>(local)].tree_index;
        }
    }
    // Translate back to tree node ids.
    for (auto& id : node_of) id = -1 - id;
    return tree;
}

double weighted_log_loss(std::span<const double> raw, std::span<const int> y,
                         std::span<const double> sample_weight) {
    double loss = 0.0;
    double weight_sum = 0.0;
    for (std::size_t i = 0; i < raw.size(); ++i) {
        double p = sigmoid(raw[i]);
        p = std::clamp(p, kProbClamp, 1.0 - kProbClamp);
        loss -= sample_weight[i] * (y[i] == 1 ? std::log(p) : std::log(1.0 - p));
        weight_sum += sample_weight[i];
    }
    return loss / weight_sum;
}

// ---------------------------------------------------------------------------
// Serialization helpers
// ---------------------------------------------------------------------------

std::string fingerprint_hex(std::uint64_t fp) {
    char buffer[20];
    std::snprintf(buffer, sizeof(buffer), "%016llx", static_cast<unsigned long long>(fp));
    return buffer;
}

std::uint64_t parse_fingerprint(const std::string& hex) {
    char* end = nullptr;
    const auto value = std::strtoull(hex.c_str(), &end, 16);
    if (end != hex.c_str() + hex.size() || hex.empty()) {
        throw Error(ErrorKind::kInvalidData, "bad fingerprint: " + hex);
    }
    return value;
}

}  // namespace

void ForestParams::validate() const {
    if (estimators < 1) throw Error(ErrorKind::kUsage, "forest estimators must be >= 1");
    if (min_sample_split < 2) throw Error(ErrorKind::kUsage, "min_sample_split must be >= 2");
    if (min_sample_leaf < 1) throw Error(ErrorKind::kUsage, "min_sample_leaf must be >= 1");
    if (max_depth < 1) throw Error(ErrorKind::kUsage, "max_depth must be >= 1");
}

void BoostParams::validate() const {
    if (!(learning_rate > 0.0)) throw Error(ErrorKind::kUsage, "learning_rate must be > 0");
    if (gamma < 0.0) throw Error(ErrorKind::kUsage, "gamma must be >= 0");
    if (max_depth < 1) throw Error(ErrorKind::kUsage, "max_depth must be >= 1");
}

const TreeNode& Tree::find_leaf(std::span<const double> row) const {
    std::size_t index = 0;
    while (nodes[index].feature >= 0) {
        const auto& node = nodes[index];
        index = static_cast<std::size_t>(
            row[static_cast<std::size_t>(node.feature)] <= node.threshold ? node.left
                                                                          : node.right);
    }
    return nodes[index];
}

std::size_t Tree::depth() const {
    std::vector<std::pair<std::size_t, std::size_t>> stack{{0, 0}};
    std::size_t deepest = 0;
    while (!stack.empty()) {
        const auto [index, depth] = stack.back();
        stack.pop_back();
        deepest = std::max(deepest, depth);
        const auto& node = nodes[index];
        if (node.feature >= 0) {
            stack.push_back({static_cast<std::size_t>(node.left), depth + 1});
            stack.push_back({static_cast<std::size_t>(node.right), depth + 1});
        }
    }
    return deepest;
}

TrainedModel train_random_forest(const Matrix& X, std::span<const int> y, const ClassWeights& w,
                                 const ForestParams& params, std::uint64_t schema_fingerprint,
                                 std::size_t threads) {
    params.validate();
    check_training_inputs(X, y);

    TrainedModel model;
    model.kind = ModelKind::kForest;
    model.params = params;
    model.schema_fingerprint = schema_fingerprint;
    model.schema_width = X.cols;
    model.trees.resize(params.estimators);

    ForestContext ctx{X, y, w, params, max_features_count(X.cols, params.max_features)};
    parallel_for(params.estimators, threads, [&](std::size_t t) {
        Rng rng(Rng::derive(params.seed, t));
        std::vector<std::uint32_t> bootstrap(X.rows);
        for (auto& index : bootstrap) {
            index = static_cast<std::uint32_t>(
                rng.next_int(0, static_cast<std::int64_t>(X.rows) - 1));
        }
        Tree tree;
        grow_forest_node(ctx, tree, bootstrap, rng, 0);
        model.trees[t] = std::move(tree);
    });
    return model;
}

TrainedModel train_gbt(const Matrix& X, std::span<const int> y, const ClassWeights& w,
                       const BoostParams& params, std::uint64_t schema_fingerprint) {
    params.validate();
    check_training_inputs(X, y);
    const std::size_t n = X.rows;

    std::vector<double> sample_weight(n);
    double w0 = 0.0;
    double w1 = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        sample_weight[i] = w.of(y[i]);
        (y[i] == 1 ? w1 : w0) += sample_weight[i];
    }
    const double positive_rate = std::clamp(w1 / (w0 + w1), kProbClamp, 1.0 - kProbClamp);

    TrainedModel model;
    model.kind = ModelKind::kBoost;
    model.params = params;
    model.schema_fingerprint = schema_fingerprint;
    model.schema_width = X.cols;
    model.base_score = std::log(positive_rate / (1.0 - positive_rate));

    std::vector<std::vector<std::uint32_t>> sorted_idx(X.cols);
    for (std::size_t f = 0; f < X.cols; ++f) {
        auto& order = sorted_idx[f];
        order.resize(n);
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
            const double va = X.at(a, f);
            const double vb = X.at(b, f);
            if (va != vb) return va < vb;
            return a < b;
        });
    }

    std::vector<double> raw(n, model.base_score);
    std::vector<double> g(n), h(n);
    std::vector<std::int32_t> node_of(n);
    model.training_loss.push_back(weighted_log_loss(raw, y, sample_weight));
    model.trees.reserve(params.estimators);
    for (std::size_t round = 0; round < params.estimators; ++round) {
        for (std::size_t i = 0; i < n; ++i) {
            const double p = std::clamp(sigmoid(raw[i]), kProbClamp, 1.0 - kProbClamp);
            g[i] = sample_weight[i] * (p - static_cast<double>(y[i]));
            h[i] = sample_weight[i] * p * (1.0 - p);
        }
        Tree tree = build_boost_tree(X, sorted_idx, g, h, params, node_of);
        for (std::size_t i = 0; i < n; ++i) {
            raw[i] += tree.nodes[static_cast<std::size_t>(node_of[i])].value[0];
        }
        model.trees.push_back(std::move(tree));

        const double loss = weighted_log_loss(raw, y, sample_weight);
        if (loss > model.training_loss.back() + 1e-9) {
            throw Error(ErrorKind::kInternal,
                        "boosting log-loss increased at round " + std::to_string(round));
        }
        model.training_loss.push_back(loss);
    }
    return model;
}

Matrix predict_proba(const TrainedModel& model, const Matrix& X) {
    if (X.cols != model.schema_width) {
        throw Error(ErrorKind::kInvalidData, "prediction features have wrong width");
    }
    Matrix proba(X.rows, 2);
    if (model.kind == ModelKind::kForest) {
        const double tree_count = static_cast<double>(model.trees.size());
        for (std::size_t r = 0; r < X.rows; ++r) {
            const auto row = X.row(r);
            double p0 = 0.0;
            double p1 = 0.0;
            for (const auto& tree : model.trees) {
                const auto& leaf = tree.find_leaf(row);
                p0 += leaf.value[0];
                p1 += leaf.value[1];
            }
            proba.at(r, 0) = p0 / tree_count;
            proba.at(r, 1) = p1 / tree_count;
        }
    } else {
        for (std::size_t r = 0; r < X.rows; ++r) {
            const auto row = X.row(r);
            double raw = model.base_score;
            for (const auto& tree : model.trees) raw += tree.find_leaf(row).value[0];
            const double p = sigmoid(raw);
            proba.at(r, 0) = 1.0 - p;
            proba.at(r, 1) = p;
        }
    }
    return proba;
}

Matrix soft_vote(const VotingEnsemble& ensemble, const Matrix& X) {
    if (ensemble.members.empty() || ensemble.members.size() != ensemble.weights.size()) {
        throw Error(ErrorKind::kInvalidData, "ensemble members and weights disagree");
    }
    double weight_sum = 0.0;
    for (const double weight : ensemble.weights) {
        if (weight < 0.0) {
            throw Error(ErrorKind::kInvalidData, "ensemble weights must be non-negative");
        }
        weight_sum += weight;
    }
    if (weight_sum <= 0.0) {
        throw Error(ErrorKind::kInvalidData, "ensemble weights are all zero");
    }
    for (const auto& member : ensemble.members) {
        if (member.schema_fingerprint != ensemble.members[0].schema_fingerprint) {
            throw Error(ErrorKind::kInvalidData, "ensemble members trained on different schemas");
        }
    }
    Matrix total(X.rows, 2);
    for (std::size_t m = 0; m < ensemble.members.size(); ++m) {
        if (ensemble.weights[m] == 0.0) continue;
        const Matrix proba = predict_proba(ensemble.members[m], X);
        const double share = ensemble.weights[m] / weight_sum;
        for (std::size_t i = 0; i < proba.data.size(); ++i) {
            total.data[i] += share * proba.data[i];
        }
    }
    return total;
}

void write_model(std::ostream& out, const TrainedModel& model) {
    out << "stylo.model v1\n";
    out << "kind " << (model.kind == ModelKind::kForest ? "forest" : "boost") << "\n";
    out << "schema_fingerprint " << fingerprint_hex(model.schema_fingerprint) << "\n";
    out << "schema_width " << model.schema_width << "\n";
    if (model.kind == ModelKind::kForest) {
        const auto& p = std::get<ForestParams>(model.params);
        out << "params estimators=" << p.estimators << " max_features="
            << (p.max_features == MaxFeatures::kSqrt ? "sqrt" : "log")
            << " max_depth=" << p.max_depth << " min_sample_leaf=" << p.min_sample_leaf
            << " min_sample_split=" << p.min_sample_split << " seed=" << p.seed << "\n";
    } else {
        const auto& p = std::get<BoostParams>(model.params);
        out << "params estimators=" << p.estimators << " max_depth=" << p.max_depth
            << " learning_rate=" << format_double(p.learning_rate)
            << " gamma=" << format_double(p.gamma) << " seed=" << p.seed << "\n";
    }
    out << "base_score " << format_double(model.base_score) << "\n";
    out << "trees " << model.trees.size() << "\n";
    for (const auto& tree : model.trees) {
        out << "tree " << tree.nodes.size() << "\n";
        for (const auto& node : tree.nodes) {
            out << "n " << node.feature << ' ' << format_double(node.threshold) << ' '
                << node.left << ' ' << node.right << ' ' << format_double(node.value[0]) << ' '
                << format_double(node.value[1]) << "\n";
        }
    }
}

namespace {

std::unordered_map<std::string, std::string> parse_kv(const std::string& text) {
    std::unordered_map<std::string, std::string> kv;
    std::istringstream in(text);
    std::string item;
    while (in >> item) {
        const auto eq = item.find('=');
        if (eq == std::string::npos) {
            throw Error(ErrorKind::kInvalidData, "expected key=value, got: " + item);
        }
        kv[item.substr(0, eq)] = item.substr(eq + 1);
    }
    return kv;
}

}  // namespace

TrainedModel read_model(std::istream& in) {
    std::string line;
    if (!std::getline(in, line) || line != "stylo.model v1") {
        throw Error(ErrorKind::kInvalidData, "unrecognized model format");
    }
    TrainedModel model;
    std::string tag, value;
    in >> tag >> value;
    if (tag != "kind" || (value != "forest" && value != "boost")) {
        throw Error(ErrorKind::kInvalidData, "malformed model: kind");
    }
    model.kind = value == "forest" ? ModelKind::kForest : ModelKind::kBoost;
    in >> tag >> value;
    if (tag != "schema_fingerprint") throw Error(ErrorKind::kInvalidData, "malformed model");
    model.schema_fingerprint = parse_fingerprint(value);
    in >> tag >> model.schema_width;
    if (tag != "schema_width") throw Error(ErrorKind::kInvalidData, "malformed model");
    in >> std::ws;
    if (!std::getline(in, line) || line.rfind("params ", 0) != 0) {
        throw Error(ErrorKind::kInvalidData, "malformed model: params");
    }
    const auto kv = parse_kv(line.substr(7));
    const auto need = [&](const char* key) -> const std::string& {
        const auto it = kv.find(key);
        if (it == kv.end()) {
            throw Error(ErrorKind::kInvalidData, std::string("model params missing ") + key);
        }
        return it->second;
    };
    if (model.kind == ModelKind::kForest) {
        ForestParams p;
        p.estimators = parse_uint(need("estimators"));
        p.max_features = need("max_features") == "log" ? MaxFeatures::kLog : MaxFeatures::kSqrt;
        p.max_depth = parse_uint(need("max_depth"));
        p.min_sample_leaf = parse_uint(need("min_sample_leaf"));
        p.min_sample_split = parse_uint(need("min_sample_split"));
        p.seed = parse_uint(need("seed"));
        model.params = p;
    } else {
        BoostParams p;
        p.estimators = parse_uint(need("estimators"));
        p.max_depth = parse_uint(need("max_depth"));
        p.learning_rate = parse_double(need("learning_rate"));
        p.gamma = parse_double(need("gamma"));
        p.seed = parse_uint(need("seed"));
        model.params = p;
    }
    in >> tag >> value;
    if (tag != "base_score") throw Error(ErrorKind::kInvalidData, "malformed model");
    model.base_score = parse_double(value);
    std::size_t tree_count = 0;
    in >> tag >> tree_count;
    if (tag != "trees") throw Error(ErrorKind::kInvalidData, "malformed model");
    model.trees.resize(tree_count);
    for (auto& tree : model.trees) {
        std::size_t node_count = 0;
        in >> tag >> node_count;
        if (tag != "tree") throw Error(ErrorKind::kInvalidData, "malformed model");
        tree.nodes.resize(node_count);
        for (auto& node : tree.nodes) {
            std::string threshold_text, v0, v1;
            in >> tag >> node.feature >> threshold_text >> node.left >> node.right >> v0 >> v1;
            if (tag != "n" || !in) throw Error(ErrorKind::kInvalidData, "malformed model tree");
            node.threshold = parse_double(threshold_text);
            node.value[0] = parse_double(v0);
            node.value[1] = parse_double(v1);
        }
    }
    return model;
}

void save_model(const TrainedModel& model, const std::filesystem::path& path) {
    std::ostringstream out;
    write_model(out, model);
    atomic_write_file(path, out.str());
}

TrainedModel load_model(const std::filesystem::path& path) {
    std::istringstream in(read_file(path));
    return read_model(in);
}

void save_ensemble(const VotingEnsemble& ensemble, const std::filesystem::path& path) {
    std::ostringstream out;
    out << "stylo.ensemble v1\n";
    out << "members " << ensemble.members.size() << "\n";
    out << "weights";
    for (const double weight : ensemble.weights) out << ' ' << format_double(weight);
    out << "\n";
    for (const auto& member : ensemble.members) write_model(out, member);
    atomic_write_file(path, out.str());
}

VotingEnsemble load_ensemble(const std::filesystem::path& path) {
    std::istringstream in(read_file(path));
    std::string line;
    if (!std::getline(in, line) || line != "stylo.ensemble v1") {
        throw Error(ErrorKind::kInvalidData, "unrecognized ensemble file: " + path.string());
    }
    std::string tag;
    std::size_t count = 0;
    in >> tag >> count;
    if (tag != "members") throw Error(ErrorKind::kInvalidData, "malformed ensemble");
    VotingEnsemble ensemble;
    ensemble.weights.resize(count);
    in >> tag;
    if (tag != "weights") throw Error(ErrorKind::kInvalidData, "malformed ensemble");
    for (auto& weight : ensemble.weights) {
        std::string text;
        in >> text;
        weight = parse_double(text);
    }
    in >> std::ws;
    ensemble.members.reserve(count);
    for (std::size_t m = 0; m < count; ++m) {
        ensemble.members.push_back(read_model(in));
        in >> std::ws;
    }
    return ensemble;
}

}  // namespace stylo
