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

#include "stylo/burrows.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <unordered_map>

#include "stylo/error.hpp"
#include "stylo/io.hpp"

namespace stylo {

namespace {

void count_word_tokens(const AuthorCorpus& corpus,
                       std::unordered_map<std::string, std::uint64_t>& counts,
                       std::uint64_t& total) {
    for (const auto& post : corpus.posts) {
        for (auto& token : tokenize(post)) {
            if (token.token_class != TokenClass::kWord) continue;
            ++counts[std::move(token.text)];
            ++total;
        }
    }
}

}  // namespace

std::vector<std::string> fit_vocabulary(std::span<const AuthorCorpus> corpora, std::size_t n) {
    if (n == 0) {
        throw Error(ErrorKind::kUsage, "vocabulary size must be at least 1");
    }
    std::unordered_map<std::string, std::uint64_t> counts;
    std::uint64_t total = 0;
    for (const auto& corpus : corpora) count_word_tokens(corpus, counts, total);
    if (counts.empty()) {
        throw Error(ErrorKind::kInvalidData, "corpus contains no word tokens");
    }
    std::vector<std::pair<std::string, std::uint64_t>> entries(counts.begin(), counts.end());
    std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second > b.second;
        return a.first < b.first;
    });
    const std::size_t keep = std::min(n, entries.size());
    std::vector<std::string> vocabulary;
    vocabulary.reserve(keep);
    for (std::size_t i = 0; i < keep; ++i) vocabulary.push_back(std::move(entries[i].first));
    return vocabulary;
}

std::vector<double> author_profile(const AuthorCorpus& corpus,
                                   std::span<const std::string> vocabulary) {
    std::unordered_map<std::string, std::uint64_t> counts;
    std::uint64_t total = 0;
    count_word_tokens(corpus, counts, total);
    std::vector<double> profile(vocabulary.size(), 0.0);
    if (total == 0) return profile;
    for (std::size_t i = 0; i < vocabulary.size(); ++i) {
        if (auto it = counts.find(vocabulary[i]); it != counts.end()) {
            profile[i] = static_cast<double>(it->second) / static_cast<double>(total);
        }
    }
    return profile;
}

BurrowsModel fit_z_model(std::vector<std::string> vocabulary,
                         std::span<const std::vector<double>> profiles) {
    if (profiles.empty()) {
        throw Error(ErrorKind::kInvalidData, "cannot fit: no author profiles");
    }
    const std::size_t n = vocabulary.size();
    for (const auto& profile : profiles) {
        if (profile.size() != n) {
            throw Error(ErrorKind::kInternal, "profile width does not match vocabulary");
        }
    }
    BurrowsModel model;
    model.vocabulary = std::move(vocabulary);
    model.mu.assign(n, 0.0);
    model.sigma.assign(n, 0.0);
    const double count = static_cast<double>(profiles.size());
    for (const auto& profile : profiles) {
        for (std::size_t i = 0; i < n; ++i) model.mu[i] += profile[i];
    }
    for (std::size_t i = 0; i < n; ++i) model.mu[i] /= count;
    for (const auto& profile : profiles) {
        for (std::size_t i = 0; i < n; ++i) {
            const double d = profile[i] - model.mu[i];
            model.sigma[i] += d * d;
        }
    }
    for (std::size_t i = 0; i < n; ++i) model.sigma[i] = std::sqrt(model.sigma[i] / count);
    return model;
}

BurrowsModel fit_burrows_model(std::span<const AuthorCorpus> corpora, std::size_t n) {
    auto vocabulary = fit_vocabulary(corpora, n);
    std::vector<std::vector<double>> profiles;
    profiles.reserve(corpora.size());
    for (const auto& corpus : corpora) profiles.push_back(author_profile(corpus, vocabulary));
    return fit_z_model(std::move(vocabulary), profiles);
}

std::vector<double> z_score(std::span<const double> profile, const BurrowsModel& model) {
    if (profile.size() != model.size()) {
        throw Error(ErrorKind::kInvalidData, "profile width does not match model");
    }
    std::vector<double> z(profile.size(), 0.0);
    for (std::size_t i = 0; i < profile.size(); ++i) {
        if (model.sigma[i] > 0.0) z[i] = (profile[i] - model.mu[i]) / model.sigma[i];
    }
    return z;
}

WordReport word_report(std::span<const AuthorCorpus> corpora, std::size_t n) {
    struct Usage {
        std::uint64_t uses = 0;
        std::uint64_t troll_uses = 0;
    };
    std::unordered_map<std::string, Usage> usage;
    std::uint64_t total_tokens = 0;
    std::uint64_t troll_tokens = 0;
    for (const auto& corpus : corpora) {
        if (!corpus.label) {
            throw Error(ErrorKind::kInvalidData,
                        "word report needs labels: author '" + corpus.author_id + "'");
        }
        const bool troll = *corpus.label == kTroll;
        for (const auto& post : corpus.posts) {
            for (auto& token : tokenize(post)) {
                if (token.token_class != TokenClass::kWord) continue;
                auto& u = usage[std::move(token.text)];
                ++u.uses;
                ++total_tokens;
                if (troll) {
                    ++u.troll_uses;
                    ++troll_tokens;
                }
            }
        }
    }
    const auto vocabulary = fit_vocabulary(corpora, n);

    WordReport report;
    report.baseline_percent =
        100.0 * static_cast<double>(troll_tokens) / static_cast<double>(total_tokens);
    report.rows.reserve(vocabulary.size());
    for (const auto& token : vocabulary) {
        const Usage& u = usage.at(token);
        WordReportRow row;
        row.token = token;
        row.uses = u.uses;
        row.troll_share =
            100.0 * static_cast<double>(u.troll_uses) / static_cast<double>(u.uses);
        row.points_from_random = row.troll_share - report.baseline_percent;
        report.rows.push_back(std::move(row));
    }
    std::sort(report.rows.begin(), report.rows.end(),
              [](const WordReportRow& a, const WordReportRow& b) {
                  if (a.points_from_random != b.points_from_random) {
                      return a.points_from_random > b.points_from_random;
                  }
                  if (a.uses != b.uses) return a.uses > b.uses;
                  return a.token < b.token;
              });
    return report;
}

std::string render_word_report(const WordReport& report, const TextResources& resources) {
    std::ostringstream out;
    out << "# baseline troll share: " << format_fixed(report.baseline_percent, 2) << "\n";
    out << "token\tuses\ttroll_percent\tpoints\tstopword\n";
    for (const auto& row : report.rows) {
        out << row.token << '\t' << row.uses << '\t' << format_fixed(row.troll_share, 2) << '\t'
            << format_fixed(row.points_from_random, 2, /*force_sign=*/true) << '\t'
            << (is_stopword(row.token, resources) ? 1 : 0) << '\n';
    }
    return out.str();
}

void save_burrows_model(const BurrowsModel& model, const std::filesystem::path& path) {
    std::ostringstream out;
    out << "stylo.burrows v1\n";
    out << "vocab " << model.size() << "\n";
    for (std::size_t i = 0; i < model.size(); ++i) {
        out << "word " << model.vocabulary[i] << ' ' << format_double(model.mu[i]) << ' '
            << format_double(model.sigma[i]) << "\n";
    }
    atomic_write_file(path, out.str());
}

BurrowsModel load_burrows_model(const std::filesystem::path& path) {
    std::istringstream in(read_file(path));
    std::string line;
    if (!std::getline(in, line) || line != "stylo.burrows v1") {
        throw Error(ErrorKind::kInvalidData, "unrecognized burrows model file: " + path.string());
    }
    std::size_t n = 0;
    if (!(in >> line >> n) || line != "vocab") {
        throw Error(ErrorKind::kInvalidData, "malformed burrows model: " + path.string());
    }
    BurrowsModel model;
    model.vocabulary.reserve(n);
    model.mu.reserve(n);
    model.sigma.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::string tag, token, mu_text, sigma_text;
        if (!(in >> tag >> token >> mu_text >> sigma_text) || tag != "word") {
            throw Error(ErrorKind::kInvalidData, "malformed burrows model: " + path.string());
        }
        model.vocabulary.push_back(std::move(token));
        model.mu.push_back(parse_double(mu_text));
        model.sigma.push_back(parse_double(sigma_text));
    }
    return model;
}

}  // namespace stylo
