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

#include "stylo/corpus.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <unordered_map>

#include <json.hpp>

#include "stylo/error.hpp"
#include "stylo/rng.hpp"
#include "stylo/unicode.hpp"

namespace stylo {

void SplitSpec::validate() const {
    const double fractions[] = {train_fraction, validation_fraction, test_fraction};
    for (const double f : fractions) {
        if (!(f > 0.0 && f < 1.0)) {
            throw Error(ErrorKind::kUsage, "split fractions must lie in (0,1)");
        }
    }
    if (std::abs(train_fraction + validation_fraction + test_fraction - 1.0) > 1e-9) {
        throw Error(ErrorKind::kUsage, "split fractions must sum to 1");
    }
}

IngestResult ingest(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw Error(ErrorKind::kMissingInput, "cannot open record file: " + path.string());
    }
    IngestResult result;
    std::unordered_map<std::string, int> seen_labels;
    std::string line;
    std::size_t line_no = 0;
    const auto reject = [&](const std::string& why) {
        result.diagnostics.push_back({line_no, why});
    };
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;

        const auto parsed = nlohmann::json::parse(line, nullptr, /*allow_exceptions=*/false);
        if (parsed.is_discarded() || !parsed.is_object()) {
            reject("not a JSON object");
            continue;
        }
        if (!parsed.contains("author_id") || !parsed["author_id"].is_string()) {
            reject("missing string field \"author_id\"");
            continue;
        }
        if (!parsed.contains("text") || !parsed["text"].is_string()) {
            reject("missing string field \"text\"");
            continue;
        }
        PostRecord record;
        record.author_id = parsed["author_id"].get<std::string>();
        record.text = parsed["text"].get<std::string>();
        if (unicode::trim(record.text).empty()) {
            reject("empty text");
            continue;
        }
        if (parsed.contains("label")) {
            if (!parsed["label"].is_number_integer()) {
                reject("label must be the integer 0 or 1");
                continue;
            }
            const auto label = parsed["label"].get<std::int64_t>();
            if (label != 0 && label != 1) {
                reject("label must be the integer 0 or 1");
                continue;
            }
            record.label = static_cast<int>(label);
        }
        if (parsed.contains("source")) {
            if (!parsed["source"].is_string()) {
                reject("source must be a string");
                continue;
            }
            record.source_tag = parsed["source"].get<std::string>();
        }
        if (record.label) {
            const auto [it, inserted] = seen_labels.emplace(record.author_id, *record.label);
            if (!inserted && it->second != *record.label) {
                throw Error(ErrorKind::kInvalidData,
                            "conflicting labels for author '" + record.author_id + "' (line " +
                                std::to_string(line_no) + ")");
            }
        }
        result.records.push_back(std::move(record));
    }
    return result;
}

std::vector<AuthorCorpus> group_by_author(std::span<const PostRecord> records) {
    std::map<std::string, AuthorCorpus> by_author;
    for (const auto& record : records) {
        auto& corpus = by_author[record.author_id];
        if (corpus.posts.empty()) corpus.author_id = record.author_id;
        corpus.posts.push_back(record.text);
        if (record.label) {
            if (corpus.label && *corpus.label != *record.label) {
                throw Error(ErrorKind::kInvalidData,
                            "conflicting labels for author '" + record.author_id + "'");
            }
            corpus.label = record.label;
        }
    }
    std::vector<AuthorCorpus> corpora;
    corpora.reserve(by_author.size());
    for (auto& [id, corpus] : by_author) corpora.push_back(std::move(corpus));
    return corpora;
}

namespace {

// Largest-remainder apportionment of n into three parts. Ties go to the
// earlier split so results are deterministic.
std::array<std::size_t, 3> apportion(std::size_t n, const SplitSpec& spec) {
    const double fractions[3] = {spec.train_fraction, spec.validation_fraction,
                                 spec.test_fraction};
    std::array<std::size_t, 3> counts{};
    double remainders[3];
    std::size_t assigned = 0;
    for (int i = 0; i < 3; ++i) {
        const double quota = fractions[i] * static_cast<double>(n);
        counts[i] = static_cast<std::size_t>(std::floor(quota));
        remainders[i] = quota - std::floor(quota);
        assigned += counts[i];
    }
    std::array<int, 3> order = {0, 1, 2};
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return remainders[a] > remainders[b]; });
    for (std::size_t k = 0; assigned + k < n; ++k) ++counts[order[k % 3]];
    return counts;
}

}  // namespace

SplitResult split(std::span<const AuthorCorpus> corpora, const SplitSpec& spec) {
    spec.validate();
    std::map<int, std::vector<std::size_t>> per_class;
    for (std::size_t i = 0; i < corpora.size(); ++i) {
        if (!corpora[i].label) {
            throw Error(ErrorKind::kInvalidData,
                        "cannot split: author '" + corpora[i].author_id + "' has no label");
        }
        per_class[*corpora[i].label].push_back(i);
    }
    for (const auto& [label, members] : per_class) {
        if (members.size() < 3) {
            throw Error(ErrorKind::kInvalidData,
                        "cannot split: class " + std::to_string(label) +
                            " has fewer than 3 authors");
        }
    }

    SplitResult result;
    for (auto& [label, members] : per_class) {
        // Shuffle within a canonical order so the assignment depends only on
        // (authors, seed), not on caller ordering.
        std::sort(members.begin(), members.end(), [&](std::size_t a, std::size_t b) {
            return corpora[a].author_id < corpora[b].author_id;
        });
        Rng rng(Rng::derive(spec.seed, static_cast<std::uint64_t>(label)));
        rng.shuffle(members);
        const auto counts = apportion(members.size(), spec);
        std::size_t pos = 0;
        for (std::size_t k = 0; k < counts[0]; ++k) result.train.push_back(corpora[members[pos++]]);
        for (std::size_t k = 0; k < counts[1]; ++k)
            result.validation.push_back(corpora[members[pos++]]);
        for (std::size_t k = 0; k < counts[2]; ++k) result.test.push_back(corpora[members[pos++]]);
    }
    const auto by_id = [](const AuthorCorpus& a, const AuthorCorpus& b) {
        return a.author_id < b.author_id;
    };
    std::sort(result.train.begin(), result.train.end(), by_id);
    std::sort(result.validation.begin(), result.validation.end(), by_id);
    std::sort(result.test.begin(), result.test.end(), by_id);
    return result;
}

ClassWeights class_weights(std::span<const int> labels) {
    std::size_t count[2] = {0, 0};
    for (const int label : labels) {
        if (label != 0 && label != 1) {
            throw Error(ErrorKind::kInvalidData, "labels must be 0 or 1");
        }
        ++count[label];
    }
    if (count[0] == 0 || count[1] == 0) {
        throw Error(ErrorKind::kInvalidData, "class weights need both classes present");
    }
    const double total = static_cast<double>(labels.size());
    ClassWeights weights;
    weights.not_troll = total / (2.0 * static_cast<double>(count[0]));
    weights.troll = total / (2.0 * static_cast<double>(count[1]));
    return weights;
}

}  // namespace stylo
