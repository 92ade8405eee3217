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

#include <doctest.h>

#include <algorithm>
#include <set>

#include "stylo/error.hpp"
#include "testutil.hpp"

using namespace stylo;
using doctest::Approx;

namespace {

std::vector<AuthorCorpus> labeled_authors(std::size_t trolls, std::size_t users) {
    std::vector<AuthorCorpus> corpora;
    for (std::size_t i = 0; i < trolls; ++i) {
        corpora.push_back({"troll_" + std::to_string(i), {"post"}, kTroll});
    }
    for (std::size_t i = 0; i < users; ++i) {
        corpora.push_back({"user_" + std::to_string(i), {"post"}, kNotTroll});
    }
    return corpora;
}

std::set<std::string> ids_of(const std::vector<AuthorCorpus>& corpora) {
    std::set<std::string> ids;
    for (const auto& corpus : corpora) ids.insert(corpus.author_id);
    return ids;
}

}  // namespace

TEST_CASE("ingest accepts valid lines and rejects bad ones with diagnostics") {
    const auto dir = testutil::fresh_temp_dir("ingest");
    testutil::write_file(dir / "records.jsonl",
                         "# comment line\n"
                         "{\"author_id\": \"a\", \"text\": \"hello\", \"label\": 1}\n"
                         "{\"author_id\": \"b\", \"text\": \"world\"}\n"
                         "{\"author_id\": \"c\", \"text\": \"   \", \"label\": 0}\n"
                         "{\"author_id\": \"a\", \"text\": \"again\", \"label\": 1, "
                         "\"source\": \"x\"}\n");
    const auto result = ingest(dir / "records.jsonl");
    CHECK(result.records.size() == 3);
    REQUIRE(result.diagnostics.size() == 1);
    CHECK(result.diagnostics[0].line_number == 4);
    CHECK(result.records[0].label == 1);
    CHECK(!result.records[1].label.has_value());
    CHECK(result.records[2].source_tag == "x");
    std::filesystem::remove_all(dir);
}

TEST_CASE("ingest of an empty file yields nothing") {
    const auto dir = testutil::fresh_temp_dir("ingest_empty");
    testutil::write_file(dir / "empty.jsonl", "");
    const auto result = ingest(dir / "empty.jsonl");
    CHECK(result.records.empty());
    CHECK(result.diagnostics.empty());
    std::filesystem::remove_all(dir);
}

TEST_CASE("ingest malformed lines produce per-line diagnostics") {
    const auto dir = testutil::fresh_temp_dir("ingest_bad");
    testutil::write_file(dir / "bad.jsonl",
                         "not json\n"
                         "[1,2]\n"
                         "{\"text\": \"no author\"}\n"
                         "{\"author_id\": \"a\", \"text\": \"ok\"}\n"
                         "{\"author_id\": \"a\", \"text\": \"x\", \"label\": 2}\n"
                         "{\"author_id\": \"a\", \"text\": \"x\", \"label\": \"1\"}\n");
    const auto result = ingest(dir / "bad.jsonl");
    CHECK(result.records.size() == 1);
    CHECK(result.diagnostics.size() == 5);
    std::filesystem::remove_all(dir);
}

TEST_CASE("ingest fails fast on conflicting labels, naming the author") {
    const auto dir = testutil::fresh_temp_dir("ingest_conflict");
    testutil::write_file(dir / "conflict.jsonl",
                         "{\"author_id\": \"dr_evil\", \"text\": \"x\", \"label\": 1}\n"
                         "{\"author_id\": \"dr_evil\", \"text\": \"y\", \"label\": 0}\n");
    CHECK_THROWS_WITH_AS(ingest(dir / "conflict.jsonl"),
                         doctest::Contains("dr_evil"), Error);
    std::filesystem::remove_all(dir);
}

TEST_CASE("ingest of a missing file is a missing-input error") {
    CHECK_THROWS_AS(ingest("/nonexistent/records.jsonl"), Error);
    try {
        ingest("/nonexistent/records.jsonl");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::kMissingInput);
    }
}

TEST_CASE("group_by_author groups in ingest order, output sorted") {
    std::vector<PostRecord> records = {
        {"a", "x", std::nullopt, std::nullopt},
        {"b", "y", std::nullopt, std::nullopt},
        {"a", "z", std::nullopt, std::nullopt},
    };
    const auto corpora = group_by_author(records);
    REQUIRE(corpora.size() == 2);
    CHECK(corpora[0].author_id == "a");
    CHECK(corpora[0].posts == std::vector<std::string>{"x", "z"});
    CHECK(corpora[1].author_id == "b");

    std::size_t total = 0;
    for (const auto& corpus : corpora) total += corpus.posts.size();
    CHECK(total == records.size());

    CHECK(group_by_author(std::vector<PostRecord>{}).empty());
    const std::vector<PostRecord> one = {{"solo", "post", 1, std::nullopt}};
    const auto single = group_by_author(one);
    REQUIRE(single.size() == 1);
    CHECK(single[0].posts.size() == 1);
    CHECK(single[0].label == 1);
}

TEST_CASE("split is stratified, exhaustive and deterministic") {
    const auto corpora = labeled_authors(10, 10);
    SplitSpec spec;
    spec.seed = 13;
    const auto result = split(corpora, spec);

    const auto count_class = [](const std::vector<AuthorCorpus>& list, int label) {
        return std::count_if(list.begin(), list.end(),
                             [&](const AuthorCorpus& c) { return *c.label == label; });
    };
    CHECK(count_class(result.train, kTroll) == 7);
    CHECK(count_class(result.train, kNotTroll) == 7);
    CHECK(count_class(result.validation, kTroll) >= 1);
    CHECK(count_class(result.validation, kNotTroll) >= 1);
    CHECK(count_class(result.test, kTroll) >= 1);
    CHECK(count_class(result.test, kNotTroll) >= 1);

    // Partition: every author exactly once.
    std::set<std::string> seen;
    for (const auto* part : {&result.train, &result.validation, &result.test}) {
        for (const auto& corpus : *part) {
            CHECK(seen.insert(corpus.author_id).second);
        }
    }
    CHECK(seen == ids_of(corpora));

    // Same seed, same assignment.
    const auto again = split(corpora, spec);
    CHECK(ids_of(again.train) == ids_of(result.train));
    CHECK(ids_of(again.validation) == ids_of(result.validation));
    CHECK(ids_of(again.test) == ids_of(result.test));
}

TEST_CASE("split partition and stratification bounds hold across sizes and seeds") {
    for (const std::size_t trolls : {3ul, 9ul, 24ul, 57ul}) {
        for (const std::size_t users : {3ul, 16ul, 40ul}) {
            const auto corpora = labeled_authors(trolls, users);
            SplitSpec spec;
            spec.seed = trolls * 100 + users;
            const auto result = split(corpora, spec);
            std::set<std::string> seen;
            for (const auto* part : {&result.train, &result.validation, &result.test}) {
                for (const auto& corpus : *part) REQUIRE(seen.insert(corpus.author_id).second);
            }
            REQUIRE(seen.size() == trolls + users);

            const auto class_count = [&](int label) {
                return label == kTroll ? double(trolls) : double(users);
            };
            const double fractions[3] = {spec.train_fraction, spec.validation_fraction,
                                         spec.test_fraction};
            const std::vector<AuthorCorpus>* parts[3] = {&result.train, &result.validation,
                                                         &result.test};
            for (const int label : {kNotTroll, kTroll}) {
                for (int p = 0; p < 3; ++p) {
                    const double actual =
                        double(std::count_if(parts[p]->begin(), parts[p]->end(),
                                             [&](const AuthorCorpus& c) {
                                                 return *c.label == label;
                                             })) /
                        class_count(label);
                    REQUIRE(std::abs(actual - fractions[p]) <= 1.0 / class_count(label) + 1e-12);
                }
            }
        }
    }
}

TEST_CASE("split rejects unlabeled authors and tiny classes") {
    auto corpora = labeled_authors(5, 5);
    corpora.push_back({"ghost", {"post"}, std::nullopt});
    SplitSpec spec;
    CHECK_THROWS_AS(split(corpora, spec), Error);

    CHECK_THROWS_AS(split(labeled_authors(2, 5), spec), Error);
}

TEST_CASE("split spec validation") {
    SplitSpec bad;
    bad.train_fraction = 0.9;
    bad.validation_fraction = 0.2;
    bad.test_fraction = 0.15;
    CHECK_THROWS_AS(split(labeled_authors(5, 5), bad), Error);
    SplitSpec zero;
    zero.train_fraction = 1.0;
    zero.validation_fraction = 0.0;
    zero.test_fraction = 0.0;
    CHECK_THROWS_AS(split(labeled_authors(5, 5), zero), Error);
}

TEST_CASE("class_weights balances both classes") {
    std::vector<int> labels;
    labels.insert(labels.end(), 10, 1);
    labels.insert(labels.end(), 40, 0);
    const auto weights = class_weights(labels);
    CHECK(weights.troll == Approx(2.5).epsilon(1e-12));
    CHECK(weights.not_troll == Approx(0.625).epsilon(1e-12));
    CHECK(10 * weights.troll == Approx(40 * weights.not_troll).epsilon(1e-12));

    std::vector<int> even(8, 1);
    std::fill(even.begin(), even.begin() + 4, 0);
    const auto balanced = class_weights(even);
    CHECK(balanced.troll == Approx(1.0));
    CHECK(balanced.not_troll == Approx(1.0));

    // The paper-scale class sizes: the weight ratio equals the count ratio.
    std::vector<int> paper;
    paper.insert(paper.end(), 2560, 1);
    paper.insert(paper.end(), 125000, 0);
    const auto scaled = class_weights(paper);
    CHECK(scaled.troll / scaled.not_troll == Approx(125000.0 / 2560.0).epsilon(1e-12));
    CHECK(scaled.troll / scaled.not_troll == Approx(48.828125).epsilon(1e-4));

    const std::vector<int> single(5, 1);
    CHECK_THROWS_AS(class_weights(single), Error);
    CHECK_THROWS_AS(class_weights(std::vector<int>{}), Error);
}

TEST_CASE("class weighted counts agree for random label mixes") {
    Rng rng(5);
    for (int i = 0; i < 30; ++i) {
        std::vector<int> labels;
        const auto ones = rng.next_int(1, 50);
        const auto zeros = rng.next_int(1, 50);
        labels.insert(labels.end(), ones, 1);
        labels.insert(labels.end(), zeros, 0);
        const auto weights = class_weights(labels);
        REQUIRE(double(ones) * weights.troll ==
                Approx(double(zeros) * weights.not_troll).epsilon(1e-12));
    }
}
