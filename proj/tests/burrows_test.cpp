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

#include <doctest.h>

#include <cmath>

#include "stylo/error.hpp"
#include "stylo/io.hpp"
#include "stylo/rng.hpp"
#include "testutil.hpp"

using namespace stylo;
using doctest::Approx;

namespace {

AuthorCorpus author(std::string id, std::vector<std::string> posts,
                    std::optional<int> label = std::nullopt) {
    return {std::move(id), std::move(posts), label};
}

// Builds a post consisting of `count` repetitions of one word.
std::string repeated(const std::string& word, std::size_t count) {
    std::string post;
    for (std::size_t i = 0; i < count; ++i) {
        if (!post.empty()) post += ' ';
        post += word;
    }
    return post;
}

}  // namespace

TEST_CASE("fit_vocabulary orders by count then lexicographically") {
    const std::vector<AuthorCorpus> corpora = {
        author("x", {"a a a b b", "a a c c c"}),
    };
    // counts: a=5, b=2, c=3
    CHECK(fit_vocabulary(corpora, 2) == std::vector<std::string>{"a", "c"});
    CHECK(fit_vocabulary(corpora, 10) == std::vector<std::string>{"a", "c", "b"});
    CHECK(fit_vocabulary(corpora, 1) == std::vector<std::string>{"a"});

    const std::vector<AuthorCorpus> tie = {author("x", {"b b b a a a c c c"})};
    CHECK(fit_vocabulary(tie, 2) == std::vector<std::string>{"a", "b"});

    const std::vector<AuthorCorpus> empty = {author("x", {"!!! 123"})};
    CHECK_THROWS_AS(fit_vocabulary(empty, 2), Error);
    CHECK_THROWS_AS(fit_vocabulary(corpora, 0), Error);
}

TEST_CASE("author_profile is the per-author word fraction") {
    const std::vector<std::string> vocab = {"a", "b"};
    const auto profile = author_profile(author("x", {"a a b"}), vocab);
    CHECK(profile[0] == Approx(2.0 / 3.0).epsilon(1e-15));
    CHECK(profile[1] == Approx(1.0 / 3.0).epsilon(1e-15));

    const auto none = author_profile(author("x", {"z z z"}), vocab);
    CHECK(none == std::vector<double>{0.0, 0.0});

    const auto all = author_profile(author("x", {"a a a"}), vocab);
    CHECK(all == std::vector<double>{1.0, 0.0});

    const auto wordless = author_profile(author("x", {"!!!"}), vocab);
    CHECK(wordless == std::vector<double>{0.0, 0.0});
}

TEST_CASE("fit_z_model computes element-wise mean and population std") {
    const std::vector<std::vector<double>> profiles = {{0.2}, {0.4}};
    const auto model = fit_z_model({"w"}, profiles);
    CHECK(model.mu[0] == Approx(0.3).epsilon(1e-15));
    CHECK(model.sigma[0] == Approx(0.1).epsilon(1e-15));

    const std::vector<std::vector<double>> same = {{0.5}, {0.5}, {0.5}};
    CHECK(fit_z_model({"w"}, same).sigma[0] == 0.0);

    const std::vector<std::vector<double>> one = {{0.7}};
    const auto single = fit_z_model({"w"}, one);
    CHECK(single.mu[0] == 0.7);
    CHECK(single.sigma[0] == 0.0);

    CHECK_THROWS_AS(fit_z_model({"w"}, std::vector<std::vector<double>>{}), Error);
}

TEST_CASE("z_score standardizes, zeroing degenerate coordinates") {
    const std::vector<std::vector<double>> profiles = {{0.2}, {0.4}};
    const auto model = fit_z_model({"w"}, profiles);
    // The hand example lands within one ulp of the exact -1/+1.
    CHECK(z_score(profiles[0], model)[0] == Approx(-1.0).epsilon(1e-15));
    CHECK(z_score(profiles[1], model)[0] == Approx(1.0).epsilon(1e-15));

    // With power-of-two fractions the standardization is bit-exact.
    const std::vector<std::vector<double>> exact = {{0.25}, {0.75}};
    const auto exact_model = fit_z_model({"w"}, exact);
    CHECK(z_score(exact[0], exact_model)[0] == -1.0);
    CHECK(z_score(exact[1], exact_model)[0] == 1.0);

    const std::vector<std::vector<double>> flat = {{0.5}, {0.5}};
    const auto degenerate = fit_z_model({"w"}, flat);
    CHECK(z_score(flat[0], degenerate)[0] == 0.0);

    const auto at_mean = z_score({model.mu[0]}, model);
    CHECK(at_mean[0] == 0.0);

    CHECK_THROWS_AS(z_score(std::vector<double>{0.1, 0.2}, model), Error);
}

TEST_CASE("z mean 0 and population std 1 over the fitting authors") {
    Rng rng(31);
    const std::size_t authors = 23;
    const std::size_t width = 17;
    std::vector<std::vector<double>> profiles(authors, std::vector<double>(width));
    for (auto& profile : profiles) {
        for (auto& v : profile) v = rng.next_real() * 0.01;
    }
    std::vector<std::string> vocab(width, "w");
    const auto model = fit_z_model(vocab, profiles);
    for (std::size_t i = 0; i < width; ++i) {
        REQUIRE(model.sigma[i] > 0.0);
        double mean = 0.0;
        double var = 0.0;
        for (const auto& profile : profiles) mean += z_score(profile, model)[i];
        mean /= double(authors);
        for (const auto& profile : profiles) {
            const double z = z_score(profile, model)[i];
            var += (z - mean) * (z - mean);
        }
        var /= double(authors);
        REQUIRE(std::abs(mean) < 1e-9);
        REQUIRE(std::abs(std::sqrt(var) - 1.0) < 1e-9);
    }
}

TEST_CASE("duplicating an author's posts changes nothing") {
    std::vector<AuthorCorpus> corpora = {
        author("a", {"the cat sat", "on the mat"}, 1),
        author("b", {"dogs bark loudly", "cats purr"}, 0),
        author("c", {"the the the", "cat cat"}, 1),
    };
    const auto model = fit_burrows_model(corpora, 5);

    auto doubled = corpora;
    doubled[1].posts.insert(doubled[1].posts.end(), corpora[1].posts.begin(),
                            corpora[1].posts.end());
    const auto model2 = fit_burrows_model(doubled, 5);
    CHECK(model.vocabulary == model2.vocabulary);
    for (std::size_t i = 0; i < model.size(); ++i) {
        CHECK(model.mu[i] == Approx(model2.mu[i]).epsilon(1e-15));
        CHECK(model.sigma[i] == Approx(model2.sigma[i]).epsilon(1e-15));
    }
    const auto z1 = z_score(author_profile(corpora[1], model.vocabulary), model);
    const auto z2 = z_score(author_profile(doubled[1], model2.vocabulary), model2);
    for (std::size_t i = 0; i < z1.size(); ++i) CHECK(z1[i] == Approx(z2[i]).epsilon(1e-12));
}

TEST_CASE("word_report rows satisfy points = share - baseline") {
    const std::vector<AuthorCorpus> corpora = {
        author("t1", {"sports news sports", "politics news"}, 1),
        author("u1", {"lol cute lol", "sports lol"}, 0),
    };
    const auto report = word_report(corpora, 10);
    REQUIRE(!report.rows.empty());
    std::uint64_t uses_total = 0;
    for (const auto& row : report.rows) {
        REQUIRE(std::abs(row.points_from_random -
                         (row.troll_share - report.baseline_percent)) < 1e-9);
        REQUIRE(row.troll_share >= 0.0);
        REQUIRE(row.troll_share <= 100.0);
        uses_total += row.uses;
    }
    CHECK(uses_total <= 10);  // no more than the corpus token count
    // Sorted by points descending.
    for (std::size_t i = 1; i < report.rows.size(); ++i) {
        CHECK(report.rows[i - 1].points_from_random >= report.rows[i].points_from_random);
    }
}

TEST_CASE("word_report with all tokens from trolls is a degenerate baseline") {
    const std::vector<AuthorCorpus> corpora = {
        author("t1", {"aa bb aa"}, 1),
        author("t2", {"bb cc"}, 1),
        author("u1", {"!!!"}, 0),  // no word tokens
    };
    const auto report = word_report(corpora, 5);
    CHECK(report.baseline_percent == Approx(100.0));
    for (const auto& row : report.rows) {
        CHECK(row.troll_share == Approx(100.0));
        CHECK(row.points_from_random == Approx(0.0));
    }
}

TEST_CASE("word_report requires labels") {
    const std::vector<AuthorCorpus> corpora = {author("a", {"hi there"})};
    CHECK_THROWS_AS(word_report(corpora, 5), Error);
}

TEST_CASE("word_report reproduces the published rounding behavior") {
    // 60,000 word tokens, 43,203 of them by trolls: the unrounded baseline is
    // 72.005 and displays as 72.00. A token used 30,000 times with a single
    // non-troll use displays share 100.0 yet points +27.99.
    std::vector<AuthorCorpus> corpora;
    AuthorCorpus troll;
    troll.author_id = "t";
    troll.label = kTroll;
    for (int i = 0; i < 30; ++i) troll.posts.push_back(repeated("foke", 1000));
    troll.posts.back() = repeated("foke", 999);  // 29,999 troll uses
    for (int i = 0; i < 13; ++i) troll.posts.push_back(repeated("zz", 1000));
    troll.posts.push_back(repeated("zz", 204));  // 13,204 filler -> 43,203 total
    AuthorCorpus user;
    user.author_id = "u";
    user.label = kNotTroll;
    user.posts.push_back("foke");
    for (int i = 0; i < 16; ++i) user.posts.push_back(repeated("qq", 1000));
    user.posts.push_back(repeated("qq", 796));  // 16,796 filler -> 16,797 total
    corpora.push_back(std::move(troll));
    corpora.push_back(std::move(user));

    const auto report = word_report(corpora, 3);
    CHECK(report.baseline_percent == Approx(72.005).epsilon(1e-12));
    CHECK(format_fixed(report.baseline_percent, 2) == "72.00");

    const auto& foke = report.rows.front();  // highest points
    REQUIRE(foke.token == "foke");
    CHECK(foke.uses == 30000);
    CHECK(format_fixed(foke.troll_share, 2) == "100.00");
    CHECK(format_fixed(foke.points_from_random, 2, true) == "+27.99");
}

TEST_CASE("render_word_report emits the documented columns") {
    const auto res = testutil::tiny_resources();
    const std::vector<AuthorCorpus> corpora = {
        author("t1", {"the game"}, 1),
        author("u1", {"the fun"}, 0),
    };
    const auto text = render_word_report(word_report(corpora, 3), res);
    CHECK(text.find("token\tuses\ttroll_percent\tpoints\tstopword") != std::string::npos);
    CHECK(text.find("the\t2\t50.00\t") != std::string::npos);
    CHECK(text.find("\t1\n") != std::string::npos);  // "the" flagged as stopword
}

TEST_CASE("burrows model serialization round-trips") {
    const std::vector<AuthorCorpus> corpora = {
        author("a", {"the cat sat on the mat"}, 1),
        author("b", {"dogs bark cats purr"}, 0),
    };
    const auto model = fit_burrows_model(corpora, 4);
    const auto dir = testutil::fresh_temp_dir("burrows");
    save_burrows_model(model, dir / "model.txt");
    const auto loaded = load_burrows_model(dir / "model.txt");
    CHECK(loaded.vocabulary == model.vocabulary);
    CHECK(loaded.mu == model.mu);
    CHECK(loaded.sigma == model.sigma);
    std::filesystem::remove_all(dir);
}
