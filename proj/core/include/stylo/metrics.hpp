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

#ifndef STYLO_METRICS_HPP_
#define STYLO_METRICS_HPP_

#include <cstddef>
#include <span>
#include <string>

namespace stylo {

// Positive class = troll (label 1).
struct ConfusionMatrix {
    std::size_t tp = 0;
    std::size_t fp = 0;
    std::size_t fn = 0;
    std::size_t tn = 0;

    std::size_t total() const { return tp + fp + fn + tn; }
};

ConfusionMatrix confusion(std::span<const int> y_true, std::span<const int> y_pred);

struct ClassScores {
    double precision = 0.0;
    double recall = 0.0;
    double f1 = 0.0;
};

struct MacroScores {
    ClassScores troll;
    ClassScores not_troll;
    double macro_precision = 0.0;
    double macro_recall = 0.0;
    double macro_f1 = 0.0;  // mean of per-class F1, not F1 of macro P/R
    bool zero_denominator = false;
};

// Zero denominators score 0 and set the diagnostic flag.
MacroScores macro_prf(const ConfusionMatrix& cm);

// Confusion matrix plus per-class and macro rows, ready to print.
std::string render_evaluation_report(const ConfusionMatrix& cm, const MacroScores& scores);

}  // namespace stylo

#endif  // STYLO_METRICS_HPP_
