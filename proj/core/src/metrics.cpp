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

#include "stylo/metrics.hpp"

#include <sstream>

#include "stylo/error.hpp"
#include "stylo/io.hpp"

namespace stylo {

ConfusionMatrix confusion(std::span<const int> y_true, std::span<const int> y_pred) {
    if (y_true.size() != y_pred.size()) {
        throw Error(ErrorKind::kInvalidData, "confusion: label vectors differ in length");
    }
    ConfusionMatrix cm;
    for (std::size_t i = 0; i < y_true.size(); ++i) {
        if ((y_true[i] != 0 && y_true[i] != 1) || (y_pred[i] != 0 && y_pred[i] != 1)) {
            throw Error(ErrorKind::kInvalidData, "confusion: labels must be 0 or 1");
        }
        if (y_true[i] == 1) {
            y_pred[i] == 1 ? ++cm.tp : ++cm.fn;
        } else {
            y_pred[i] == 1 ? ++cm.fp : ++cm.tn;
        }
    }
    return cm;
}

namespace {

double safe_div(std::size_t num, std::size_t den, bool& flagged) {
    if (den == 0) {
        flagged = true;
        return 0.0;
    }
    return static_cast<double>(num) / static_cast<double>(den);
}

double f1_of(double precision, double recall, bool& flagged) {
    if (precision + recall == 0.0) {
        flagged = true;
        return 0.0;
    }
    return 2.0 * precision * recall / (precision + recall);
}

}  // namespace

MacroScores macro_prf(const ConfusionMatrix& cm) {
    MacroScores scores;
    bool& flagged = scores.zero_denominator;
    scores.troll.precision = safe_div(cm.tp, cm.tp + cm.fp, flagged);
    scores.troll.recall = safe_div(cm.tp, cm.tp + cm.fn, flagged);
    scores.troll.f1 = f1_of(scores.troll.precision, scores.troll.recall, flagged);
    // For the negative class the true negatives play the "hit" role.
    scores.not_troll.precision = safe_div(cm.tn, cm.tn + cm.fn, flagged);
    scores.not_troll.recall = safe_div(cm.tn, cm.tn + cm.fp, flagged);
    scores.not_troll.f1 = f1_of(scores.not_troll.precision, scores.not_troll.recall, flagged);
    scores.macro_precision = (scores.troll.precision + scores.not_troll.precision) / 2.0;
    scores.macro_recall = (scores.troll.recall + scores.not_troll.recall) / 2.0;
    scores.macro_f1 = (scores.troll.f1 + scores.not_troll.f1) / 2.0;
    return scores;
}

std::string render_evaluation_report(const ConfusionMatrix& cm, const MacroScores& scores) {
    std::ostringstream out;
    out << "confusion matrix (rows = truth, columns = prediction)\n";
    out << "            pred_troll  pred_not_troll\n";
    out << "troll       " << cm.tp << "  " << cm.fn << "\n";
    out << "not_troll   " << cm.fp << "  " << cm.tn << "\n\n";
    out << "class       precision  recall  f1\n";
    const auto row = [&](const char* name, const ClassScores& c) {
        out << name << "  " << format_fixed(c.precision, 2) << "  " << format_fixed(c.recall, 2)
            << "  " << format_fixed(c.f1, 2) << "\n";
    };
    row("troll    ", scores.troll);
    row("not_troll", scores.not_troll);
    out << "macro      " << format_fixed(scores.macro_precision, 2) << "  "
        << format_fixed(scores.macro_recall, 2) << "  " << format_fixed(scores.macro_f1, 2)
        << "\n";
    if (scores.zero_denominator) {
        out << "note: at least one score had a zero denominator and was set to 0\n";
    }
    return out.str();
}

}  // namespace stylo
