// Copyright 2026 The legalner Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Span-level NER scoring.
//
// STRICT counts a prediction as correct only when its boundaries and label
// equal a gold span. TYPE_MATCH accepts any overlap with a gold span of the
// same label. Matching is one-to-one: predictions are visited in document
// order and each takes the first unmatched compatible gold span. Counts are
// micro-averaged over labels.

#ifndef LEGALNER_EVALUATION_H_
#define LEGALNER_EVALUATION_H_

#include <array>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "legalner/document.h"

namespace legalner {

enum class Scheme : uint8_t { kStrict, kTypeMatch };

std::string_view SchemeName(Scheme scheme);

struct LabelCounts {
  long tp = 0;
  long fp = 0;
  long fn = 0;
  long support = 0;     // gold spans
  long gold_chars = 0;  // summed gold span length

  double precision() const;
  double recall() const;
  double f1() const;
  double avg_gold_len() const;

  LabelCounts &operator+=(const LabelCounts &other);
  friend bool operator==(const LabelCounts &, const LabelCounts &) = default;
};

struct EvalReport {
  Scheme scheme = Scheme::kStrict;
  std::array<LabelCounts, kNumLabels> per_label{};

  const LabelCounts &at(EntityLabel label) const {
    return per_label[LabelIndex(label)];
  }
  LabelCounts overall() const;

  EvalReport &operator+=(const EvalReport &other);
};

// One scoring unit (a preamble or a judgment sentence): spans of different
// units never match each other.
struct EvalUnit {
  std::string id;
  DocType unit_type = DocType::kJudgmentSentence;
  std::vector<EntitySpan> gold;
  std::vector<EntitySpan> pred;
};

// A matched (gold index, pred index) pair.
struct SpanMatch {
  size_t gold;
  size_t pred;
  friend bool operator==(const SpanMatch &, const SpanMatch &) = default;
};

bool Compatible(const EntitySpan &gold, const EntitySpan &pred, Scheme scheme);

// Greedy one-to-one matching. Throws std::invalid_argument if either list
// contains overlapping spans.
std::vector<SpanMatch> MatchSpans(std::span<const EntitySpan> gold,
                                  std::span<const EntitySpan> pred,
                                  Scheme scheme);

EvalReport Score(std::span<const EntitySpan> gold,
                 std::span<const EntitySpan> pred, Scheme scheme);

EvalReport ScoreUnits(std::span<const EvalUnit> units, Scheme scheme);

// One row of the entity-wise table: Count, Avg. Len., F1, Type match F1.
struct EntityTableRow {
  std::string entity;
  long count = 0;
  long avg_len = 0;  // rounded
  double f1 = 0;             // percent
  double type_match_f1 = 0;  // percent
};

// Rows for the 14 labels in fixed order, then "Overall".
std::vector<EntityTableRow> PerEntityTable(const EvalReport &strict,
                                           const EvalReport &type_match);

// Plain-text rendering with F1 values scaled by 100 to one decimal.
std::string FormatEntityTable(const std::vector<EntityTableRow> &rows);

}  // namespace legalner

#endif  // LEGALNER_EVALUATION_H_
