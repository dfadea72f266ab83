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

#include "legalner/evaluation.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <stdexcept>

namespace legalner {

namespace {

// Indices of `spans` in document order; throws if two spans overlap.
std::vector<size_t> FlatOrder(std::span<const EntitySpan> spans,
                              const char *which) {
  std::vector<size_t> order(spans.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) {
    return spans[a].key() < spans[b].key();
  });
  for (size_t k = 1; k < order.size(); ++k) {
    if (spans[order[k]].start < spans[order[k - 1]].end) {
      throw std::invalid_argument(std::string(which) +
                                  " spans overlap: " + spans[order[k - 1]].id +
                                  " and " + spans[order[k]].id);
    }
  }
  return order;
}

double Ratio(long num, long den) {
  return den == 0 ? 0.0 : static_cast<double>(num) / den;
}

}  // namespace

std::string_view SchemeName(Scheme scheme) {
  return scheme == Scheme::kStrict ? "strict" : "typematch";
}

double LabelCounts::precision() const { return Ratio(tp, tp + fp); }
double LabelCounts::recall() const { return Ratio(tp, tp + fn); }
double LabelCounts::f1() const {
  double p = precision(), r = recall();
  return p + r == 0 ? 0.0 : 2 * p * r / (p + r);
}
double LabelCounts::avg_gold_len() const {
  return Ratio(gold_chars, support);
}

LabelCounts &LabelCounts::operator+=(const LabelCounts &other) {
  tp += other.tp;
  fp += other.fp;
  fn += other.fn;
  support += other.support;
  gold_chars += other.gold_chars;
  return *this;
}

LabelCounts EvalReport::overall() const {
  LabelCounts total;
  for (const LabelCounts &c : per_label) total += c;
  return total;
}

EvalReport &EvalReport::operator+=(const EvalReport &other) {
  for (int i = 0; i < kNumLabels; ++i) per_label[i] += other.per_label[i];
  return *this;
}

bool Compatible(const EntitySpan &gold, const EntitySpan &pred,
                Scheme scheme) {
  if (gold.label != pred.label) return false;
  if (scheme == Scheme::kStrict) {
    return gold.start == pred.start && gold.end == pred.end;
  }
  return gold.range().Overlaps(pred.range());
}

std::vector<SpanMatch> MatchSpans(std::span<const EntitySpan> gold,
                                  std::span<const EntitySpan> pred,
                                  Scheme scheme) {
  const std::vector<size_t> gold_order = FlatOrder(gold, "gold");
  const std::vector<size_t> pred_order = FlatOrder(pred, "predicted");
  std::vector<bool> gold_used(gold.size(), false);
  std::vector<SpanMatch> matches;
  for (size_t p : pred_order) {
    for (size_t g : gold_order) {
      if (gold[g].start >= pred[p].end) break;
      if (!gold_used[g] && Compatible(gold[g], pred[p], scheme)) {
        gold_used[g] = true;
        matches.push_back({g, p});
        break;
      }
    }
  }
  return matches;
}

EvalReport Score(std::span<const EntitySpan> gold,
                 std::span<const EntitySpan> pred, Scheme scheme) {
  EvalReport report;
  report.scheme = scheme;
  std::vector<SpanMatch> matches = MatchSpans(gold, pred, scheme);
  std::vector<bool> gold_matched(gold.size(), false);
  std::vector<bool> pred_matched(pred.size(), false);
  for (const SpanMatch &m : matches) {
    gold_matched[m.gold] = true;
    pred_matched[m.pred] = true;
    ++report.per_label[LabelIndex(gold[m.gold].label)].tp;
  }
  for (size_t g = 0; g < gold.size(); ++g) {
    LabelCounts &c = report.per_label[LabelIndex(gold[g].label)];
    ++c.support;
    c.gold_chars += gold[g].length();
    if (!gold_matched[g]) ++c.fn;
  }
  for (size_t p = 0; p < pred.size(); ++p) {
    if (!pred_matched[p]) ++report.per_label[LabelIndex(pred[p].label)].fp;
  }
  return report;
}

EvalReport ScoreUnits(std::span<const EvalUnit> units, Scheme scheme) {
  EvalReport total;
  total.scheme = scheme;
  for (const EvalUnit &unit : units) {
    total += Score(unit.gold, unit.pred, scheme);
  }
  return total;
}

std::vector<EntityTableRow> PerEntityTable(const EvalReport &strict,
                                           const EvalReport &type_match) {
  auto row = [](std::string name, const LabelCounts &s,
                const LabelCounts &t) {
    EntityTableRow r;
    r.entity = std::move(name);
    r.count = s.support;
    r.avg_len = std::lround(s.avg_gold_len());
    r.f1 = 100.0 * s.f1();
    r.type_match_f1 = 100.0 * t.f1();
    return r;
  };
  std::vector<EntityTableRow> rows;
  for (EntityLabel label : kAllLabels) {
    rows.push_back(row(std::string(LabelName(label)), strict.at(label),
                       type_match.at(label)));
  }
  rows.push_back(row("Overall", strict.overall(), type_match.overall()));
  return rows;
}

std::string FormatEntityTable(const std::vector<EntityTableRow> &rows) {
  std::string out;
  char line[128];
  std::snprintf(line, sizeof(line), "%-14s %7s %9s %6s %15s\n", "Entity",
                "Count", "Avg. Len.", "F1", "Type match F1");
  out += line;
  for (const EntityTableRow &r : rows) {
    std::snprintf(line, sizeof(line), "%-14s %7ld %9ld %6.1f %15.1f\n",
                  r.entity.c_str(), r.count, r.avg_len, r.f1,
                  r.type_match_f1);
    out += line;
  }
  return out;
}

}  // namespace legalner
