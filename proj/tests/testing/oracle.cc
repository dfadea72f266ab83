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

#include "testing/oracle.h"

#include <map>
#include <stdexcept>
#include <vector>

namespace legalner::testing {

long OptimalMatchCount(std::span<const EntitySpan> gold,
                       std::span<const EntitySpan> pred, Scheme scheme) {
  if (gold.size() > 20) throw std::invalid_argument("instance too large");
  // best[p][used] = most matches among predictions p.. given used golds.
  const size_t states = size_t{1} << gold.size();
  std::vector<std::vector<long>> best(pred.size() + 1,
                                      std::vector<long>(states, 0));
  for (size_t p = pred.size(); p-- > 0;) {
    for (size_t used = 0; used < states; ++used) {
      long value = best[p + 1][used];  // leave p unmatched
      for (size_t g = 0; g < gold.size(); ++g) {
        if ((used >> g & 1) == 0 && Compatible(gold[g], pred[p], scheme)) {
          value = std::max(value, 1 + best[p + 1][used | size_t{1} << g]);
        }
      }
      best[p][used] = value;
    }
  }
  return best[0][0];
}

EvalReport OracleScore(std::span<const EntitySpan> gold,
                       std::span<const EntitySpan> pred, Scheme scheme) {
  // Compatibility never crosses labels, so the optimum splits by label.
  std::map<EntityLabel, std::vector<EntitySpan>> g, p;
  for (const EntitySpan &s : gold) g[s.label].push_back(s);
  for (const EntitySpan &s : pred) p[s.label].push_back(s);
  EvalReport report;
  report.scheme = scheme;
  for (EntityLabel label : kAllLabels) {
    LabelCounts &c = report.per_label[LabelIndex(label)];
    const auto &gl = g[label];
    const auto &pl = p[label];
    c.tp = OptimalMatchCount(gl, pl, scheme);
    c.fp = static_cast<long>(pl.size()) - c.tp;
    c.fn = static_cast<long>(gl.size()) - c.tp;
    c.support = static_cast<long>(gl.size());
    for (const EntitySpan &s : gl) c.gold_chars += s.length();
  }
  return report;
}

bool EachPredOverlapsAtMostOneGold(std::span<const EntitySpan> gold,
                                   std::span<const EntitySpan> pred) {
  for (const EntitySpan &p : pred) {
    int hits = 0;
    for (const EntitySpan &g : gold) {
      if (g.range().Overlaps(p.range())) ++hits;
    }
    if (hits > 1) return false;
  }
  return true;
}

}  // namespace legalner::testing
