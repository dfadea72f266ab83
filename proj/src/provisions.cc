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

#include "legalner/provisions.h"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "legalner/text_util.h"

namespace legalner {

std::string_view LinkModeName(LinkMode mode) {
  switch (mode) {
    case LinkMode::kExplicit: return "EXPLICIT";
    case LinkMode::kImplicitUnique: return "IMPLICIT_UNIQUE";
    case LinkMode::kImplicitNearest: return "IMPLICIT_NEAREST";
    case LinkMode::kUnresolved: return "UNRESOLVED";
  }
  return "";
}

std::string ProvisionKey(std::string_view text) {
  static const std::set<std::string> kSection = {"section", "sections", "sec",
                                                 "secs", "s", "u/s", "ss"};
  static const std::set<std::string> kArticle = {"article", "articles", "art",
                                                 "arts"};
  std::string key;
  for (const std::string &token : WordTokens(text)) {
    std::string_view t = token;
    if (t == "of" || t == "the") continue;
    if (kSection.count(token)) t = "section";
    if (kArticle.count(token)) t = "article";
    if (!key.empty()) key.push_back(' ');
    key.append(t);
  }
  return key;
}

std::vector<ProvisionStatutePair> LinkProvisions(
    const JudgmentDoc &doc, const std::vector<StatuteCluster> &clusters,
    const ProvisionOptions &options) {
  Utf8Index index(doc.text);
  const std::map<std::string, int> cluster_of = StatuteClusterIndex(clusters);

  // Unit starts: preamble (if any) then sentences.
  std::vector<int> starts;
  if (doc.preamble_end > 0 || doc.sentence_bounds.empty()) starts.push_back(0);
  for (const TextRange &s : doc.sentence_bounds) {
    if (s.start >= doc.preamble_end &&
        (starts.empty() || s.start > starts.back())) {
      starts.push_back(s.start);
    }
  }
  auto unit_of = [&](const EntitySpan &span) {
    auto it = std::upper_bound(starts.begin(), starts.end(), span.start);
    return std::max(0, static_cast<int>(it - starts.begin()) - 1);
  };
  auto statute_name = [&](const EntitySpan &span) {
    auto it = cluster_of.find(span.id);
    if (it != cluster_of.end()) return clusters[it->second].canonical_name;
    return CollapseWhitespace(index.Slice(span.start, span.end));
  };

  std::vector<size_t> order;
  for (size_t i = 0; i < doc.spans.size(); ++i) {
    EntityLabel l = doc.spans[i].label;
    if (l == EntityLabel::kProvision || l == EntityLabel::kStatute) {
      order.push_back(i);
    }
  }
  std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) {
    return doc.spans[a].key() < doc.spans[b].key();
  });

  // Explicit bindings, sentence by sentence.
  std::map<size_t, ProvisionStatutePair> pairs;  // span index -> pair
  std::vector<size_t> pending;
  int current_unit = -1;
  std::vector<std::vector<size_t>> statutes_in_unit(starts.size());
  for (size_t i : order) {
    const EntitySpan &span = doc.spans[i];
    int unit = unit_of(span);
    if (unit != current_unit) {
      pending.clear();
      current_unit = unit;
    }
    if (span.label == EntityLabel::kProvision) {
      pending.push_back(i);
      continue;
    }
    statutes_in_unit[unit].push_back(i);
    if (pending.empty()) continue;
    auto first = options.strict_explicit ? pending.end() - 1 : pending.begin();
    for (auto it = first; it != pending.end(); ++it) {
      pairs[*it] = {doc.spans[*it].id, statute_name(span), LinkMode::kExplicit,
                    span.id};
    }
    pending.clear();
  }

  // Distinct statutes explicitly tied to each provision key.
  struct Explicit {
    std::set<std::string> statutes;
    std::string statute;
    std::string evidence;
  };
  std::map<std::string, Explicit> explicit_by_key;
  for (size_t i : order) {
    auto it = pairs.find(i);
    if (it == pairs.end()) continue;
    const EntitySpan &span = doc.spans[i];
    Explicit &e = explicit_by_key[ProvisionKey(index.Slice(span.start, span.end))];
    if (e.statutes.empty()) {
      e.statute = *it->second.statute;
      e.evidence = *it->second.evidence_span_id;
    }
    e.statutes.insert(*it->second.statute);
  }

  std::vector<ProvisionStatutePair> out;
  for (size_t i : order) {
    const EntitySpan &span = doc.spans[i];
    if (span.label != EntityLabel::kProvision) continue;
    if (auto it = pairs.find(i); it != pairs.end()) {
      out.push_back(it->second);
      continue;
    }
    auto e = explicit_by_key.find(
        ProvisionKey(index.Slice(span.start, span.end)));
    if (e != explicit_by_key.end() && e->second.statutes.size() == 1) {
      out.push_back({span.id, e->second.statute, LinkMode::kImplicitUnique,
                     e->second.evidence});
      continue;
    }
    ProvisionStatutePair pair{span.id, std::nullopt, LinkMode::kUnresolved,
                              std::nullopt};
    for (int u = unit_of(span) - 1; u >= 0; --u) {
      if (statutes_in_unit[u].empty()) continue;
      const EntitySpan &statute = doc.spans[statutes_in_unit[u].back()];
      pair = {span.id, statute_name(statute), LinkMode::kImplicitNearest,
              statute.id};
      break;
    }
    out.push_back(std::move(pair));
  }
  return out;
}

}  // namespace legalner
