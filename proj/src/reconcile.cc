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

#include "legalner/reconcile.h"

#include <map>

#include "legalner/text_util.h"

namespace legalner {

bool IsReconcilable(EntityLabel label) {
  return label == EntityLabel::kOtherPerson || label == EntityLabel::kOrg;
}

bool IsRoleLabel(EntityLabel label) {
  switch (label) {
    case EntityLabel::kPetitioner:
    case EntityLabel::kRespondent:
    case EntityLabel::kJudge:
    case EntityLabel::kLawyer:
    case EntityLabel::kWitness:
      return true;
    default:
      return false;
  }
}

ReconcileResult Reconcile(const JudgmentDoc &doc) {
  ReconcileResult result{doc, {}, {}};
  Utf8Index index(doc.text);

  // Normalized role text -> first span id per role label, in label order.
  std::map<std::string, std::map<EntityLabel, std::string>> roles;
  for (const EntitySpan &span : doc.spans) {
    if (!IsRoleLabel(span.label)) continue;
    std::string key = NormalizeMention(index.Slice(span.start, span.end));
    if (key.empty()) continue;
    roles[key].emplace(span.label, span.id);
  }

  for (EntitySpan &span : result.doc.spans) {
    if (!IsReconcilable(span.label)) continue;
    std::string key = NormalizeMention(index.Slice(span.start, span.end));
    auto it = roles.find(key);
    if (key.empty() || it == roles.end()) continue;
    const auto &matches = it->second;
    if (matches.size() > 1) {
      std::string labels;
      for (const auto &[label, id] : matches) {
        if (!labels.empty()) labels += ", ";
        labels += std::string(LabelName(label)) + " (" + id + ")";
      }
      result.warnings.push_back("conflict: span " + span.id + " \"" + key +
                                "\" matches " + labels + "; left unchanged");
      continue;
    }
    const auto &[label, id] = *matches.begin();
    result.records.push_back({span.id, span.label, label, id});
    span.label = label;
  }
  return result;
}

}  // namespace legalner
