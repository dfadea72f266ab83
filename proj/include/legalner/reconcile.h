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

#ifndef LEGALNER_RECONCILE_H_
#define LEGALNER_RECONCILE_H_

#include <string>
#include <vector>

#include "legalner/document.h"

namespace legalner {

// A relabeling performed by Reconcile.
struct ReconciliationRecord {
  std::string span_id;
  EntityLabel old_label;
  EntityLabel new_label;
  std::string matched_span_id;

  friend bool operator==(const ReconciliationRecord &,
                         const ReconciliationRecord &) = default;
};

struct ReconcileResult {
  JudgmentDoc doc;
  std::vector<ReconciliationRecord> records;
  std::vector<std::string> warnings;
};

// OTHER_PERSON and ORG are the labels a sentence-level tagger falls back to
// when it lacks document context.
bool IsReconcilable(EntityLabel label);

// PETITIONER, RESPONDENT, JUDGE, LAWYER and WITNESS.
bool IsRoleLabel(EntityLabel label);

// Relabels every OTHER_PERSON or ORG span whose normalized text equals the
// normalized text of a role span elsewhere in the document. A span that
// matches role spans of two different labels is left alone and reported as
// a conflict warning. Offsets never change.
ReconcileResult Reconcile(const JudgmentDoc &doc);

}  // namespace legalner

#endif  // LEGALNER_RECONCILE_H_
