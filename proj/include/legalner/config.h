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

// Configuration shared by the library entry points and the CLI.
//
// A JSON object with optional sections; anything omitted keeps its default.
// Unknown keys are rejected so typos do not silently fall back.
//
//   {
//     "segmentation": {"markers": [...], "abbreviations": [...],
//                      "break_on_newline": true},
//     "precedents": {"referent_window": 12, "referent_keywords": [...],
//                    "party_jaccard": 0.8, "party_separator": "...",
//                    "party_stopwords": [...],
//                    "citation_patterns": [{"regex": "...", "year": 1,
//                      "volume": 2, "reporter": 3, "page": 4,
//                      "reporter_prefix": ""}]},
//     "statutes": {"alias_window": 40, "max_parenthetical": 200,
//                  "brevity_keywords": [...], "acronyms": {"IPC": "..."},
//                  "replace_default_acronyms": false},
//     "provisions": {"strict_explicit": false},
//     "selection": {"quotas": {"WITNESS": 100}, "max_selected": 0,
//                   "zero_entity_fraction": 0.1, "seed": 0,
//                   "min_tokens": 5, "side_by_side_spaces": 6},
//     "case_types": [{"type": "Tax", "keywords": ["tax act"]}, ...],
//     "field_mapping": {"preset": "label_studio", ...}
//   }

#ifndef LEGALNER_CONFIG_H_
#define LEGALNER_CONFIG_H_

#include <string>
#include <vector>

#include "json.hpp"
#include "legalner/case_type.h"
#include "legalner/coref.h"
#include "legalner/corpus.h"
#include "legalner/provisions.h"
#include "legalner/segmentation.h"
#include "legalner/selection.h"

namespace legalner {

struct PipelineConfig {
  SegmentationOptions segmentation;
  PrecedentOptions precedents;
  StatuteOptions statutes;
  AcronymTable acronyms = AcronymTable::Defaults();
  ProvisionOptions provisions;
  SelectionOptions selection;
  std::vector<CaseTypeRule> case_types = DefaultCaseTypeRules();
  FieldMapping field_mapping;

  // Throws std::invalid_argument on unknown keys or ill-typed values.
  static PipelineConfig FromJson(const nlohmann::json &json);
  // Empty path gives the defaults. Throws std::runtime_error if unreadable.
  static PipelineConfig Load(const std::string &path);
};

}  // namespace legalner

#endif  // LEGALNER_CONFIG_H_
