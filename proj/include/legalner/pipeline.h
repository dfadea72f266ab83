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

// The document-level post-processing pipeline:
//
//   preamble split -> sentence segmentation -> validation ->
//   reconciliation -> precedent clusters -> statute clusters ->
//   provision/statute pairs
//
// Documents are independent, so PostprocessAll fans them out over threads;
// output order always follows input order.

#ifndef LEGALNER_PIPELINE_H_
#define LEGALNER_PIPELINE_H_

#include <span>
#include <string>
#include <vector>

#include "json.hpp"
#include "legalner/config.h"
#include "legalner/coref.h"
#include "legalner/corpus.h"
#include "legalner/document.h"
#include "legalner/provisions.h"
#include "legalner/reconcile.h"

namespace legalner {

struct PipelineOutput {
  JudgmentDoc doc;  // final labels
  std::vector<Violation> violations;
  // True when validation found errors; the later stages did not run.
  bool skipped = false;
  std::vector<ReconciliationRecord> reconciliations;
  std::vector<ReferentLink> referents;
  std::vector<PrecedentCluster> precedent_clusters;
  std::vector<StatuteCluster> statute_clusters;
  std::vector<ProvisionStatutePair> provision_statute_pairs;
  std::vector<std::string> warnings;
};

// Builds the document view of `record`. For a full judgment without a
// preamble_end the split is guessed; if the guess lands inside a span it is
// moved back to the start of that span. Judgment sentences are segmented
// and merged across spans.
JudgmentDoc PrepareDoc(const AnnotationRecord &record,
                       const PipelineConfig &config,
                       std::vector<std::string> *warnings = nullptr);

// Validation and the resolution stages on a prepared document.
PipelineOutput RunStages(JudgmentDoc doc, const PipelineConfig &config);

PipelineOutput Postprocess(const AnnotationRecord &record,
                           const PipelineConfig &config);

// `threads` <= 1 runs inline.
std::vector<PipelineOutput> PostprocessAll(
    std::span<const AnnotationRecord> records, const PipelineConfig &config,
    int threads = 1);

nlohmann::ordered_json OutputToJson(const PipelineOutput &output);

}  // namespace legalner

#endif  // LEGALNER_PIPELINE_H_
