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

// Choosing sentences for annotation.
//
// Candidates carry (possibly noisy) predicted spans. Filters drop very short
// units, units with non-English letters, duplicates, and preambles whose
// party names are laid out side by side. Among the rest, a greedy pass
// repeatedly takes the candidate whose predicted entities carry the largest
// summed inverse label frequency, counting only labels whose quota is not
// yet met, so rare labels are over-sampled. A seeded sample of zero-entity
// candidates is added at the end.

#ifndef LEGALNER_SELECTION_H_
#define LEGALNER_SELECTION_H_

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "legalner/corpus.h"
#include "legalner/document.h"
#include "legalner/segmentation.h"

namespace legalner {

struct SelectionCandidate {
  std::string id;
  std::string doc_id;
  DocType unit_type = DocType::kJudgmentSentence;  // or kPreamble
  std::string text;
  std::vector<EntitySpan> spans;  // offsets relative to text
};

struct SelectionOptions {
  // Target number of predicted spans per label. A label without a quota is
  // never considered met.
  std::map<EntityLabel, long> quotas;
  // Upper bound on entity-bearing picks; 0 means no bound.
  long max_selected = 0;
  // Zero-entity candidates added, as a fraction of the entity-bearing picks.
  double zero_entity_fraction = 0.1;
  uint64_t seed = 0;
  // Units with fewer whitespace tokens are too short.
  int min_tokens = 5;
  // A preamble line with a run of this many spaces between two segments
  // holding letters lays names out side by side.
  int side_by_side_spaces = 6;
};

enum class ExclusionReason : uint8_t {
  kNone,
  kTooShort,
  kNonEnglish,
  kSideBySide,
  kDuplicate,
};

std::string_view ExclusionReasonName(ExclusionReason reason);

// First filter that rejects `candidate` on its own (duplicates aside).
ExclusionReason ExclusionFor(const SelectionCandidate &candidate,
                             const SelectionOptions &options = {});

// True if `text` holds a letter outside Basic Latin. Whitespace and the
// punctuation accepted by IsPunct are allowed, as is the rupee sign.
bool HasNonEnglishLetters(std::string_view text);

bool HasSideBySideLayout(std::string_view text, int min_spaces);

struct SelectionResult {
  // Indices into the candidates: entity-bearing picks in pick order, then
  // the zero-entity sample.
  std::vector<size_t> selected;
  size_t entity_picks = 0;
  std::vector<std::pair<size_t, ExclusionReason>> excluded;
};

// Deterministic for fixed options and input order.
SelectionResult SelectSentences(std::span<const SelectionCandidate> candidates,
                                const SelectionOptions &options = {});

// One candidate per PREAMBLE or JUDGMENT_SENTENCE record. A FULL_JUDGMENT
// record yields its preamble plus one candidate per judgment sentence; the
// split point is the record's preamble_end or else SplitPreamble's guess.
// Spans that cross a sentence boundary merge the sentences.
std::vector<SelectionCandidate> CandidatesFromRecords(
    std::span<const AnnotationRecord> records,
    const SegmentationOptions &options = {},
    const VerbAnalyzer &analyzer = DefaultVerbAnalyzer());

}  // namespace legalner

#endif  // LEGALNER_SELECTION_H_
