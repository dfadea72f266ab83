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

// Annotation records, their JSON import/export and corpus statistics.
//
// The canonical format is JSON Lines, one record per line:
//
//   {"id": "...", "unit_type": "PREAMBLE", "split": "train",
//    "text": "...", "spans": [[0, 5, "COURT"], ...], "meta": {...}}
//
// Span offsets count code points. Other layouts (such as the Label Studio
// export of the released train/dev files) are read through a FieldMapping
// of JSON pointers.

#ifndef LEGALNER_CORPUS_H_
#define LEGALNER_CORPUS_H_

#include <array>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "legalner/document.h"

namespace legalner {

enum class Split : uint8_t { kTrain, kDev, kTest };

std::string_view SplitName(Split split);
std::optional<Split> SplitFromName(std::string_view name);

struct AnnotationRecord {
  std::string doc_id;
  DocType unit_type = DocType::kJudgmentSentence;
  std::string text;
  std::vector<EntitySpan> spans;  // sorted, flat
  std::optional<std::string> source_url;
  std::optional<Split> split;
  std::optional<int> preamble_end;  // full judgments only
  DocMeta meta;

  friend bool operator==(const AnnotationRecord &,
                         const AnnotationRecord &) = default;
};

// Document view of a record. A PREAMBLE unit is all preamble; a
// JUDGMENT_SENTENCE unit is one sentence of judgment; a FULL_JUDGMENT keeps
// its preamble_end (0 if unknown) and has no sentences until segmented.
JudgmentDoc ToJudgmentDoc(const AnnotationRecord &record);

class ImportError : public std::runtime_error {
 public:
  ImportError(long record_index, const std::string &message);
  long record_index() const { return record_index_; }

 private:
  long record_index_;
};

// Where the fields of a record live. Pointers are RFC 6901 JSON pointers;
// span pointers are relative to one element of the span array. An empty
// span_start pointer means span elements are [start, end, label] arrays or
// {"start", "end", "label"} objects.
struct FieldMapping {
  enum class Layout { kAuto, kJsonLines, kJsonArray };

  Layout layout = Layout::kAuto;
  std::string id = "/id";
  std::string text = "/text";
  std::string spans = "/spans";
  std::string span_start;
  std::string span_end;
  std::string span_label;
  std::string span_id;
  std::string unit_type = "/unit_type";
  std::string split = "/split";
  std::string source_url = "/meta/source_url";
  std::string preamble_end = "/preamble_end";
  std::string meta = "/meta";
  // Used when the record has no unit type or split; when unset they are
  // inferred from the file name (PREAMBLE/JUDGMENT, TRAIN/DEV/TEST).
  std::optional<DocType> default_unit_type;
  std::optional<Split> default_split;
  SpanSource source = SpanSource::kGold;

  static FieldMapping Canonical();
  // Label Studio export layout used by the released train/dev files.
  static FieldMapping LabelStudio();
  // Starts from Canonical() (or LabelStudio() when "preset" says so) and
  // overrides the given keys. Throws std::invalid_argument on unknown keys.
  static FieldMapping FromJson(const nlohmann::json &json);
};

struct ImportResult {
  std::vector<AnnotationRecord> records;
  std::vector<std::string> warnings;
};

// Parses records from `content`. `file_name` only feeds unit type and split
// inference. Throws ImportError naming the record on malformed input,
// out-of-bounds offsets, unknown labels, overlapping or duplicate spans.
// Whitespace at span edges is trimmed with a warning.
ImportResult ImportCorpusString(std::string_view content,
                                const FieldMapping &mapping,
                                std::string_view file_name = "");

// Reads a file. Throws ImportError(-1, ...) if it cannot be opened.
ImportResult ImportCorpus(const std::string &path,
                          const FieldMapping &mapping = FieldMapping::Canonical());

// Canonical JSON of a record; keys in fixed order.
nlohmann::ordered_json RecordToJson(const AnnotationRecord &record);

// Canonical JSON Lines, one record per line.
std::string ExportCorpus(std::span<const AnnotationRecord> records);

struct SplitStats {
  long preamble_count = 0;
  long sentence_count = 0;
  long full_judgment_count = 0;
  long entity_count = 0;
  std::array<long, kNumLabels> judgment_counts{};
  std::array<long, kNumLabels> preamble_counts{};
  std::array<long, kNumLabels> chars{};  // summed span length per label

  friend bool operator==(const SplitStats &, const SplitStats &) = default;
};

struct CorpusStats {
  // Keyed by split name; records without a split go under "unspecified".
  std::map<std::string, SplitStats> splits;

  friend bool operator==(const CorpusStats &, const CorpusStats &) = default;
};

CorpusStats ComputeStats(std::span<const AnnotationRecord> records);

// Published corpus sizes. Per-label counts are known for the train split
// (by region) and the test split (gold count and mean length); a nullopt
// cell is not applicable.
struct PublishedSplit {
  std::string split;
  long preambles = 0;
  long sentences = 0;
  long entities = 0;
  std::array<std::optional<long>, kNumLabels> judgment_counts{};
  std::array<std::optional<long>, kNumLabels> preamble_counts{};
  std::array<std::optional<long>, kNumLabels> total_counts{};
  std::array<std::optional<long>, kNumLabels> avg_len{};
};

const std::vector<PublishedSplit> &PublishedCounts();

struct StatDelta {
  std::string split;
  std::string item;  // e.g. "entities", "PROVISION/judgment"
  long expected = 0;
  long actual = 0;
  long delta() const { return actual - expected; }
};

// Every published count next to the computed one, for splits present in
// `stats`.
std::vector<StatDelta> CompareWithPublished(const CorpusStats &stats);

nlohmann::ordered_json StatsToJson(const CorpusStats &stats);

}  // namespace legalner

#endif  // LEGALNER_CORPUS_H_
