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

// Canonical data model shared by every processing stage: entity labels,
// labeled character spans, judgment documents and their validation.

#ifndef LEGALNER_DOCUMENT_H_
#define LEGALNER_DOCUMENT_H_

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

namespace legalner {

// The fourteen legal entity types.
enum class EntityLabel : uint8_t {
  kCourt,
  kPetitioner,
  kRespondent,
  kJudge,
  kLawyer,
  kDate,
  kOrg,
  kGpe,
  kStatute,
  kProvision,
  kPrecedent,
  kCaseNumber,
  kWitness,
  kOtherPerson,
};

inline constexpr int kNumLabels = 14;

inline constexpr std::array<EntityLabel, kNumLabels> kAllLabels = {
    EntityLabel::kCourt,     EntityLabel::kPetitioner,
    EntityLabel::kRespondent, EntityLabel::kJudge,
    EntityLabel::kLawyer,    EntityLabel::kDate,
    EntityLabel::kOrg,       EntityLabel::kGpe,
    EntityLabel::kStatute,   EntityLabel::kProvision,
    EntityLabel::kPrecedent, EntityLabel::kCaseNumber,
    EntityLabel::kWitness,   EntityLabel::kOtherPerson,
};

inline constexpr int LabelIndex(EntityLabel label) {
  return static_cast<int>(label);
}

// Upper-case wire name, e.g. "CASE_NUMBER".
std::string_view LabelName(EntityLabel label);

// Parses a wire name. Returns nullopt for anything but the 14 names.
std::optional<EntityLabel> LabelFromName(std::string_view name);

// Like LabelFromName but throws std::invalid_argument on unknown names.
EntityLabel ParseLabel(std::string_view name);

// The two parts of a judgment.
enum class Region : uint8_t { kPreamble, kJudgment };

// Whether a label may be extracted from a region. LAWYER is preamble-only;
// COURT, PETITIONER, RESPONDENT and JUDGE occur in both; the rest are
// judgment-only.
bool AllowedIn(EntityLabel label, Region region);

enum class SpanSource : uint8_t { kGold, kPredicted };

std::string_view SourceName(SpanSource source);

// Annotation unit of a corpus record.
enum class DocType : uint8_t { kPreamble, kJudgmentSentence, kFullJudgment };

std::string_view DocTypeName(DocType type);
std::optional<DocType> DocTypeFromName(std::string_view name);

// Half-open range [start, end) of code point offsets.
struct TextRange {
  int start = 0;
  int end = 0;

  int length() const { return end - start; }
  bool Contains(const TextRange &other) const {
    return start <= other.start && other.end <= end;
  }
  bool Overlaps(const TextRange &other) const {
    return start < other.end && other.start < end;
  }

  friend auto operator<=>(const TextRange &, const TextRange &) = default;
};

// One labeled span. Offsets count Unicode code points.
struct EntitySpan {
  std::string id;
  int start = 0;
  int end = 0;
  EntityLabel label = EntityLabel::kOtherPerson;
  SpanSource source = SpanSource::kGold;

  int length() const { return end - start; }
  TextRange range() const { return {start, end}; }

  // Identity for set operations.
  std::tuple<int, int, EntityLabel> key() const {
    return {start, end, label};
  }

  friend bool operator==(const EntitySpan &, const EntitySpan &) = default;
};

struct DocMeta {
  std::optional<std::string> court;
  std::optional<std::string> decision_date;
  std::optional<std::string> case_type;

  friend bool operator==(const DocMeta &, const DocMeta &) = default;
};

// A judgment (or one annotation unit of it) with its entity spans.
struct JudgmentDoc {
  std::string doc_id;
  std::string text;  // UTF-8
  std::vector<TextRange> sentence_bounds;
  int preamble_end = 0;
  std::vector<EntitySpan> spans;
  DocMeta meta;

  friend bool operator==(const JudgmentDoc &, const JudgmentDoc &) = default;
};

// Region of a span given the preamble end offset.
inline Region RegionOf(const TextRange &range, int preamble_end) {
  return range.end <= preamble_end ? Region::kPreamble : Region::kJudgment;
}

enum class Severity : uint8_t { kError, kWarning };

// One broken invariant. `rule` is a short fixed string ("nested span",
// "start >= end", ...); `subject` names the offending span or sentence.
struct Violation {
  Severity severity = Severity::kError;
  std::string rule;
  std::string subject;
  std::string message;

  friend bool operator==(const Violation &, const Violation &) = default;
};

// Checks every document invariant. Validity-domain breaches (e.g. a LAWYER
// in the judgment region) come back as warnings; everything else is an
// error. Returns an empty list iff the document is well formed.
std::vector<Violation> ValidateDoc(const JudgmentDoc &doc);

bool HasErrors(const std::vector<Violation> &violations);

// Text of a span. Builds a fresh index; prefer Utf8Index in loops.
std::string SpanText(const JudgmentDoc &doc, const EntitySpan &span);

// Spans sorted by (start, end, label).
std::vector<EntitySpan> SortedSpans(std::vector<EntitySpan> spans);

// Finds a span by id, or nullptr.
const EntitySpan *FindSpan(const JudgmentDoc &doc, std::string_view id);

}  // namespace legalner

#endif  // LEGALNER_DOCUMENT_H_
