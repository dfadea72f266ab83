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

#include "legalner/document.h"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "legalner/text_util.h"

namespace legalner {

namespace {

constexpr std::array<std::string_view, kNumLabels> kLabelNames = {
    "COURT",   "PETITIONER", "RESPONDENT", "JUDGE",     "LAWYER",
    "DATE",    "ORG",        "GPE",        "STATUTE",   "PROVISION",
    "PRECEDENT", "CASE_NUMBER", "WITNESS", "OTHER_PERSON",
};

std::string Describe(const EntitySpan &span) {
  return "span " + span.id + " (" + std::to_string(span.start) + ", " +
         std::to_string(span.end) + ", " + std::string(LabelName(span.label)) +
         ")";
}

void Add(std::vector<Violation> *out, Severity severity, std::string rule,
         std::string subject, std::string message) {
  out->push_back({severity, std::move(rule), std::move(subject),
                  std::move(message)});
}

}  // namespace

std::string_view LabelName(EntityLabel label) {
  return kLabelNames[LabelIndex(label)];
}

std::optional<EntityLabel> LabelFromName(std::string_view name) {
  for (EntityLabel label : kAllLabels) {
    if (kLabelNames[LabelIndex(label)] == name) return label;
  }
  return std::nullopt;
}

EntityLabel ParseLabel(std::string_view name) {
  auto label = LabelFromName(name);
  if (!label) {
    throw std::invalid_argument("unknown entity label '" + std::string(name) +
                                "'");
  }
  return *label;
}

bool AllowedIn(EntityLabel label, Region region) {
  switch (label) {
    case EntityLabel::kCourt:
    case EntityLabel::kPetitioner:
    case EntityLabel::kRespondent:
    case EntityLabel::kJudge:
      return true;
    case EntityLabel::kLawyer:
      return region == Region::kPreamble;
    default:
      return region == Region::kJudgment;
  }
}

std::string_view SourceName(SpanSource source) {
  return source == SpanSource::kGold ? "gold" : "predicted";
}

std::string_view DocTypeName(DocType type) {
  switch (type) {
    case DocType::kPreamble: return "PREAMBLE";
    case DocType::kJudgmentSentence: return "JUDGMENT_SENTENCE";
    case DocType::kFullJudgment: return "FULL_JUDGMENT";
  }
  return "";
}

std::optional<DocType> DocTypeFromName(std::string_view name) {
  for (DocType type : {DocType::kPreamble, DocType::kJudgmentSentence,
                       DocType::kFullJudgment}) {
    if (DocTypeName(type) == name) return type;
  }
  return std::nullopt;
}

std::vector<Violation> ValidateDoc(const JudgmentDoc &doc) {
  std::vector<Violation> out;
  const int length = CodePointLength(doc.text);

  // Per-span bounds.
  std::vector<size_t> valid;
  for (size_t i = 0; i < doc.spans.size(); ++i) {
    const EntitySpan &span = doc.spans[i];
    if (span.start >= span.end) {
      Add(&out, Severity::kError, "start >= end", Describe(span),
          "span start must be smaller than its end");
    } else if (span.start < 0 || span.end > length) {
      Add(&out, Severity::kError, "span out of bounds", Describe(span),
          "document length is " + std::to_string(length));
    } else {
      valid.push_back(i);
    }
  }

  // Flatness: sweep in (start, -end) order against the furthest-reaching
  // span seen so far.
  std::sort(valid.begin(), valid.end(), [&](size_t a, size_t b) {
    const EntitySpan &x = doc.spans[a];
    const EntitySpan &y = doc.spans[b];
    if (x.start != y.start) return x.start < y.start;
    if (x.end != y.end) return x.end > y.end;
    return a < b;
  });
  const EntitySpan *active = nullptr;
  for (size_t i : valid) {
    const EntitySpan &span = doc.spans[i];
    if (active != nullptr && span.start < active->end) {
      if (span.key() == active->key()) {
        Add(&out, Severity::kError, "duplicate span", Describe(span),
            "same offsets and label as span " + active->id);
      } else if (active->range().Contains(span.range()) ||
                 span.range().Contains(active->range())) {
        Add(&out, Severity::kError, "nested span", Describe(span),
            "nested with " + Describe(*active));
      } else {
        Add(&out, Severity::kError, "overlapping span", Describe(span),
            "overlaps " + Describe(*active));
      }
    }
    if (active == nullptr || span.end > active->end) active = &span;
  }

  // Sentences.
  for (size_t i = 0; i < doc.sentence_bounds.size(); ++i) {
    const TextRange &s = doc.sentence_bounds[i];
    std::string subject = "sentence " + std::to_string(i);
    if (s.start < 0 || s.end > length || s.start >= s.end) {
      Add(&out, Severity::kError, "sentence out of bounds", subject,
          "range (" + std::to_string(s.start) + ", " + std::to_string(s.end) +
              ") is empty or outside the text");
    }
    if (i > 0 && s.start < doc.sentence_bounds[i - 1].end) {
      Add(&out, Severity::kError, "sentence order", subject,
          "overlaps or precedes sentence " + std::to_string(i - 1));
    }
  }

  // Preamble boundary.
  if (doc.preamble_end < 0 || doc.preamble_end > length) {
    Add(&out, Severity::kError, "preamble_end out of bounds", "preamble_end",
        "value " + std::to_string(doc.preamble_end));
  } else {
    for (size_t i = 0; i < doc.sentence_bounds.size(); ++i) {
      const TextRange &s = doc.sentence_bounds[i];
      if (s.start < doc.preamble_end && doc.preamble_end < s.end) {
        Add(&out, Severity::kError, "preamble_end inside sentence",
            "preamble_end", "falls inside sentence " + std::to_string(i));
      }
    }
  }

  // Containment and validity domains.
  for (size_t i : valid) {
    const EntitySpan &span = doc.spans[i];
    if (span.start < doc.preamble_end && doc.preamble_end < span.end) {
      Add(&out, Severity::kError, "span crosses preamble boundary",
          Describe(span), "preamble ends at " +
                              std::to_string(doc.preamble_end));
      continue;
    }
    Region region = RegionOf(span.range(), doc.preamble_end);
    if (region == Region::kJudgment && !doc.sentence_bounds.empty()) {
      bool inside = std::any_of(
          doc.sentence_bounds.begin(), doc.sentence_bounds.end(),
          [&](const TextRange &s) { return s.Contains(span.range()); });
      if (!inside) {
        Add(&out, Severity::kError, "span outside sentence", Describe(span),
            "span is not contained in a single sentence");
      }
    }
    if (!AllowedIn(span.label, region)) {
      Add(&out, Severity::kWarning, "label outside validity domain",
          Describe(span),
          std::string(LabelName(span.label)) + " is not extracted from the " +
              (region == Region::kPreamble ? "preamble" : "judgment"));
    }
  }
  return out;
}

bool HasErrors(const std::vector<Violation> &violations) {
  return std::any_of(violations.begin(), violations.end(),
                     [](const Violation &v) {
                       return v.severity == Severity::kError;
                     });
}

std::string SpanText(const JudgmentDoc &doc, const EntitySpan &span) {
  Utf8Index index(doc.text);
  return std::string(index.Slice(span.start, span.end));
}

std::vector<EntitySpan> SortedSpans(std::vector<EntitySpan> spans) {
  std::stable_sort(spans.begin(), spans.end(),
                   [](const EntitySpan &a, const EntitySpan &b) {
                     return a.key() < b.key();
                   });
  return spans;
}

const EntitySpan *FindSpan(const JudgmentDoc &doc, std::string_view id) {
  for (const EntitySpan &span : doc.spans) {
    if (span.id == id) return &span;
  }
  return nullptr;
}

}  // namespace legalner
