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

// Preamble/judgment split and sentence segmentation.
//
// A judgment opens with a formatted preamble (parties, court, coram,
// counsel) that usually ends on a line holding only a marker such as
// JUDGMENT or ORDER. Without a marker, the judgment starts at the first of
// two consecutive sentences that contain a verb, since the preamble is made
// of fragments rather than grammatical sentences.

#ifndef LEGALNER_SEGMENTATION_H_
#define LEGALNER_SEGMENTATION_H_

#include <functional>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "legalner/document.h"

namespace legalner {

// Decides whether a sentence contains a verb. Callers may plug in a real
// part-of-speech tagger.
using VerbAnalyzer = std::function<bool(std::string_view sentence)>;

// Closed-list analyzer. A sentence has a verb if any token is in the bundled
// list of auxiliaries and common legal verbs (case-insensitive), or if a
// lower-case token of five or more letters ends in -ed, -ing or -es and is
// not in the stoplist of nouns and adjectives with those endings.
class DefaultVerbAnalyzer {
 public:
  DefaultVerbAnalyzer();

  bool operator()(std::string_view sentence) const;

  bool IsVerbToken(std::string_view token) const;

 private:
  std::unordered_set<std::string> verbs_;
  std::unordered_set<std::string> stoplist_;
};

struct SentenceAnalysis {
  TextRange range;
  bool has_verb = false;
};

struct SegmentationOptions {
  // Marker keywords; a line matches when its letters, ignoring spacing,
  // punctuation and case, spell one of these.
  std::vector<std::string> markers = {"JUDGMENT", "ORDER", "JUDGEMENT",
                                      "J U D G M E N T", "O R D E R"};
  // Abbreviations whose trailing period never ends a sentence.
  std::vector<std::string> abbreviations = {
      "No.",  "Nos.", "v.",   "vs.",  "Vs.",  "Mr.",  "Mrs.", "Ms.",
      "Dr.",  "M/s.", "Smt.", "Sh.",  "Hon'ble.", "Sec.", "Art.", "Ors.",
      "Anr.", "Rs.",  "Crl.", "Ltd.", "Pvt.", "Co.",  "Sri.", "Shri.", "Govt.",
      "viz.", "i.e.", "e.g.", "Cl.",  "Para.", "para."};
  // Runs of initials ("A. K. Sikri", "Crl. A. No.") never end a sentence.
  bool guard_initials = true;
  // Treat every line break as a sentence boundary.
  bool break_on_newline = true;
};

// Returns the code point offset where the judgment region begins: just past
// the first standalone marker line; else the start of the first of two
// consecutive verb-bearing sentences; else 0.
int SplitPreamble(std::string_view text, const VerbAnalyzer &analyzer,
                  const SegmentationOptions &options = {});

// Sentence ranges of text[region.start, region.end), trimmed of whitespace,
// ordered and disjoint, covering every non-whitespace character of the
// region. Splits after . ? ! (plus trailing quotes and brackets) when
// followed by whitespace, except after a guarded abbreviation.
std::vector<TextRange> SegmentSentences(std::string_view text,
                                        TextRange region,
                                        const SegmentationOptions &options = {});

// Sentences of the region with verb flags.
std::vector<SentenceAnalysis> AnalyzeSentences(
    std::string_view text, TextRange region, const VerbAnalyzer &analyzer,
    const SegmentationOptions &options = {});

// Merges consecutive sentences whenever a span straddles their boundary, so
// that no sentence splits inside an entity.
std::vector<TextRange> MergeAcrossSpans(std::vector<TextRange> sentences,
                                        const std::vector<EntitySpan> &spans);

// Number of spans that would be split by SegmentSentences over `doc.text`.
int CountSplitSpans(const JudgmentDoc &doc,
                    const SegmentationOptions &options = {});

}  // namespace legalner

#endif  // LEGALNER_SEGMENTATION_H_
