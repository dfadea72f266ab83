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

#include "legalner/segmentation.h"

#include <algorithm>

#include "legalner/text_util.h"

namespace legalner {

namespace {

// Auxiliaries, modals and verbs frequent in judgment prose.
const char *const kVerbList[] = {
    "is", "are", "was", "were", "be", "been", "being", "am", "has", "have",
    "had", "having", "do", "does", "did", "done", "shall", "should", "will",
    "would", "may", "might", "must", "can", "could", "cannot", "ought",
    "say", "says", "said", "held", "hold", "holds", "find", "finds", "found",
    "observe", "observes", "observed", "submit", "submits", "submitted",
    "contend", "contends", "contended", "argue", "argues", "argued",
    "stated", "allowed", "dismissed", "heard", "perused", "considered",
    "granted", "directed", "ordered", "appeared", "relied", "placed",
    "quashed", "convicted", "acquitted", "sentenced", "pleaded",
    "challenged", "preferred", "passed", "provides", "provided", "reads",
    "read", "filed", "file", "claimed", "denied", "deny", "sought", "seeks",
    "seek", "raised", "raise", "urged", "urge", "noted", "noticed",
    "examined", "recorded", "deposed", "admitted", "disposed", "remanded",
    "affirmed", "upheld", "reversed", "modified", "issued", "lodged",
    "registered", "arrested", "committed", "charged", "alleged", "took",
    "take", "takes", "taken", "made", "make", "makes", "gave", "give",
    "gives", "given", "came", "come", "comes", "went", "go", "goes", "gone",
    "got", "get", "saw", "see", "seen", "knew", "know", "known", "thought",
    "think", "felt", "left", "kept", "brought", "bring", "told", "tell",
    "wrote", "written", "paid", "pay", "sold", "sell", "bought", "laid",
    "lies", "led", "meant", "means", "met", "ran", "become", "became",
    "becomes", "seems", "seemed", "appears", "remained", "remains", "shows",
    "showed", "shown", "proved", "prove", "proves", "established", "failed",
    "fails", "succeeded", "succeeds", "refers", "referred", "relates",
    "related", "deals", "dealt", "applies", "applied", "apply", "requires",
    "required", "contains", "contained", "includes", "included", "mentions",
    "mentioned", "explains", "explained", "defines", "defined", "empowers",
    "prescribes", "prescribed", "agree", "agreed", "agrees", "accept",
    "accepted", "reject", "rejected", "rejects", "consider", "considers",
    "decide", "decided", "decides", "conclude", "concluded", "concludes",
    "stands", "stood", "falls", "fell", "exists", "existed", "exist",
    "occurred", "occurs", "happened", "attacked", "killed", "died",
    "murdered", "assaulted", "injured", "caused", "causes", "executed",
    "entered", "obtained", "received", "served", "sent", "called", "asked",
    "replied", "answered", "supported", "opposed", "prays", "prayed",
    "won", "lost", "dealt", "cited", "discussed", "construed", "interpreted",
};

// Nouns, adjectives and prepositions carrying a verb-like suffix.
const char *const kSuffixStoplist[] = {
    "dated", "learned", "accused", "deceased", "aggrieved", "concerned",
    "limited", "united", "hundred", "sacred", "indeed", "reserved",
    "pronounced", "delivered", "during", "morning", "evening", "nothing",
    "something", "anything", "everything", "string", "spring", "sibling",
    "building", "hearing", "proceedings", "pending", "regarding",
    "according", "notwithstanding", "including", "sitting", "ceiling",
    "feeling", "meeting", "lodging", "offering", "opening", "standing",
    "understanding", "warning", "writing", "ruling", "finding", "reasoning",
    "bearing", "parties", "cases", "sales", "rules", "notes", "premises",
    "properties", "duties", "charges", "states", "schedules", "articles",
    "judges", "justices", "offences", "advocates", "times", "lines",
    "crimes", "wages", "houses", "damages", "witnesses", "appearances",
    "services", "offices", "sources", "resources", "places", "prices",
    "clauses", "courses", "purposes", "practices", "sentences", "issues",
    "stages", "images", "pages", "villages", "colleges", "languages",
    "messages", "measures", "procedures", "structures", "features", "types",
    "authorities", "companies", "societies", "facilities", "liabilities",
    "activities", "categories", "countries", "cities", "bodies", "copies",
    "entries", "inquiries", "injuries", "penalties", "policies", "remedies",
    "salaries", "supplies", "territories", "treaties", "universities",
    "varieties", "deputies", "secretaries", "beneficiaries", "employees",
    "trustees", "guarantees", "committees", "lessees", "assessees",
    "allottees", "nominees", "licensees", "transferees", "vendees",
    "mortgagees", "addresses", "businesses", "classes", "processes",
    "losses", "taxes", "boxes", "matches", "branches", "benches",
    "searches", "vehicles", "principles", "titles", "examples", "modules",
    "degrees", "legatees",
};

bool IsOpeningPunct(char32_t c) {
  return c == '(' || c == '[' || c == '"' || c == '\'' || c == 0x201C ||
         c == 0x2018;
}

bool IsClosingPunct(char32_t c) {
  return c == ')' || c == ']' || c == '"' || c == '\'' || c == 0x201D ||
         c == 0x2019;
}

// "K." and the like.
bool IsInitial(std::u32string_view token) {
  return token.size() == 2 && token[0] >= 'A' && token[0] <= 'Z' &&
         token[1] == '.';
}

bool IsTerminator(char32_t c) { return c == '.' || c == '?' || c == '!'; }

// Upper-cased letters of a line, or empty if the line holds anything but
// letters, whitespace and punctuation.
std::u32string MarkerLetters(std::u32string_view line) {
  std::u32string letters;
  for (char32_t c : line) {
    if (IsAsciiAlpha(c)) {
      letters.push_back(c >= 'a' ? c - ('a' - 'A') : c);
    } else if (!IsSpace(c) && !IsPunct(c)) {
      return {};
    }
  }
  return letters;
}

std::vector<TextRange> Segment(const std::u32string &text, TextRange region,
                               const SegmentationOptions &options,
                               bool break_on_newline) {
  std::vector<std::u32string> guards;
  guards.reserve(options.abbreviations.size());
  for (const std::string &a : options.abbreviations) {
    guards.push_back(DecodeUtf8(a));
  }

  std::vector<TextRange> out;
  const int end = std::min<int>(region.end, text.size());
  auto emit = [&](int b, int e) {
    while (b < e && IsSpace(text[b])) ++b;
    while (e > b && IsSpace(text[e - 1])) --e;
    if (b < e) out.push_back({b, e});
  };

  int start = std::max(region.start, 0);
  int i = start;
  while (i < end) {
    char32_t c = text[i];
    if (c == '\n' && break_on_newline) {
      emit(start, i);
      start = ++i;
      continue;
    }
    if (!IsTerminator(c)) {
      ++i;
      continue;
    }
    int j = i + 1;
    while (j < end && (IsTerminator(text[j]) || IsClosingPunct(text[j]))) ++j;
    if (j < end && !IsSpace(text[j])) {
      i = j;
      continue;
    }
    if (c == '.') {
      int t = i;
      while (t > start && !IsSpace(text[t - 1])) --t;
      while (t < i && IsOpeningPunct(text[t])) ++t;
      std::u32string_view token(text.data() + t, i + 1 - t);
      bool guarded = std::any_of(guards.begin(), guards.end(),
                                 [&](const std::u32string &g) {
                                   return token == g;
                                 });
      if (options.guard_initials && IsInitial(token)) {
        // Only before or within a run of initials or abbreviations
        // ("A. K. Sikri", "Crl. A. No. 5"), so "A v. B. He won." splits.
        int p = t;
        while (p > start && IsSpace(text[p - 1])) --p;
        int q = p;
        while (q > start && !IsSpace(text[q - 1])) --q;
        int r = j;
        while (r < end && IsSpace(text[r])) ++r;
        int w = r;
        while (w < end && !IsSpace(text[w])) ++w;
        const std::u32string_view next(text.data() + r,
                                       static_cast<size_t>(w - r));
        guarded = IsInitial({text.data() + q, static_cast<size_t>(p - q)}) ||
                  IsInitial(next) ||
                  std::find(guards.begin(), guards.end(), next) != guards.end();
      }
      if (guarded) {
        i = j;
        continue;
      }
    }
    emit(start, j);
    start = i = j;
  }
  emit(start, end);
  return out;
}

}  // namespace

DefaultVerbAnalyzer::DefaultVerbAnalyzer() {
  for (const char *v : kVerbList) verbs_.insert(v);
  for (const char *s : kSuffixStoplist) stoplist_.insert(s);
}

bool DefaultVerbAnalyzer::IsVerbToken(std::string_view token) const {
  std::string lower = ToLowerAscii(token);
  if (verbs_.count(lower) > 0) return true;
  if (lower != token || token.size() < 5) return false;
  if (!std::all_of(token.begin(), token.end(),
                   [](char c) { return c >= 'a' && c <= 'z'; })) {
    return false;
  }
  if (stoplist_.count(lower) > 0) return false;
  return lower.ends_with("ed") || lower.ends_with("ing") ||
         lower.ends_with("es");
}

bool DefaultVerbAnalyzer::operator()(std::string_view sentence) const {
  size_t i = 0;
  while (i < sentence.size()) {
    while (i < sentence.size() &&
           !IsAsciiAlpha(static_cast<unsigned char>(sentence[i]))) {
      ++i;
    }
    size_t j = i;
    while (j < sentence.size() &&
           (IsAsciiAlpha(static_cast<unsigned char>(sentence[j])) ||
            (sentence[j] == '\'' && j + 1 < sentence.size() &&
             IsAsciiAlpha(static_cast<unsigned char>(sentence[j + 1]))))) {
      ++j;
    }
    if (j > i && IsVerbToken(sentence.substr(i, j - i))) return true;
    i = j;
  }
  return false;
}

int SplitPreamble(std::string_view text, const VerbAnalyzer &analyzer,
                  const SegmentationOptions &options) {
  const std::u32string decoded = DecodeUtf8(text);
  const int n = static_cast<int>(decoded.size());

  std::vector<std::u32string> markers;
  for (const std::string &m : options.markers) {
    std::u32string letters = MarkerLetters(DecodeUtf8(m));
    if (!letters.empty()) markers.push_back(std::move(letters));
  }

  // Marker rule.
  int line_start = 0;
  while (line_start < n) {
    int line_end = line_start;
    while (line_end < n && decoded[line_end] != '\n') ++line_end;
    std::u32string letters = MarkerLetters(
        std::u32string_view(decoded).substr(line_start,
                                            line_end - line_start));
    if (!letters.empty() &&
        std::find(markers.begin(), markers.end(), letters) != markers.end()) {
      return line_end < n ? line_end + 1 : n;
    }
    line_start = line_end + 1;
  }

  // Two consecutive verb-bearing sentences.
  std::vector<TextRange> units =
      Segment(decoded, {0, n}, options, /*break_on_newline=*/true);
  Utf8Index index(text);
  bool previous_has_verb = false;
  for (size_t i = 0; i < units.size(); ++i) {
    bool has_verb = analyzer(index.Slice(units[i].start, units[i].end));
    if (previous_has_verb && has_verb) {
      return i == 1 ? 0 : units[i - 1].start;
    }
    previous_has_verb = has_verb;
  }
  return 0;
}

std::vector<TextRange> SegmentSentences(std::string_view text,
                                        TextRange region,
                                        const SegmentationOptions &options) {
  if (region.start >= region.end) return {};
  return Segment(DecodeUtf8(text), region, options, options.break_on_newline);
}

std::vector<SentenceAnalysis> AnalyzeSentences(
    std::string_view text, TextRange region, const VerbAnalyzer &analyzer,
    const SegmentationOptions &options) {
  Utf8Index index(text);
  std::vector<SentenceAnalysis> out;
  for (const TextRange &range : SegmentSentences(text, region, options)) {
    out.push_back({range, analyzer(index.Slice(range.start, range.end))});
  }
  return out;
}

std::vector<TextRange> MergeAcrossSpans(std::vector<TextRange> sentences,
                                        const std::vector<EntitySpan> &spans) {
  if (sentences.empty()) return sentences;
  std::vector<TextRange> merged;
  merged.push_back(sentences.front());
  for (size_t i = 1; i < sentences.size(); ++i) {
    const int left_end = merged.back().end;
    const int right_start = sentences[i].start;
    bool straddled = std::any_of(spans.begin(), spans.end(),
                                 [&](const EntitySpan &s) {
                                   return s.start < left_end &&
                                          s.end > right_start;
                                 });
    if (straddled) {
      merged.back().end = sentences[i].end;
    } else {
      merged.push_back(sentences[i]);
    }
  }
  return merged;
}

int CountSplitSpans(const JudgmentDoc &doc,
                    const SegmentationOptions &options) {
  const int n = CodePointLength(doc.text);
  std::vector<TextRange> sentences =
      SegmentSentences(doc.text, {0, n}, options);
  int count = 0;
  for (const EntitySpan &span : doc.spans) {
    bool inside = std::any_of(sentences.begin(), sentences.end(),
                              [&](const TextRange &s) {
                                return s.Contains(span.range());
                              });
    if (!inside) ++count;
  }
  return count;
}

}  // namespace legalner
