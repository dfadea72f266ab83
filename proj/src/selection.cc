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

#include "legalner/selection.h"

#include <algorithm>
#include <cmath>
#include <queue>
#include <random>
#include <unordered_set>

#include "legalner/text_util.h"

namespace legalner {

namespace {

// Uniform integer in [0, n) from raw engine output, identical on every
// standard library (std::uniform_int_distribution is not).
uint64_t UniformBelow(std::mt19937_64 &gen, uint64_t n) {
  const uint64_t threshold = (0 - n) % n;
  for (;;) {
    uint64_t x = gen();
    if (x >= threshold) return x % n;
  }
}

bool HasLetter(std::string_view segment) {
  return std::any_of(segment.begin(), segment.end(),
                     [](char c) { return IsAsciiAlpha(c); });
}

}  // namespace

std::string_view ExclusionReasonName(ExclusionReason reason) {
  switch (reason) {
    case ExclusionReason::kNone: return "none";
    case ExclusionReason::kTooShort: return "too_short";
    case ExclusionReason::kNonEnglish: return "non_english";
    case ExclusionReason::kSideBySide: return "side_by_side";
    case ExclusionReason::kDuplicate: return "duplicate";
  }
  return "";
}

bool HasNonEnglishLetters(std::string_view text) {
  for (char32_t c : DecodeUtf8(text)) {
    if (c < 0x80 || IsSpace(c) || IsPunct(c) || c == U'₹') continue;
    return true;
  }
  return false;
}

bool HasSideBySideLayout(std::string_view text, int min_spaces) {
  size_t line_start = 0;
  while (line_start <= text.size()) {
    size_t line_end = text.find('\n', line_start);
    if (line_end == std::string_view::npos) line_end = text.size();
    std::string_view line = text.substr(line_start, line_end - line_start);
    for (size_t i = 0; i < line.size();) {
      if (line[i] != ' ' && line[i] != '\t') {
        ++i;
        continue;
      }
      size_t j = i;
      while (j < line.size() && (line[j] == ' ' || line[j] == '\t')) ++j;
      if (static_cast<int>(j - i) >= min_spaces && HasLetter(line.substr(0, i)) &&
          HasLetter(line.substr(j))) {
        return true;
      }
      i = j;
    }
    line_start = line_end + 1;
  }
  return false;
}

ExclusionReason ExclusionFor(const SelectionCandidate &candidate,
                             const SelectionOptions &options) {
  if (static_cast<int>(SplitWhitespace(candidate.text).size()) <
      options.min_tokens) {
    return ExclusionReason::kTooShort;
  }
  if (HasNonEnglishLetters(candidate.text)) return ExclusionReason::kNonEnglish;
  if (candidate.unit_type == DocType::kPreamble &&
      HasSideBySideLayout(candidate.text, options.side_by_side_spaces)) {
    return ExclusionReason::kSideBySide;
  }
  return ExclusionReason::kNone;
}

SelectionResult SelectSentences(std::span<const SelectionCandidate> candidates,
                                const SelectionOptions &options) {
  SelectionResult result;
  std::vector<size_t> eligible;
  std::unordered_set<std::string> seen;
  for (size_t i = 0; i < candidates.size(); ++i) {
    ExclusionReason reason = ExclusionFor(candidates[i], options);
    if (reason == ExclusionReason::kNone &&
        !seen.insert(NormalizeMention(candidates[i].text)).second) {
      reason = ExclusionReason::kDuplicate;
    }
    if (reason == ExclusionReason::kNone) {
      eligible.push_back(i);
    } else {
      result.excluded.emplace_back(i, reason);
    }
  }

  std::array<long, kNumLabels> frequency{};
  std::vector<size_t> zero_pool;
  for (size_t i : eligible) {
    if (candidates[i].spans.empty()) zero_pool.push_back(i);
    for (const EntitySpan &s : candidates[i].spans) {
      ++frequency[LabelIndex(s.label)];
    }
  }

  std::array<long, kNumLabels> taken{};
  auto unmet = [&](EntityLabel label) {
    auto it = options.quotas.find(label);
    return it == options.quotas.end() || taken[LabelIndex(label)] < it->second;
  };
  auto score = [&](size_t i) {
    double total = 0;
    for (const EntitySpan &s : candidates[i].spans) {
      if (unmet(s.label)) total += 1.0 / frequency[LabelIndex(s.label)];
    }
    return total;
  };

  // Scores only fall as quotas fill up, so a stale heap entry is an upper
  // bound and lazy re-evaluation yields the exact greedy order.
  using Entry = std::pair<double, size_t>;
  auto worse = [](const Entry &a, const Entry &b) {
    if (a.first != b.first) return a.first < b.first;
    return a.second > b.second;
  };
  std::priority_queue<Entry, std::vector<Entry>, decltype(worse)> heap(worse);
  for (size_t i : eligible) {
    if (!candidates[i].spans.empty()) heap.push({score(i), i});
  }
  auto all_met = [&] {
    if (options.quotas.empty()) return false;
    for (const auto &[label, quota] : options.quotas) {
      if (taken[LabelIndex(label)] < quota) return false;
    }
    return true;
  };
  while (!heap.empty() && !all_met()) {
    if (options.max_selected > 0 &&
        static_cast<long>(result.selected.size()) >= options.max_selected) {
      break;
    }
    auto [bound, i] = heap.top();
    heap.pop();
    const double current = score(i);
    if (current <= 0) continue;
    if (current < bound) {
      heap.push({current, i});
      continue;
    }
    result.selected.push_back(i);
    for (const EntitySpan &s : candidates[i].spans) ++taken[LabelIndex(s.label)];
  }
  result.entity_picks = result.selected.size();

  size_t want = static_cast<size_t>(
      std::llround(options.zero_entity_fraction * result.entity_picks));
  want = std::min(want, zero_pool.size());
  std::mt19937_64 gen(options.seed);
  for (size_t k = 0; k < want; ++k) {
    size_t j = k + UniformBelow(gen, zero_pool.size() - k);
    std::swap(zero_pool[k], zero_pool[j]);
    result.selected.push_back(zero_pool[k]);
  }
  return result;
}

std::vector<SelectionCandidate> CandidatesFromRecords(
    std::span<const AnnotationRecord> records,
    const SegmentationOptions &options, const VerbAnalyzer &analyzer) {
  std::vector<SelectionCandidate> out;
  for (const AnnotationRecord &record : records) {
    if (record.unit_type != DocType::kFullJudgment) {
      out.push_back({record.doc_id, record.doc_id, record.unit_type,
                     record.text, record.spans});
      continue;
    }
    Utf8Index index(record.text);
    const int length = index.size();
    const int preamble_end = record.preamble_end.value_or(
        SplitPreamble(record.text, analyzer, options));
    int unit = 0;
    auto add = [&](TextRange range, DocType type) {
      SelectionCandidate c;
      c.id = record.doc_id + "#" + std::to_string(unit++);
      c.doc_id = record.doc_id;
      c.unit_type = type;
      c.text = std::string(index.Slice(range.start, range.end));
      for (const EntitySpan &s : record.spans) {
        if (s.start >= range.start && s.end <= range.end) {
          EntitySpan shifted = s;
          shifted.start -= range.start;
          shifted.end -= range.start;
          c.spans.push_back(std::move(shifted));
        }
      }
      out.push_back(std::move(c));
    };
    if (preamble_end > 0) add({0, preamble_end}, DocType::kPreamble);
    std::vector<TextRange> sentences = MergeAcrossSpans(
        SegmentSentences(record.text, {preamble_end, length}, options),
        record.spans);
    for (const TextRange &s : sentences) add(s, DocType::kJudgmentSentence);
  }
  return out;
}

}  // namespace legalner
