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

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "legalner/coref.h"
#include "legalner/text_util.h"

namespace legalner {

namespace {

bool IsQuote(char32_t c) {
  return c == '\'' || c == '"' || c == 0x2018 || c == 0x2019 ||
         c == 0x201C || c == 0x201D;
}

// Quoted phrase inside `text`, if any. An opening quote must not be glued
// to a preceding letter and a closing quote must not be followed by one,
// which skips apostrophes as in "Hon'ble".
std::optional<std::u32string> QuotedPhrase(std::u32string_view text) {
  for (size_t i = 0; i < text.size(); ++i) {
    if (!IsQuote(text[i]) || (i > 0 && IsAsciiAlnum(text[i - 1]))) continue;
    for (size_t j = i + 1; j < text.size(); ++j) {
      if (!IsQuote(text[j])) continue;
      if (j + 1 < text.size() && IsAsciiAlnum(text[j + 1])) continue;
      return std::u32string(text.substr(i + 1, j - i - 1));
    }
  }
  return std::nullopt;
}

struct AliasOwner {
  int cluster;
  bool brevity;
};

struct WorkingCluster {
  std::vector<size_t> members;
  std::vector<bool> via_brevity;
};

}  // namespace

AcronymTable AcronymTable::Defaults() {
  AcronymTable table;
  table.Add("IPC", "Indian Penal Code");
  table.Add("CrPC", "Code of Criminal Procedure");
  table.Add("CPC", "Code of Civil Procedure");
  table.Add("NI Act", "Negotiable Instruments Act");
  table.Add("MV Act", "Motor Vehicles Act");
  return table;
}

std::string AcronymTable::NormalizeKey(std::string_view text) {
  std::string without_dots;
  for (char c : text) {
    if (c != '.') without_dots.push_back(c);
  }
  return CollapseWhitespace(without_dots);
}

void AcronymTable::Add(std::string_view acronym, std::string_view full_name) {
  std::string key = NormalizeKey(acronym);
  if (key.empty()) throw std::invalid_argument("empty acronym");
  if (!entries_.emplace(key, std::string(full_name)).second) {
    throw std::invalid_argument("duplicate acronym '" + key + "'");
  }
}

std::optional<std::string> AcronymTable::Lookup(std::string_view text) const {
  auto it = entries_.find(NormalizeKey(text));
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::string> ExtractBrevityAlias(
    std::u32string_view following, const StatuteOptions &options) {
  // Opening parenthesis within the window, before any sentence end.
  size_t open = std::u32string_view::npos;
  const size_t window =
      std::min<size_t>(following.size(), std::max(options.alias_window, 0));
  for (size_t i = 0; i < window; ++i) {
    if (following[i] == '(') {
      open = i;
      break;
    }
    if ((following[i] == '.' || following[i] == ';') &&
        (i + 1 == following.size() || IsSpace(following[i + 1]))) {
      return std::nullopt;
    }
  }
  if (open == std::u32string_view::npos) return std::nullopt;

  size_t close = std::u32string_view::npos;
  int depth = 0;
  const size_t limit = std::min<size_t>(
      following.size(), open + 1 + std::max(options.max_parenthetical, 0));
  for (size_t i = open; i < limit; ++i) {
    if (following[i] == '(') ++depth;
    if (following[i] == ')' && --depth == 0) {
      close = i;
      break;
    }
  }
  if (close == std::u32string_view::npos) return std::nullopt;

  std::u32string inner(following.substr(open + 1, close - open - 1));
  std::u32string lowered = inner;
  for (char32_t &c : lowered) c = ToLowerAscii(c);
  const std::string lowered_utf8 = EncodeUtf8(lowered);

  size_t best_pos = std::string::npos;
  size_t best_len = 0;
  for (const std::string &keyword : options.brevity_keywords) {
    size_t pos = FindWholePhrase(lowered_utf8, ToLowerAscii(keyword));
    if (pos < best_pos) {
      best_pos = pos;
      best_len = keyword.size();
    }
  }
  if (best_pos == std::string::npos) return std::nullopt;

  const size_t after_cp =
      CodePointLength(std::string_view(lowered_utf8).substr(0,
                                                            best_pos + best_len));
  std::u32string_view after = std::u32string_view(inner).substr(after_cp);

  if (auto quoted = QuotedPhrase(after)) {
    std::string alias = CollapseWhitespace(StripPunct(EncodeUtf8(*quoted)));
    if (!alias.empty()) return alias;
  }

  std::string rest = CollapseWhitespace(StripPunct(EncodeUtf8(after)));
  for (bool stripped = true; stripped;) {
    stripped = false;
    for (std::string_view prefix : {"referred to as ", "called ", "as "}) {
      if (ToLowerAscii(rest).starts_with(prefix)) {
        rest = StripPunct(rest.substr(prefix.size()));
        stripped = true;
      }
    }
  }
  if (rest.empty()) return std::nullopt;
  return rest;
}

StatuteResult ClusterStatutes(const JudgmentDoc &doc,
                              const AcronymTable &acronyms,
                              const StatuteOptions &options) {
  StatuteResult result;
  Utf8Index index(doc.text);
  const std::u32string text = DecodeUtf8(doc.text);
  const int n = static_cast<int>(text.size());

  std::vector<size_t> statutes;
  for (size_t i = 0; i < doc.spans.size(); ++i) {
    const EntitySpan &s = doc.spans[i];
    if (s.label == EntityLabel::kStatute && s.start >= 0 && s.end <= n &&
        s.start < s.end) {
      statutes.push_back(i);
    }
  }
  std::stable_sort(statutes.begin(), statutes.end(), [&](size_t a, size_t b) {
    return doc.spans[a].key() < doc.spans[b].key();
  });

  std::vector<WorkingCluster> working;
  std::map<std::string, AliasOwner> owner;
  auto first_id = [&](int c) {
    return doc.spans[working[c].members.front()].id;
  };
  auto bind = [&](const std::string &alias, int cluster, bool brevity) {
    if (alias.empty()) return;
    auto it = owner.find(alias);
    if (it != owner.end()) {
      if (it->second.cluster == cluster) return;
      result.warnings.push_back(
          "alias collision: \"" + alias + "\" rebound from the cluster of " +
          first_id(it->second.cluster) + " to the cluster of " +
          first_id(cluster));
    }
    owner[alias] = {cluster, brevity};
  };

  for (size_t k = 0; k < statutes.size(); ++k) {
    const EntitySpan &span = doc.spans[statutes[k]];
    const std::string_view mention = index.Slice(span.start, span.end);
    const std::string norm = NormalizeMention(mention);
    const std::optional<std::string> full = acronyms.Lookup(mention);

    int cluster = -1;
    bool via_brevity = false;
    if (auto it = owner.find(norm); it != owner.end()) {
      cluster = it->second.cluster;
      via_brevity = it->second.brevity;
    } else if (full) {
      if (auto f = owner.find(NormalizeMention(*full)); f != owner.end()) {
        cluster = f->second.cluster;
        via_brevity = f->second.brevity;
      }
    }
    if (cluster < 0) {
      cluster = static_cast<int>(working.size());
      working.emplace_back();
    }
    working[cluster].members.push_back(statutes[k]);
    working[cluster].via_brevity.push_back(via_brevity);
    bind(norm, cluster, via_brevity);
    if (full) bind(NormalizeMention(*full), cluster, false);

    // A brevity parenthetical may only belong to this span, so stop the
    // search at the next statute mention.
    int stop = k + 1 < statutes.size() ? doc.spans[statutes[k + 1]].start : n;
    stop = std::max(stop, span.end);
    if (auto alias = ExtractBrevityAlias(
            std::u32string_view(text).substr(span.end, stop - span.end),
            options)) {
      std::string key = NormalizeMention(*alias);
      if (key != norm) bind(key, cluster, true);
    }
  }

  for (int c = 0; c < static_cast<int>(working.size()); ++c) {
    const WorkingCluster &w = working[c];
    StatuteCluster cluster;
    size_t head = w.members.front();
    for (size_t m = 0; m < w.members.size(); ++m) {
      const EntitySpan &s = doc.spans[w.members[m]];
      cluster.member_span_ids.push_back(s.id);
      if (!w.via_brevity[m] && s.length() > doc.spans[head].length()) {
        head = w.members[m];
      }
    }
    const EntitySpan &head_span = doc.spans[head];
    const std::string_view head_text =
        index.Slice(head_span.start, head_span.end);
    cluster.head_span_id = head_span.id;
    cluster.canonical_name =
        acronyms.Lookup(head_text).value_or(CollapseWhitespace(head_text));

    std::set<std::string> aliases = {NormalizeMention(head_text)};
    for (const auto &[alias, who] : owner) {
      if (who.cluster == c) aliases.insert(alias);
    }
    cluster.aliases.assign(aliases.begin(), aliases.end());
    result.clusters.push_back(std::move(cluster));
  }
  return result;
}

std::map<std::string, int> StatuteClusterIndex(
    const std::vector<StatuteCluster> &clusters) {
  std::map<std::string, int> index;
  for (int c = 0; c < static_cast<int>(clusters.size()); ++c) {
    for (const std::string &id : clusters[c].member_span_ids) index[id] = c;
  }
  return index;
}

}  // namespace legalner
