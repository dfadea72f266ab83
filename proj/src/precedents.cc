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
#include <regex>
#include <set>

#include "legalner/coref.h"
#include "legalner/text_util.h"

namespace legalner {

namespace {

constexpr char kReporter[] = R"(([A-Z][A-Za-z.]*(?:\s+[A-Z][A-Za-z.]*)*?))";

std::string Group(const std::smatch &m, int group) {
  return group > 0 && group < static_cast<int>(m.size()) ? m[group].str()
                                                          : std::string();
}

std::string ReporterKey(std::string_view prefix, std::string_view reporter) {
  std::string key(prefix);
  for (char c : reporter) {
    if (c == '.' || IsSpace(static_cast<unsigned char>(c))) continue;
    key.push_back(c >= 'a' && c <= 'z' ? static_cast<char>(c - 32) : c);
  }
  return key;
}

class DisjointSets {
 public:
  explicit DisjointSets(size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  size_t Find(size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void Union(size_t a, size_t b) {
    a = Find(a);
    b = Find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<size_t> parent_;
};

double Jaccard(const std::set<std::string> &a, const std::set<std::string> &b) {
  if (a.empty() || b.empty()) return 0.0;
  size_t common = 0;
  for (const std::string &t : a) common += b.count(t);
  return static_cast<double>(common) / (a.size() + b.size() - common);
}

bool ContainsSequence(const std::vector<std::string> &haystack,
                      const std::vector<std::string> &needle) {
  if (needle.empty() || needle.size() > haystack.size()) return false;
  return std::search(haystack.begin(), haystack.end(), needle.begin(),
                     needle.end()) != haystack.end();
}

// Word tokens of a referent, without a trailing possessive.
std::vector<std::string> ReferentTokens(std::string_view text) {
  std::vector<std::string> tokens = WordTokens(text);
  if (!tokens.empty() && tokens.back().ends_with("'s")) {
    tokens.back().resize(tokens.back().size() - 2);
    if (tokens.back().empty()) tokens.pop_back();
  }
  return tokens;
}

struct CompiledPatterns {
  explicit CompiledPatterns(const PrecedentOptions &options)
      : separator(options.party_separator, std::regex::icase) {
    for (const CitationPattern &p : options.citation_patterns) {
      citations.emplace_back(p.regex);
    }
  }
  std::regex separator;
  std::vector<std::regex> citations;
};

PrecedentParts Parse(std::string_view text, const PrecedentOptions &options,
                     const CompiledPatterns &compiled);

struct BasePrecedent {
  size_t span_index;
  std::vector<std::string> first_tokens;
  std::vector<std::string> second_tokens;
  std::set<std::string> party_set;
  PrecedentParts parts;
};

}  // namespace

std::vector<CitationPattern> PrecedentOptions::DefaultCitationPatterns() {
  const std::string reporter = kReporter;
  return {
      // (1980) 2 SCC 565
      {R"(\((\d{4})\)\s*(\d+)\s+)" + reporter + R"(\s+(\d+))", "", 1, 2, 3,
       4},
      // [1980] 3 SCR 383
      {R"(\[(\d{4})\]\s*(\d+)\s+)" + reporter + R"(\s+(\d+))", "", 1, 2, 3,
       4},
      // 2005 (3) SCC 123
      {R"((\d{4})\s*\((\d+)\)\s*)" + reporter + R"(\s+(\d+))", "", 1, 2, 3,
       4},
      // AIR 1980 SC 1632
      {R"(AIR\s+(\d{4})\s+)" + reporter + R"(\s+(\d+))", "AIR", 1, 0, 2, 3},
  };
}

PrecedentParts ParsePrecedent(std::string_view text,
                              const PrecedentOptions &options) {
  return Parse(text, options, CompiledPatterns(options));
}

namespace {

PrecedentParts Parse(std::string_view text, const PrecedentOptions &options,
                     const CompiledPatterns &compiled) {
  PrecedentParts parts;
  const std::string s(text);

  // Citations: the earliest match starts the citation suffix.
  size_t citation_start = s.size();
  std::vector<std::pair<size_t, std::string>> keys;
  for (size_t p = 0; p < options.citation_patterns.size(); ++p) {
    const CitationPattern &pattern = options.citation_patterns[p];
    const std::regex &re = compiled.citations[p];
    for (auto it = std::sregex_iterator(s.begin(), s.end(), re);
         it != std::sregex_iterator(); ++it) {
      const std::smatch &m = *it;
      size_t pos = static_cast<size_t>(m.position(0));
      citation_start = std::min(citation_start, pos);
      std::string key = Group(m, pattern.year_group) + "|" +
                        Group(m, pattern.volume_group) + "|" +
                        ReporterKey(pattern.reporter_prefix,
                                    Group(m, pattern.reporter_group)) +
                        "|" + Group(m, pattern.page_group);
      keys.emplace_back(pos, std::move(key));
    }
  }
  std::stable_sort(keys.begin(), keys.end(),
                   [](const auto &a, const auto &b) { return a.first < b.first; });
  for (auto &[pos, key] : keys) {
    if (std::find(parts.citation_keys.begin(), parts.citation_keys.end(),
                  key) == parts.citation_keys.end()) {
      parts.citation_keys.push_back(std::move(key));
    }
  }

  const std::string names = s.substr(0, citation_start);
  std::smatch m;
  if (std::regex_search(names, m, compiled.separator)) {
    parts.first_party = StripPunct(CollapseWhitespace(m.prefix().str()));
    parts.second_party = StripPunct(CollapseWhitespace(m.suffix().str()));
  } else {
    parts.first_party = StripPunct(CollapseWhitespace(names));
  }
  return parts;
}

}  // namespace

PrecedentResult ClusterPrecedents(const JudgmentDoc &doc,
                                  const PrecedentOptions &options) {
  PrecedentResult result{doc, {}, {}};
  JudgmentDoc &out = result.doc;
  Utf8Index index(doc.text);
  const std::u32string text = DecodeUtf8(doc.text);
  const int n = static_cast<int>(text.size());
  const std::set<std::string> stopwords(options.party_stopwords.begin(),
                                        options.party_stopwords.end());
  const CompiledPatterns compiled(options);

  std::vector<size_t> order(out.spans.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) {
    return out.spans[a].key() < out.spans[b].key();
  });

  int longest_keyword = 0;
  for (const std::string &keyword : options.referent_keywords) {
    longest_keyword = std::max(longest_keyword, CodePointLength(keyword));
  }
  auto followed_by_keyword = [&](const EntitySpan &span) {
    int limit =
        std::min(n, span.end + options.referent_window + longest_keyword);
    std::u32string window(text.substr(span.end, limit - span.end));
    for (char32_t &c : window) {
      c = c == 0x2019 ? U'\'' : ToLowerAscii(c);
    }
    const std::string lowered = EncodeUtf8(window);
    for (const std::string &keyword : options.referent_keywords) {
      size_t pos = lowered.find(ToLowerAscii(keyword));
      if (pos != std::string::npos &&
          CodePointLength(std::string_view(lowered).substr(0, pos)) <=
              options.referent_window) {
        return true;
      }
    }
    return false;
  };

  // Single pass in document order: a referent may only resolve against
  // precedents that precede it and were not themselves referents.
  std::vector<BasePrecedent> bases;
  std::vector<std::pair<size_t, size_t>> attached;  // span index, base index
  for (size_t i : order) {
    EntitySpan &span = out.spans[i];
    const bool eligible = span.label == EntityLabel::kPrecedent ||
                          span.label == EntityLabel::kOrg ||
                          span.label == EntityLabel::kOtherPerson;
    if (!eligible || span.start < 0 || span.end > n) continue;
    std::string_view mention = index.Slice(span.start, span.end);

    if (followed_by_keyword(span)) {
      std::vector<std::string> needle = ReferentTokens(mention);
      std::optional<size_t> best;
      for (size_t b = bases.size(); b-- > 0;) {
        const EntitySpan &base = out.spans[bases[b].span_index];
        if (base.start >= span.start) continue;
        if (ContainsSequence(bases[b].first_tokens, needle) ||
            ContainsSequence(bases[b].second_tokens, needle)) {
          if (!best || base.start > out.spans[bases[*best].span_index].start) {
            best = b;
          }
        }
      }
      if (best) {
        result.referents.push_back(
            {span.id, span.label, out.spans[bases[*best].span_index].id});
        span.label = EntityLabel::kPrecedent;
        attached.emplace_back(i, *best);
        continue;
      }
    }
    if (span.label != EntityLabel::kPrecedent) continue;

    BasePrecedent base;
    base.span_index = i;
    base.parts = Parse(mention, options, compiled);
    base.first_tokens = WordTokens(base.parts.first_party);
    base.second_tokens = WordTokens(base.parts.second_party);
    for (const auto *tokens : {&base.first_tokens, &base.second_tokens}) {
      for (const std::string &t : *tokens) {
        if (stopwords.count(t) == 0) base.party_set.insert(t);
      }
    }
    bases.push_back(std::move(base));
  }

  // Cluster base precedents.
  DisjointSets sets(bases.size());
  for (size_t a = 0; a < bases.size(); ++a) {
    for (size_t b = a + 1; b < bases.size(); ++b) {
      const auto &ka = bases[a].parts.citation_keys;
      const auto &kb = bases[b].parts.citation_keys;
      bool shared_citation = std::any_of(ka.begin(), ka.end(), [&](auto &k) {
        return std::find(kb.begin(), kb.end(), k) != kb.end();
      });
      if (shared_citation ||
          Jaccard(bases[a].party_set, bases[b].party_set) >=
              options.party_jaccard) {
        sets.Union(a, b);
      }
    }
  }

  // Root base index -> cluster, numbered by first appearance.
  std::map<size_t, size_t> cluster_of_root;
  std::vector<std::vector<size_t>> members;  // span indices
  for (size_t b = 0; b < bases.size(); ++b) {
    size_t root = sets.Find(b);
    auto [it, inserted] = cluster_of_root.emplace(root, members.size());
    if (inserted) members.emplace_back();
    members[it->second].push_back(bases[b].span_index);
  }
  for (const auto &[span_index, base] : attached) {
    members[cluster_of_root.at(sets.Find(base))].push_back(span_index);
  }

  std::vector<std::vector<size_t>> cluster_bases(members.size());
  for (size_t b = 0; b < bases.size(); ++b) {
    cluster_bases[cluster_of_root.at(sets.Find(b))].push_back(b);
  }

  for (size_t c = 0; c < members.size(); ++c) {
    std::vector<size_t> &m = members[c];
    std::stable_sort(m.begin(), m.end(), [&](size_t a, size_t b) {
      return out.spans[a].key() < out.spans[b].key();
    });
    PrecedentCluster cluster;
    size_t head = m.front();
    for (size_t s : m) {
      cluster.member_span_ids.push_back(out.spans[s].id);
      if (out.spans[s].length() > out.spans[head].length()) head = s;
    }
    cluster.head_span_id = out.spans[head].id;
    for (size_t b : cluster_bases[c]) {
      for (const std::string *party :
           {&bases[b].parts.first_party, &bases[b].parts.second_party}) {
        std::string key = NormalizeMention(*party);
        if (!key.empty() &&
            std::find(cluster.party_keys.begin(), cluster.party_keys.end(),
                      key) == cluster.party_keys.end()) {
          cluster.party_keys.push_back(std::move(key));
        }
      }
      for (const std::string &key : bases[b].parts.citation_keys) {
        if (std::find(cluster.citation_keys.begin(),
                      cluster.citation_keys.end(),
                      key) == cluster.citation_keys.end()) {
          cluster.citation_keys.push_back(key);
        }
      }
    }
    result.clusters.push_back(std::move(cluster));
  }
  return result;
}

}  // namespace legalner
