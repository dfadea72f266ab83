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

// Document-level coreference for precedents and statutes.
//
// Judges cite a precedent in full once ("Gurbaksh Singh Sibbia and others Vs
// State of Punjab (1980) 2 SCC 565") and later refer back to it through a
// party name ("Sibbia's case (supra)"). Statutes are named in full once and
// then abbreviated through a parenthetical ("Companies Act, 1956 (for
// brevity, 'the Act')") or a well-known acronym (IPC, CrPC).

#ifndef LEGALNER_COREF_H_
#define LEGALNER_COREF_H_

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "legalner/document.h"

namespace legalner {

// ---------------------------------------------------------------------------
// Precedents

// A reporter citation regex and the capture groups holding its parts. A
// group index of 0 means the part is absent from this citation style.
struct CitationPattern {
  std::string regex;
  std::string reporter_prefix;  // prepended to the reporter, e.g. "AIR"
  int year_group = 0;
  int volume_group = 0;
  int reporter_group = 0;
  int page_group = 0;
};

struct PrecedentOptions {
  // Referent keywords must start within this many characters after the
  // referent span.
  int referent_window = 12;
  std::vector<std::string> referent_keywords = {"supra", "'s case"};
  // Minimum Jaccard overlap of party-name token sets for two precedents to
  // corefer.
  double party_jaccard = 0.8;
  // Separates the two parties. Matched case-insensitively.
  std::string party_separator = R"(\s+(?:vs\.?|v\.|versus)\s+)";
  std::vector<CitationPattern> citation_patterns = DefaultCitationPatterns();
  // Tokens ignored when comparing party names.
  std::vector<std::string> party_stopwords = {
      "and", "others", "ors", "anr", "another", "the", "of", "mr", "mrs",
      "ms", "m/s", "smt", "shri", "sri", "dr"};

  static std::vector<CitationPattern> DefaultCitationPatterns();
};

// Party names and citations parsed out of one precedent mention.
struct PrecedentParts {
  std::string first_party;
  std::string second_party;
  std::vector<std::string> citation_keys;  // e.g. "1980|2|SCC|565"
};

PrecedentParts ParsePrecedent(std::string_view text,
                              const PrecedentOptions &options = {});

struct PrecedentCluster {
  std::string head_span_id;
  std::vector<std::string> member_span_ids;  // document order
  std::vector<std::string> party_keys;
  std::vector<std::string> citation_keys;

  friend bool operator==(const PrecedentCluster &,
                         const PrecedentCluster &) = default;
};

// A short mention resolved to an earlier precedent.
struct ReferentLink {
  std::string span_id;
  EntityLabel old_label;
  std::string antecedent_span_id;

  friend bool operator==(const ReferentLink &, const ReferentLink &) = default;
};

struct PrecedentResult {
  JudgmentDoc doc;  // referents relabeled PRECEDENT
  std::vector<PrecedentCluster> clusters;
  std::vector<ReferentLink> referents;
};

// Groups PRECEDENT spans whose citations agree or whose party names overlap,
// then resolves ORG/OTHER_PERSON referents followed by "supra" or "'s case"
// to the nearest preceding precedent naming that party. Existing clusters
// are never merged by a referent. Each cluster's head is its longest member.
PrecedentResult ClusterPrecedents(const JudgmentDoc &doc,
                                  const PrecedentOptions &options = {});

// ---------------------------------------------------------------------------
// Statutes

// Acronym to full statute name. Keys are case-sensitive; dots and
// surrounding whitespace are ignored, so "Cr.P.C." finds "CrPC".
class AcronymTable {
 public:
  AcronymTable() = default;

  // IPC, CrPC, CPC, NI Act, MV Act.
  static AcronymTable Defaults();

  // Throws std::invalid_argument if the normalized key already exists.
  void Add(std::string_view acronym, std::string_view full_name);

  std::optional<std::string> Lookup(std::string_view text) const;

  const std::map<std::string, std::string> &entries() const {
    return entries_;
  }

  static std::string NormalizeKey(std::string_view text);

 private:
  std::map<std::string, std::string> entries_;
};

struct StatuteOptions {
  // The parenthetical must open within this many characters of the statute.
  int alias_window = 40;
  int max_parenthetical = 200;
  std::vector<std::string> brevity_keywords = {"for brevity", "for short",
                                               "in short", "hereinafter"};
};

struct StatuteCluster {
  std::string head_span_id;
  std::vector<std::string> member_span_ids;  // document order
  std::vector<std::string> aliases;          // normalized, sorted
  // Head text, or its full form when the head is an acronym.
  std::string canonical_name;

  friend bool operator==(const StatuteCluster &,
                         const StatuteCluster &) = default;
};

struct StatuteResult {
  std::vector<StatuteCluster> clusters;
  std::vector<std::string> warnings;
};

// Alias introduced by a brevity parenthetical such as "(for brevity, 'the
// Act')" or "(hereinafter referred to as the Code)". Returns nullopt if the
// text does not open with such a parenthetical.
std::optional<std::string> ExtractBrevityAlias(
    std::u32string_view following, const StatuteOptions &options = {});

// Builds statute clusters. A STATUTE span joins the cluster that owns its
// normalized text (or its acronym's full form) as an alias; otherwise it
// starts a new cluster. Brevity parentheticals bind new aliases; when an
// alias is bound twice, the later binding wins and a warning is recorded.
StatuteResult ClusterStatutes(const JudgmentDoc &doc,
                              const AcronymTable &acronyms,
                              const StatuteOptions &options = {});

// span id -> index into `clusters`.
std::map<std::string, int> StatuteClusterIndex(
    const std::vector<StatuteCluster> &clusters);

}  // namespace legalner

#endif  // LEGALNER_COREF_H_
