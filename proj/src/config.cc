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

#include "legalner/config.h"

#include <fstream>
#include <functional>
#include <map>
#include <stdexcept>

namespace legalner {

using nlohmann::json;

namespace {

// Walks the keys of one section, dispatching each to its handler.
void ForEachKey(const json &section, const std::string &where,
                const std::map<std::string, std::function<void(const json &)>>
                    &handlers) {
  if (!section.is_object()) {
    throw std::invalid_argument(where + " must be an object");
  }
  for (const auto &[key, value] : section.items()) {
    auto it = handlers.find(key);
    if (it == handlers.end()) {
      throw std::invalid_argument("unknown key '" + key + "' in " + where);
    }
    try {
      it->second(value);
    } catch (const json::exception &e) {
      throw std::invalid_argument(where + "." + key + ": " + e.what());
    }
  }
}

template <typename T>
std::function<void(const json &)> Set(T *target) {
  return [target](const json &value) { *target = value.get<T>(); };
}

std::vector<CitationPattern> ParsePatterns(const json &value) {
  std::vector<CitationPattern> out;
  for (const json &item : value) {
    CitationPattern p;
    ForEachKey(item, "precedents.citation_patterns",
               {{"regex", Set(&p.regex)},
                {"reporter_prefix", Set(&p.reporter_prefix)},
                {"year", Set(&p.year_group)},
                {"volume", Set(&p.volume_group)},
                {"reporter", Set(&p.reporter_group)},
                {"page", Set(&p.page_group)}});
    if (p.regex.empty()) {
      throw std::invalid_argument("citation pattern without regex");
    }
    out.push_back(std::move(p));
  }
  return out;
}

}  // namespace

PipelineConfig PipelineConfig::FromJson(const json &config) {
  PipelineConfig c;
  std::map<std::string, std::string> acronyms;
  bool replace_acronyms = false;

  ForEachKey(config, "config", {
    {"segmentation", [&](const json &s) {
      ForEachKey(s, "segmentation",
                 {{"markers", Set(&c.segmentation.markers)},
                  {"abbreviations", Set(&c.segmentation.abbreviations)},
                  {"break_on_newline", Set(&c.segmentation.break_on_newline)},
                  {"guard_initials", Set(&c.segmentation.guard_initials)}});
    }},
    {"precedents", [&](const json &s) {
      PrecedentOptions &p = c.precedents;
      ForEachKey(s, "precedents",
                 {{"referent_window", Set(&p.referent_window)},
                  {"referent_keywords", Set(&p.referent_keywords)},
                  {"party_jaccard", Set(&p.party_jaccard)},
                  {"party_separator", Set(&p.party_separator)},
                  {"party_stopwords", Set(&p.party_stopwords)},
                  {"citation_patterns", [&](const json &v) {
                     p.citation_patterns = ParsePatterns(v);
                   }}});
    }},
    {"statutes", [&](const json &s) {
      StatuteOptions &o = c.statutes;
      ForEachKey(s, "statutes",
                 {{"alias_window", Set(&o.alias_window)},
                  {"max_parenthetical", Set(&o.max_parenthetical)},
                  {"brevity_keywords", Set(&o.brevity_keywords)},
                  {"acronyms", Set(&acronyms)},
                  {"replace_default_acronyms", Set(&replace_acronyms)}});
    }},
    {"provisions", [&](const json &s) {
      ForEachKey(s, "provisions",
                 {{"strict_explicit", Set(&c.provisions.strict_explicit)}});
    }},
    {"selection", [&](const json &s) {
      SelectionOptions &o = c.selection;
      ForEachKey(s, "selection",
                 {{"max_selected", Set(&o.max_selected)},
                  {"zero_entity_fraction", Set(&o.zero_entity_fraction)},
                  {"seed", Set(&o.seed)},
                  {"min_tokens", Set(&o.min_tokens)},
                  {"side_by_side_spaces", Set(&o.side_by_side_spaces)},
                  {"quotas", [&](const json &v) {
                     o.quotas.clear();
                     for (const auto &[name, quota] : v.items()) {
                       o.quotas[ParseLabel(name)] = quota.get<long>();
                     }
                   }}});
    }},
    {"case_types", [&](const json &s) {
      if (!s.is_array()) throw std::invalid_argument("case_types must be a list");
      c.case_types.clear();
      for (const json &item : s) {
        CaseTypeRule rule{CaseType::kUnclassified, {}};
        std::string name;
        ForEachKey(item, "case_types",
                   {{"type", Set(&name)}, {"keywords", Set(&rule.keywords)}});
        auto type = CaseTypeFromName(name);
        if (!type || *type == CaseType::kUnclassified) {
          throw std::invalid_argument("unknown case type '" + name + "'");
        }
        rule.type = *type;
        c.case_types.push_back(std::move(rule));
      }
    }},
    {"field_mapping", [&](const json &s) {
      c.field_mapping = FieldMapping::FromJson(s);
    }},
  });

  if (replace_acronyms) c.acronyms = AcronymTable();
  for (const auto &[acronym, full] : acronyms) {
    if (!replace_acronyms && c.acronyms.Lookup(acronym)) {
      // Overriding a default: rebuild without it.
      AcronymTable rebuilt;
      const std::string key = AcronymTable::NormalizeKey(acronym);
      for (const auto &[k, v] : c.acronyms.entries()) {
        if (k != key) rebuilt.Add(k, v);
      }
      c.acronyms = std::move(rebuilt);
    }
    c.acronyms.Add(acronym, full);
  }
  return c;
}

PipelineConfig PipelineConfig::Load(const std::string &path) {
  if (path.empty()) return PipelineConfig();
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config " + path);
  json config;
  try {
    config = json::parse(in);
  } catch (const json::exception &e) {
    throw std::runtime_error("malformed config " + path + ": " + e.what());
  }
  return FromJson(config);
}

}  // namespace legalner
