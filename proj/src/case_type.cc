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

#include "legalner/case_type.h"

#include "legalner/text_util.h"

namespace legalner {

std::string_view CaseTypeName(CaseType type) {
  switch (type) {
    case CaseType::kTax: return "Tax";
    case CaseType::kCriminal: return "Criminal";
    case CaseType::kCivil: return "Civil";
    case CaseType::kMotorVehicles: return "MotorVehicles";
    case CaseType::kLandProperty: return "LandProperty";
    case CaseType::kIndustrialLabour: return "IndustrialLabour";
    case CaseType::kConstitution: return "Constitution";
    case CaseType::kFinancial: return "Financial";
    case CaseType::kUnclassified: return "Unclassified";
  }
  return "";
}

std::optional<CaseType> CaseTypeFromName(std::string_view name) {
  for (int i = 0; i <= static_cast<int>(CaseType::kUnclassified); ++i) {
    auto type = static_cast<CaseType>(i);
    if (CaseTypeName(type) == name) return type;
  }
  return std::nullopt;
}

std::vector<CaseTypeRule> DefaultCaseTypeRules() {
  return {
      {CaseType::kTax,
       {"tax act", "excise act", "customs act", "goods and services act"}},
      {CaseType::kCriminal, {"ipc", "penal code", "criminal procedure"}},
      {CaseType::kCivil,
       {"civil procedure", "family courts", "marriage act", "wakf act"}},
      {CaseType::kMotorVehicles, {"motor vehicles act", "mv act", "imv act"}},
      {CaseType::kLandProperty,
       {"land acquisition act", "succession act", "rent control act"}},
      {CaseType::kIndustrialLabour,
       {"companies act", "industrial disputes act", "compensation act"}},
      {CaseType::kConstitution, {"constitution"}},
      {CaseType::kFinancial,
       {"negotiable instruments act", "sarfaesi act",
        "foreign exchange regulation act"}},
  };
}

CaseTypeResult ClassifyCaseType(std::string_view text,
                                const std::vector<CaseTypeRule> &rules) {
  const std::string haystack = ToLowerAscii(CollapseWhitespace(text));
  CaseTypeResult result;
  for (const CaseTypeRule &rule : rules) {
    for (const std::string &keyword : rule.keywords) {
      const std::string needle = ToLowerAscii(CollapseWhitespace(keyword));
      if (needle.empty()) continue;
      if (FindWholePhrase(haystack, needle) != std::string::npos) {
        if (result.matched_keywords.empty()) result.type = rule.type;
        result.matched_keywords.emplace_back(rule.type, keyword);
      }
    }
  }
  return result;
}

}  // namespace legalner
