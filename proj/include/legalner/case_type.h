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

// Case type of a judgment from the acts it mentions.

#ifndef LEGALNER_CASE_TYPE_H_
#define LEGALNER_CASE_TYPE_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace legalner {

enum class CaseType : uint8_t {
  kTax,
  kCriminal,
  kCivil,
  kMotorVehicles,
  kLandProperty,
  kIndustrialLabour,
  kConstitution,
  kFinancial,
  kUnclassified,
};

std::string_view CaseTypeName(CaseType type);
std::optional<CaseType> CaseTypeFromName(std::string_view name);

struct CaseTypeRule {
  CaseType type;
  std::vector<std::string> keywords;  // lower case
};

// Rules in priority order; the first rule with a matching keyword wins.
std::vector<CaseTypeRule> DefaultCaseTypeRules();

struct CaseTypeResult {
  CaseType type = CaseType::kUnclassified;
  // Every (type, keyword) that matched, in rule order, so callers can apply
  // their own tie-breaking.
  std::vector<std::pair<CaseType, std::string>> matched_keywords;
};

// Keywords match case-insensitively as whole phrases; runs of whitespace in
// the text count as one space.
CaseTypeResult ClassifyCaseType(std::string_view text,
                                const std::vector<CaseTypeRule> &rules =
                                    DefaultCaseTypeRules());

}  // namespace legalner

#endif  // LEGALNER_CASE_TYPE_H_
