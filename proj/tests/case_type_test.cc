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

#include <gtest/gtest.h>

#include "testing/generators.h"

namespace legalner {
namespace {

TEST(ClassifyCaseTypeTest, IncomeTaxAct) {
  EXPECT_EQ(ClassifyCaseType("assessment under the Income Tax Act, 1961").type,
            CaseType::kTax);
}

TEST(ClassifyCaseTypeTest, NoKeywords) {
  CaseTypeResult r = ClassifyCaseType("The appeal is dismissed.");
  EXPECT_EQ(r.type, CaseType::kUnclassified);
  EXPECT_TRUE(r.matched_keywords.empty());
}

TEST(ClassifyCaseTypeTest, PriorityOrderBreaksTies) {
  CaseTypeResult r = ClassifyCaseType(
      "offences under the Motor Vehicles Act and the Indian Penal Code");
  EXPECT_EQ(r.type, CaseType::kCriminal);
  ASSERT_EQ(r.matched_keywords.size(), 2u);
  EXPECT_EQ(r.matched_keywords[0],
            (std::pair<CaseType, std::string>{CaseType::kCriminal,
                                              "penal code"}));
  EXPECT_EQ(r.matched_keywords[1].first, CaseType::kMotorVehicles);
}

TEST(ClassifyCaseTypeTest, WholePhraseCaseInsensitive) {
  EXPECT_EQ(ClassifyCaseType("u/s 302 IPC").type, CaseType::kCriminal);
  EXPECT_EQ(ClassifyCaseType("the RECIPE was old").type,
            CaseType::kUnclassified);  // "ipc" inside a word
  EXPECT_EQ(ClassifyCaseType("Article 14 of the\n  Constitution").type,
            CaseType::kConstitution);
  EXPECT_EQ(ClassifyCaseType("the motor   vehicles\tact").type,
            CaseType::kMotorVehicles);
  EXPECT_EQ(ClassifyCaseType("constitutional").type, CaseType::kUnclassified);
}

TEST(ClassifyCaseTypeTest, AgreesWithExhaustiveScan) {
  // Oracle: scan every (type, keyword) pair by brute force substring search
  // over lower-cased text with word boundaries, take the first type in rule
  // order.
  auto oracle = [](const std::string &text) {
    std::string lower;
    for (char c : text) lower.push_back(std::tolower(static_cast<unsigned char>(c)));
    for (const CaseTypeRule &rule : DefaultCaseTypeRules()) {
      for (const std::string &k : rule.keywords) {
        for (size_t i = 0; i + k.size() <= lower.size(); ++i) {
          if (lower.compare(i, k.size(), k) != 0) continue;
          bool left = i == 0 || !std::isalnum(static_cast<unsigned char>(lower[i - 1]));
          bool right = i + k.size() == lower.size() ||
                       !std::isalnum(static_cast<unsigned char>(lower[i + k.size()]));
          if (left && right) return rule.type;
        }
      }
    }
    return CaseType::kUnclassified;
  };
  const std::vector<std::string> pieces = {
      "the ", "Customs Act ", "IPC ", "penal codes ", "Wakf Act ", "mv act ",
      "Companies Act ", "constitution ", "SARFAESI Act ", "tax ", "act ",
      "land ", "acquisition act ", "xipc ", "family courts ", "said "};
  testing::Rng rng(9);
  for (int i = 0; i < 2000; ++i) {
    std::string text;
    for (int k = testing::Uniform(rng, 0, 6); k > 0; --k) {
      text += testing::Pick(rng, pieces);
    }
    EXPECT_EQ(ClassifyCaseType(text).type, oracle(text)) << text;
  }
}

TEST(CaseTypeNameTest, RoundTrip) {
  for (int i = 0; i <= static_cast<int>(CaseType::kUnclassified); ++i) {
    auto type = static_cast<CaseType>(i);
    EXPECT_EQ(CaseTypeFromName(CaseTypeName(type)), type);
  }
}

}  // namespace
}  // namespace legalner
