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

#include "legalner/reconcile.h"

#include <gtest/gtest.h>

#include "testing/generators.h"
#include "testing/invariants.h"

namespace legalner {
namespace {

using L = EntityLabel;
using testing::DocWithMentions;

TEST(ReconcileTest, PartyNameBecomesPetitioner) {
  const std::string text =
      "Amit Kumar ... Petitioner\nJUDGMENT\nThe counsel for Amit Kumar argued.";
  JudgmentDoc doc = DocWithMentions(
      text, {{"Amit Kumar", L::kPetitioner, 0}, {"Amit Kumar", L::kOtherPerson, 1}},
      36);
  ReconcileResult r = Reconcile(doc);
  EXPECT_EQ(r.doc.spans[1].label, L::kPetitioner);
  ASSERT_EQ(r.records.size(), 1u);
  EXPECT_EQ(r.records[0],
            (ReconciliationRecord{"T1", L::kOtherPerson, L::kPetitioner, "T0"}));
  EXPECT_TRUE(r.warnings.empty());
}

TEST(ReconcileTest, NothingEligible) {
  JudgmentDoc doc = DocWithMentions("Kochi and Delhi", {{"Kochi", L::kGpe},
                                                       {"Delhi", L::kGpe}});
  ReconcileResult r = Reconcile(doc);
  EXPECT_EQ(r.doc, doc);
  EXPECT_TRUE(r.records.empty());
}

TEST(ReconcileTest, DifferentNameUnchanged) {
  JudgmentDoc doc = DocWithMentions(
      "Jane Doe heard John Doe.",
      {{"Jane Doe", L::kJudge}, {"John Doe", L::kOtherPerson}});
  EXPECT_EQ(Reconcile(doc).doc, doc);
}

TEST(ReconcileTest, NormalizationIgnoresCaseSpacingPunctuation) {
  JudgmentDoc doc = DocWithMentions(
      "STATE  BANK OF INDIA ... Respondent. Later, state bank of india, paid.",
      {{"STATE  BANK OF INDIA", L::kRespondent},
       {"state bank of india,", L::kOrg}});
  EXPECT_EQ(Reconcile(doc).doc.spans[1].label, L::kRespondent);
}

TEST(ReconcileTest, ConflictingRolesLeaveSpanWithWarning) {
  JudgmentDoc doc = DocWithMentions(
      "Ravi Rao, Ravi Rao and Ravi Rao.",
      {{"Ravi Rao", L::kWitness, 0},
       {"Ravi Rao", L::kLawyer, 1},
       {"Ravi Rao", L::kOtherPerson, 2}});
  ReconcileResult r = Reconcile(doc);
  EXPECT_EQ(r.doc.spans[2].label, L::kOtherPerson);
  ASSERT_EQ(r.warnings.size(), 1u);
  EXPECT_NE(r.warnings[0].find("conflict"), std::string::npos);
}

TEST(ReconcileTest, RoleLabelsAreNotRelabeled) {
  JudgmentDoc doc = DocWithMentions(
      "Ravi Rao and Ravi Rao.",
      {{"Ravi Rao", L::kWitness, 0}, {"Ravi Rao", L::kJudge, 1}});
  EXPECT_EQ(Reconcile(doc).doc, doc);
}

TEST(ReconcileTest, AgreesWithPairwiseOracleOnRandomSpans) {
  // Dense collisions: few distinct names, many labels.
  testing::Rng rng(7);
  const std::vector<std::string> names = {"Ravi Rao", "Bose", "Iyer"};
  const std::vector<L> labels = {L::kOtherPerson, L::kOrg, L::kWitness,
                                 L::kJudge, L::kLawyer, L::kPetitioner,
                                 L::kRespondent, L::kGpe};
  for (int round = 0; round < 300; ++round) {
    testing::DocBuilder b;
    const int n = testing::Uniform(rng, 0, 50);
    for (int i = 0; i < n; ++i) {
      b.Span(testing::Pick(rng, names), testing::Pick(rng, labels));
      b.Add(" and ");
    }
    JudgmentDoc doc;
    doc.text = b.text();
    doc.spans = b.spans();
    EXPECT_EQ(Reconcile(doc).doc, testing::ReconcileOracle(doc));
    EXPECT_TRUE(testing::CheckReconciliation(doc).empty());
  }
}

}  // namespace
}  // namespace legalner
