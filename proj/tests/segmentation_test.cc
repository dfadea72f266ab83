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

#include <gtest/gtest.h>

#include "legalner/text_util.h"

namespace legalner {
namespace {

std::vector<std::string> Texts(std::string_view text,
                               const std::vector<TextRange> &ranges) {
  Utf8Index index(text);
  std::vector<std::string> out;
  for (const TextRange &r : ranges) {
    out.emplace_back(index.Slice(r.start, r.end));
  }
  return out;
}

TEST(VerbAnalyzerTest, HeaderFragmentsHaveNoVerb) {
  DefaultVerbAnalyzer verbs;
  EXPECT_FALSE(verbs("IN THE HIGH COURT OF KERALA AT ERNAKULAM"));
  EXPECT_FALSE(verbs("Amit Kumar ... Petitioner"));
  EXPECT_FALSE(verbs("CORAM: HON'BLE MR. JUSTICE A. K. SIKRI"));
  EXPECT_FALSE(verbs("Dated this the 12th day of March, 2019"));
  EXPECT_TRUE(verbs("This appeal is directed against the order."));
  EXPECT_TRUE(verbs("The petitioner challenged the award."));
  EXPECT_TRUE(verbs("We have heard the counsel."));
}

TEST(SplitPreambleTest, MarkerLine) {
  const std::string text =
      "Amit Kumar ... Petitioner\nState of UP ... Respondent\nJUDGMENT\n"
      "This appeal is dismissed.";
  const int expected = CodePointLength(
      "Amit Kumar ... Petitioner\nState of UP ... Respondent\nJUDGMENT\n");
  EXPECT_EQ(SplitPreamble(text, DefaultVerbAnalyzer()), expected);
}

TEST(SplitPreambleTest, SpacedAndPunctuatedMarkers) {
  DefaultVerbAnalyzer verbs;
  EXPECT_EQ(SplitPreamble("Head\n  J U D G M E N T  \nIt was held.", verbs),
            CodePointLength("Head\n  J U D G M E N T  \n"));
  EXPECT_EQ(SplitPreamble("Head\n:: ORDER ::\nIt was held.", verbs),
            CodePointLength("Head\n:: ORDER ::\n"));
  EXPECT_EQ(SplitPreamble("Head\nJudgment\nIt was held.", verbs),
            CodePointLength("Head\nJudgment\n"));
}

TEST(SplitPreambleTest, MarkerWordInsideSentenceIsNotAMarker) {
  // "ORDER" inside a longer line, or a numbered "ORDER 1", does not count.
  const std::string text =
      "The impugned order was passed. It was challenged.\nORDER 21 RULE 3\n";
  EXPECT_EQ(SplitPreamble(text, DefaultVerbAnalyzer()), 0);
}

TEST(SplitPreambleTest, TwoVerbSentencesAtStartGiveZero) {
  EXPECT_EQ(SplitPreamble("The appeal was heard. It is dismissed.",
                          DefaultVerbAnalyzer()),
            0);
}

TEST(SplitPreambleTest, VerblessHeaderThenVerbSentences) {
  const std::string header =
      "IN THE HIGH COURT OF DELHI\nRamesh Sharma ... Appellant\n"
      "State of Punjab ... Respondent\n";
  const std::string text =
      header + "The appellant was convicted. He appealed to this Court.";
  EXPECT_EQ(SplitPreamble(text, DefaultVerbAnalyzer()),
            CodePointLength(header));
}

TEST(SplitPreambleTest, NoRuleFires) {
  EXPECT_EQ(SplitPreamble("Head one\nHead two\nHead three",
                          DefaultVerbAnalyzer()),
            0);
}

TEST(SplitPreambleTest, PluggableAnalyzer) {
  // An analyzer that sees verbs only in lines starting with "V".
  VerbAnalyzer analyzer = [](std::string_view s) {
    return !s.empty() && s[0] == 'V';
  };
  EXPECT_EQ(SplitPreamble("aa\nbb\nVx\nVy", analyzer), 6);
}

TEST(SegmentSentencesTest, AbbreviationGuard) {
  const std::string text = "A v. B. He won.";
  auto s = SegmentSentences(text, {0, CodePointLength(text)});
  EXPECT_EQ(Texts(text, s), (std::vector<std::string>{"A v. B.", "He won."}));
}

TEST(SegmentSentencesTest, RunsOfInitials) {
  const std::string text = "Before A. K. Sikri J. The appeal fails.";
  auto s = SegmentSentences(text, {0, CodePointLength(text)});
  EXPECT_EQ(Texts(text, s), (std::vector<std::string>{
                                "Before A. K. Sikri J.", "The appeal fails."}));
}

TEST(SegmentSentencesTest, InitialBeforeAbbreviation) {
  const std::string text = "He filed Crl. A. No. 740 of 1996. It failed.";
  auto s = SegmentSentences(text, {0, CodePointLength(text)});
  EXPECT_EQ(Texts(text, s),
            (std::vector<std::string>{"He filed Crl. A. No. 740 of 1996.",
                                      "It failed."}));
}

TEST(SegmentSentencesTest, EmptyAndUnterminated) {
  EXPECT_TRUE(SegmentSentences("", {0, 0}).empty());
  EXPECT_TRUE(SegmentSentences("   \n ", {0, 5}).empty());
  const std::string text = "  no terminator here ";
  auto s = SegmentSentences(text, {0, CodePointLength(text)});
  ASSERT_EQ(s.size(), 1u);
  EXPECT_EQ(Texts(text, s)[0], "no terminator here");
}

TEST(SegmentSentencesTest, ClosersAndNewlines) {
  const std::string text =
      "He said \"stop.\" Then Mr. Rao left! Did he?\nHeading\nNext";
  auto s = SegmentSentences(text, {0, CodePointLength(text)});
  EXPECT_EQ(Texts(text, s),
            (std::vector<std::string>{"He said \"stop.\"", "Then Mr. Rao left!",
                                      "Did he?", "Heading", "Next"}));
}

TEST(SegmentSentencesTest, DecimalsAndRegion) {
  const std::string text = "Pay Rs. 2.5 lakhs now. Done.";
  auto s = SegmentSentences(text, {0, CodePointLength(text)});
  EXPECT_EQ(Texts(text, s),
            (std::vector<std::string>{"Pay Rs. 2.5 lakhs now.", "Done."}));
  auto tail = SegmentSentences(text, {23, CodePointLength(text)});
  EXPECT_EQ(Texts(text, tail), (std::vector<std::string>{"Done."}));
}

TEST(SegmentSentencesTest, CodePointOffsets) {
  const std::string text = "José won. Ramón lost.";
  auto s = SegmentSentences(text, {0, CodePointLength(text)});
  ASSERT_EQ(s.size(), 2u);
  EXPECT_EQ(s[0], (TextRange{0, 9}));
  EXPECT_EQ(s[1], (TextRange{10, 21}));
}

TEST(MergeAcrossSpansTest, MergesStraddledBoundary) {
  std::vector<TextRange> sentences = {{0, 5}, {6, 10}, {11, 15}};
  std::vector<EntitySpan> spans = {{"a", 3, 8, EntityLabel::kOrg}};
  EXPECT_EQ(MergeAcrossSpans(sentences, spans),
            (std::vector<TextRange>{{0, 10}, {11, 15}}));
  std::vector<EntitySpan> inside = {{"a", 6, 9, EntityLabel::kOrg}};
  EXPECT_EQ(MergeAcrossSpans(sentences, inside), sentences);
}

TEST(CountSplitSpansTest, CountsSpansCrossingSentences) {
  JudgmentDoc doc;
  doc.text = "Sec. 5 of the Act. applies. Fine.";
  // "Act. applies" is not an entity; "Sec. 5" is guarded.
  doc.spans = {{"a", 0, 6, EntityLabel::kProvision}};
  EXPECT_EQ(CountSplitSpans(doc), 0);
  doc.spans = {{"a", 14, 26, EntityLabel::kStatute}};
  EXPECT_EQ(CountSplitSpans(doc), 1);
}

}  // namespace
}  // namespace legalner
