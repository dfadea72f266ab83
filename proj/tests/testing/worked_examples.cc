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

#include "testing/worked_examples.h"

#include <tuple>

#include "legalner/config.h"
#include "legalner/pipeline.h"
#include "testing/generators.h"

namespace legalner::testing {

namespace {

using L = EntityLabel;

template <typename T>
void Expect(std::vector<std::string> *out, const T &actual, const T &expected,
            const std::string &what) {
  if (!(actual == expected)) out->push_back(what + " differs");
}

std::string TextOf(const PipelineOutput &o, const std::string &id) {
  const EntitySpan *s = FindSpan(o.doc, id);
  return s ? SpanText(o.doc, *s) : "<missing " + id + ">";
}

}  // namespace

AnnotationRecord JudgmentRecord(
    const std::string &id, const std::string &text,
    const std::vector<std::tuple<std::string, EntityLabel, int>> &mentions) {
  std::vector<Mention> m;
  for (const auto &[phrase, label, occurrence] : mentions) {
    m.push_back({phrase, label, occurrence});
  }
  JudgmentDoc doc = DocWithMentions(text, m);
  AnnotationRecord record;
  record.doc_id = id;
  record.unit_type = DocType::kFullJudgment;
  record.text = doc.text;
  record.spans = doc.spans;
  return record;
}

std::vector<std::string> CheckPartyReconciliation() {
  std::vector<std::string> out;
  AnnotationRecord r = JudgmentRecord(
      "a",
      "IN THE HIGH COURT OF DELHI\nAmit Kumar ... Petitioner\nVersus\n"
      "State of NCT of Delhi ... Respondent\nJUDGMENT\n"
      "The counsel for Amit Kumar submitted that the order was illegal.",
      {{"HIGH COURT OF DELHI", L::kCourt, 0},
       {"Amit Kumar", L::kPetitioner, 0},
       {"State of NCT of Delhi", L::kRespondent, 0},
       {"Amit Kumar", L::kOtherPerson, 1}});
  PipelineOutput o = Postprocess(r, PipelineConfig());
  Expect(&out, o.skipped, false, "skipped");
  Expect(&out, o.reconciliations,
         std::vector<ReconciliationRecord>{
             {"T3", L::kOtherPerson, L::kPetitioner, "T1"}},
         "reconciliation records");
  Expect(&out, o.doc.spans.at(3).label, L::kPetitioner, "label of T3");
  return out;
}

std::vector<std::string> CheckPrecedentReferent() {
  std::vector<std::string> out;
  const std::string citation =
      "Gurbaksh Singh Sibbia and others Vs State of Punjab (1980) 2 SCC 565";
  AnnotationRecord r = JudgmentRecord(
      "b",
      "JUDGMENT\nThe Constitution Bench in " + citation +
          " considered the scope of anticipatory bail. Learned counsel "
          "placed reliance on Sibbia's case (supra).",
      {{citation, L::kPrecedent, 0}, {"Sibbia", L::kOtherPerson, 1}});
  PipelineOutput o = Postprocess(r, PipelineConfig());
  Expect(&out, o.doc.spans.at(1).label, L::kPrecedent, "label of Sibbia");
  if (o.precedent_clusters.size() != 1) {
    out.push_back("expected one precedent cluster");
    return out;
  }
  const PrecedentCluster &c = o.precedent_clusters[0];
  Expect(&out, TextOf(o, c.head_span_id), citation, "head text");
  Expect(&out, c.member_span_ids, std::vector<std::string>{"T0", "T1"},
         "members");
  Expect(&out, c.citation_keys, std::vector<std::string>{"1980|2|SCC|565"},
         "citation keys");
  Expect(&out, o.referents,
         std::vector<ReferentLink>{{"T1", L::kOtherPerson, "T0"}}, "referents");
  return out;
}

std::vector<std::string> CheckStatuteAlias() {
  std::vector<std::string> out;
  AnnotationRecord r = JudgmentRecord(
      "c",
      "JUDGMENT\nThe company was incorporated under the Companies Act, 1956 "
      "(for brevity, 'the Act'). The petitioner invoked Section 5 of the Act "
      "before the Tribunal.",
      {{"Companies Act, 1956", L::kStatute, 0},
       {"Section 5", L::kProvision, 0},
       {"the Act", L::kStatute, 1}});
  PipelineOutput o = Postprocess(r, PipelineConfig());
  if (o.statute_clusters.size() != 1) {
    out.push_back("expected one statute cluster");
    return out;
  }
  const StatuteCluster &c = o.statute_clusters[0];
  Expect(&out, TextOf(o, c.head_span_id), std::string("Companies Act, 1956"),
         "head text");
  Expect(&out, c.member_span_ids, std::vector<std::string>{"T0", "T2"},
         "members");
  Expect(&out, c.aliases,
         std::vector<std::string>{"companies act, 1956", "the act"}, "aliases");
  Expect(&out, o.provision_statute_pairs,
         std::vector<ProvisionStatutePair>{
             {"T1", "Companies Act, 1956", LinkMode::kExplicit, "T2"}},
         "provision pairs");
  return out;
}

std::vector<std::string> CheckImplicitProvisions() {
  std::vector<std::string> out;
  AnnotationRecord unique = JudgmentRecord(
      "d1",
      "JUDGMENT\nThe accused was charged under Section 420 of Indian Penal "
      "Code. The section 420 says that whoever cheats shall be punished.",
      {{"Section 420", L::kProvision, 0},
       {"Indian Penal Code", L::kStatute, 0},
       {"section 420", L::kProvision, 0}});
  PipelineOutput o = Postprocess(unique, PipelineConfig());
  Expect(&out, o.provision_statute_pairs,
         std::vector<ProvisionStatutePair>{
             {"T0", "Indian Penal Code", LinkMode::kExplicit, "T1"},
             {"T2", "Indian Penal Code", LinkMode::kImplicitUnique, "T1"}},
         "unique-mention pairs");

  AnnotationRecord nearest = JudgmentRecord(
      "d2",
      "JUDGMENT\nThe complaint invoked Section 420 of IPC. The company was "
      "also proceeded against under Section 420 of Companies Act. The "
      "Companies Act governs the dispute. The Tribunal heard the parties at "
      "length. Section 420 was then considered.",
      {{"Section 420", L::kProvision, 0},
       {"IPC", L::kStatute, 0},
       {"Section 420", L::kProvision, 1},
       {"Companies Act", L::kStatute, 0},
       {"Companies Act", L::kStatute, 1},
       {"Section 420", L::kProvision, 2}});
  o = Postprocess(nearest, PipelineConfig());
  Expect(&out, o.provision_statute_pairs,
         std::vector<ProvisionStatutePair>{
             {"T0", "Indian Penal Code", LinkMode::kExplicit, "T1"},
             {"T2", "Companies Act", LinkMode::kExplicit, "T3"},
             {"T5", "Companies Act", LinkMode::kImplicitNearest, "T4"}},
         "nearest-sentence pairs");
  return out;
}

}  // namespace legalner::testing
