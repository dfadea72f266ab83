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

#include "testing/generators.h"

#include <algorithm>
#include <stdexcept>

#include "legalner/text_util.h"

namespace legalner::testing {

namespace {

using L = EntityLabel;

const std::vector<std::string> kFirst = {
    "Amit", "Ramesh", "Sunita", "Gurbaksh", "Kavita", "Rajesh", "Meena",
    "Arjun", "Lakshmi", "Mohan", "Priya", "Suresh", "Anil", "Farida"};
const std::vector<std::string> kLast = {
    "Kumar", "Sharma", "Sibbia", "Verma", "Reddy", "Iyer", "Gupta",
    "Khan", "Nair", "Joshi", "Pillai", "Bose", "Menon", "Rao"};
const std::vector<std::string> kStates = {"Punjab", "Kerala", "Gujarat",
                                          "Bihar", "Maharashtra", "Assam"};
const std::vector<std::string> kCourts = {
    "HIGH COURT OF KERALA", "HIGH COURT OF DELHI", "SUPREME COURT OF INDIA",
    "HIGH COURT OF GUJARAT"};
const std::vector<std::string> kStatutes = {
    "Indian Penal Code", "Companies Act, 1956", "Income Tax Act, 1961",
    "Code of Criminal Procedure", "Motor Vehicles Act, 1988",
    "Land Acquisition Act, 1894", "Negotiable Instruments Act, 1881"};
const std::vector<std::string> kAcronyms = {"IPC", "CrPC", "CPC", "NI Act",
                                            "MV Act"};
const std::vector<std::string> kOrgs = {
    "State Bank of India", "Life Insurance Corporation", "Delhi Development "
    "Authority", "Bank of Baroda"};
const std::vector<std::string> kPlaces = {"Kochi", "Ahmedabad", "Patna",
                                          "Pune", "Guwahati", "Chennai"};
const std::vector<std::string> kReporters = {"SCC", "SCR", "Cri LJ"};
const std::vector<std::string> kClosers = {
    "the Court held that the appeal must fail",
    "bail was granted on conditions",
    "the conviction was set aside",
    "the principle was stated clearly"};

std::string Person(Rng &rng) { return Pick(rng, kFirst) + " " + Pick(rng, kLast); }

struct Precedent {
  std::string first;
  std::string second;
  std::string text;
};

}  // namespace

int Uniform(Rng &rng, int lo, int hi) {
  // Modulo bias is irrelevant for test data; portability is not.
  return lo + static_cast<int>(rng() % static_cast<uint64_t>(hi - lo + 1));
}

void DocBuilder::Add(std::string_view text) {
  text_.append(text);
  length_ += CodePointLength(text);
}

std::string DocBuilder::Span(std::string_view text, EntityLabel label) {
  const int start = length_;
  Add(text);
  std::string id = "T" + std::to_string(spans_.size());
  spans_.push_back({id, start, length_, label, SpanSource::kGold});
  return id;
}

AnnotationRecord RandomJudgment(Rng &rng, const std::string &id,
                                const JudgmentOptions &options) {
  DocBuilder b;
  const std::string petitioner = Person(rng);
  const std::string respondent = "State of " + Pick(rng, kStates);
  const std::string judge = Person(rng);
  const std::string lawyer = Person(rng);

  // Preamble.
  b.Add("IN THE ");
  b.Span(Pick(rng, kCourts), L::kCourt);
  b.Add("\n");
  b.Span(petitioner, L::kPetitioner);
  b.Add(" ... Petitioner\nVersus\n");
  b.Span(respondent, L::kRespondent);
  b.Add(" ... Respondent\nCORAM: HON'BLE MR. JUSTICE ");
  b.Span(judge, L::kJudge);
  b.Add("\nFor Petitioner: Mr. ");
  b.Span(lawyer, L::kLawyer);
  b.Add("\n");
  const bool marker = Uniform(rng, 0, 3) != 0;
  if (marker) b.Add(Uniform(rng, 0, 1) ? "JUDGMENT\n" : "O R D E R\n");
  const int preamble_end = b.size();

  std::vector<Precedent> precedents;
  std::vector<std::string> statutes;  // introduced so far, full names
  bool has_alias = false;
  const int n = Uniform(rng, options.min_sentences, options.max_sentences);
  for (int k = 0; k < n; ++k) {
    if (k > 0) b.Add(Uniform(rng, 0, 4) == 0 ? "\n" : " ");
    switch (Uniform(rng, 0, 13)) {
      case 0: {  // party name mentioned again, to be reconciled
        b.Add("The counsel for ");
        b.Span(petitioner, Uniform(rng, 0, 1) ? L::kOtherPerson : L::kPetitioner);
        b.Add(" submitted that the order was wrong.");
        break;
      }
      case 1: {  // precedent
        Precedent p{Person(rng), "State of " + Pick(rng, kStates), ""};
        if (!precedents.empty() && Uniform(rng, 0, 2) == 0) {
          p = precedents[Uniform(rng, 0, static_cast<int>(precedents.size()) - 1)];
        }
        const std::string sep = Pick(rng, std::vector<std::string>{
                                              " Vs ", " v. ", " versus "});
        std::string cite = "(" + std::to_string(Uniform(rng, 1950, 2020)) +
                           ") " + std::to_string(Uniform(rng, 1, 12)) + " " +
                           Pick(rng, kReporters) + " " +
                           std::to_string(Uniform(rng, 1, 999));
        p.text = p.first + (Uniform(rng, 0, 1) ? " and others" : "") + sep +
                 p.second + " " + cite;
        b.Add("In ");
        b.Span(p.text, L::kPrecedent);
        b.Add(", " + Pick(rng, kClosers) + ".");
        precedents.push_back(p);
        break;
      }
      case 2: {  // referent
        if (precedents.empty()) {
          b.Add("The matter was heard at length.");
          break;
        }
        const Precedent &p = Pick(rng, precedents);
        std::string surname = p.first.substr(p.first.find(' ') + 1);
        b.Add("Reliance was placed on ");
        b.Span(surname, Uniform(rng, 0, 1) ? L::kOtherPerson : L::kOrg);
        b.Add(Uniform(rng, 0, 2) == 0 ? "’s case (supra)." : "'s case (supra).");
        break;
      }
      case 3:
      case 4: {  // explicit provision
        const std::string statute = statutes.empty() || Uniform(rng, 0, 1)
                                        ? Pick(rng, kStatutes)
                                        : Pick(rng, statutes);
        b.Add("The accused was charged under ");
        b.Span("Section " + std::to_string(Uniform(rng, 1, 500)), L::kProvision);
        b.Add(" of the ");
        b.Span(statute, L::kStatute);
        b.Add(".");
        statutes.push_back(statute);
        break;
      }
      case 5: {  // brevity alias
        const std::string statute = Pick(rng, kStatutes);
        b.Add("The dispute is governed by the ");
        b.Span(statute, L::kStatute);
        b.Add(Uniform(rng, 0, 1) ? " (for brevity, 'the Act')."
                                 : " (hereinafter referred to as the Act).");
        statutes.push_back(statute);
        has_alias = true;
        break;
      }
      case 6: {  // alias use
        b.Add("Under ");
        b.Span("Section " + std::to_string(Uniform(rng, 1, 50)), L::kProvision);
        b.Add(" of ");
        b.Span(has_alias ? "the Act" : Pick(rng, kStatutes), L::kStatute);
        b.Add(" the order is appealable.");
        break;
      }
      case 7: {  // acronym
        b.Add("He was convicted under ");
        b.Span("Sections " + std::to_string(Uniform(rng, 1, 500)), L::kProvision);
        b.Add(" and ");
        b.Span(std::to_string(Uniform(rng, 1, 500)), L::kProvision);
        b.Add(" ");
        b.Span(Pick(rng, kAcronyms), L::kStatute);
        b.Add(".");
        break;
      }
      case 8: {  // implicit provision
        b.Add("The scope of ");
        b.Span("section " + std::to_string(Uniform(rng, 1, 500)), L::kProvision);
        b.Add(" was examined in detail.");
        break;
      }
      case 9: {
        b.Add("The witness ");
        b.Span(Person(rng), L::kWitness);
        b.Add(" deposed before the trial court at ");
        b.Span(Pick(rng, kPlaces), L::kGpe);
        b.Add(".");
        break;
      }
      case 10: {
        b.Add("The order dated ");
        b.Span(std::to_string(Uniform(rng, 1, 28)) + ".0" +
                   std::to_string(Uniform(rng, 1, 9)) + "." +
                   std::to_string(Uniform(rng, 1990, 2020)),
               L::kDate);
        b.Add(" was challenged by ");
        b.Span(Pick(rng, kOrgs), L::kOrg);
        b.Add(".");
        break;
      }
      case 11: {
        b.Add("Mr. ");
        b.Span(Person(rng), L::kOtherPerson);
        b.Add(" was not examined in Crl. A. No. ");
        b.Span(std::to_string(Uniform(rng, 1, 999)) + " of " +
                   std::to_string(Uniform(rng, 1990, 2020)),
               L::kCaseNumber);
        b.Add(".");
        break;
      }
      case 12: {
        b.Add("The respondent ");
        b.Span(respondent, Uniform(rng, 0, 1) ? L::kOrg : L::kRespondent);
        b.Add(" opposed the petition.");
        break;
      }
      default:
        b.Add("We have heard the learned counsel for the parties.");
        break;
    }
  }

  AnnotationRecord record;
  record.doc_id = id;
  record.unit_type = DocType::kFullJudgment;
  record.text = b.text();
  record.spans = SortedSpans(std::move(b.spans()));
  for (size_t i = 0; i < record.spans.size(); ++i) {
    record.spans[i].id = "T" + std::to_string(i);
  }
  if (Uniform(rng, 0, 999) < options.known_split * 1000) {
    record.preamble_end = preamble_end;
  }
  return record;
}

JudgmentDoc DocWithMentions(const std::string &text,
                            const std::vector<Mention> &mentions,
                            int preamble_end) {
  JudgmentDoc doc;
  doc.doc_id = "doc";
  doc.text = text;
  doc.preamble_end = preamble_end;
  for (const Mention &m : mentions) {
    size_t pos = std::string::npos;
    for (int k = 0; k <= m.occurrence; ++k) {
      pos = text.find(m.phrase, pos == std::string::npos ? 0 : pos + 1);
      if (pos == std::string::npos) {
        throw std::invalid_argument("phrase not found: " + m.phrase);
      }
    }
    const int start = CodePointLength(std::string_view(text).substr(0, pos));
    doc.spans.push_back({"", start, start + CodePointLength(m.phrase), m.label,
                         SpanSource::kGold});
  }
  doc.spans = SortedSpans(std::move(doc.spans));
  for (size_t i = 0; i < doc.spans.size(); ++i) {
    doc.spans[i].id = "T" + std::to_string(i);
  }
  return doc;
}

std::vector<EntitySpan> RandomFlatSpans(Rng &rng, int length, int max_spans,
                                        const std::vector<EntityLabel> &labels,
                                        std::string_view id_prefix) {
  const int count = Uniform(rng, 0, max_spans);
  std::vector<int> cuts;
  for (int i = 0; i < 2 * count; ++i) cuts.push_back(Uniform(rng, 0, length));
  std::sort(cuts.begin(), cuts.end());
  std::vector<EntitySpan> spans;
  for (int i = 0; i + 1 < static_cast<int>(cuts.size()); i += 2) {
    if (cuts[i] == cuts[i + 1]) continue;
    spans.push_back({std::string(id_prefix) + std::to_string(spans.size()),
                     cuts[i], cuts[i + 1], Pick(rng, labels),
                     SpanSource::kGold});
  }
  return spans;
}

}  // namespace legalner::testing
