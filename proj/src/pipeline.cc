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

#include "legalner/pipeline.h"

#include <atomic>
#include <thread>

#include "legalner/segmentation.h"
#include "legalner/text_util.h"

namespace legalner {

using nlohmann::ordered_json;

JudgmentDoc PrepareDoc(const AnnotationRecord &record,
                       const PipelineConfig &config,
                       std::vector<std::string> *warnings) {
  JudgmentDoc doc = ToJudgmentDoc(record);
  if (record.unit_type != DocType::kFullJudgment) return doc;

  const int length = CodePointLength(doc.text);
  if (!record.preamble_end) {
    int split = SplitPreamble(doc.text, DefaultVerbAnalyzer(),
                              config.segmentation);
    bool moved = true;
    while (moved) {
      moved = false;
      for (const EntitySpan &span : doc.spans) {
        if (span.start < split && split < span.end) {
          split = span.start;
          moved = true;
        }
      }
    }
    doc.preamble_end = split;
  }
  if (doc.preamble_end < 0 || doc.preamble_end > length) return doc;
  doc.sentence_bounds = MergeAcrossSpans(
      SegmentSentences(doc.text, {doc.preamble_end, length},
                       config.segmentation),
      doc.spans);
  if (warnings != nullptr && CountSplitSpans(doc, config.segmentation) > 0) {
    warnings->push_back("sentences merged to keep " +
                        std::to_string(CountSplitSpans(doc, config.segmentation)) +
                        " spans whole");
  }
  return doc;
}

PipelineOutput RunStages(JudgmentDoc doc, const PipelineConfig &config) {
  PipelineOutput out;
  out.violations = ValidateDoc(doc);
  if (HasErrors(out.violations)) {
    out.doc = std::move(doc);
    out.skipped = true;
    return out;
  }
  ReconcileResult reconciled = Reconcile(doc);
  out.reconciliations = std::move(reconciled.records);
  out.warnings.insert(out.warnings.end(), reconciled.warnings.begin(),
                      reconciled.warnings.end());

  PrecedentResult precedents =
      ClusterPrecedents(reconciled.doc, config.precedents);
  out.precedent_clusters = std::move(precedents.clusters);
  out.referents = std::move(precedents.referents);
  out.doc = std::move(precedents.doc);

  StatuteResult statutes =
      ClusterStatutes(out.doc, config.acronyms, config.statutes);
  out.statute_clusters = std::move(statutes.clusters);
  out.warnings.insert(out.warnings.end(), statutes.warnings.begin(),
                      statutes.warnings.end());

  out.provision_statute_pairs =
      LinkProvisions(out.doc, out.statute_clusters, config.provisions);
  return out;
}

PipelineOutput Postprocess(const AnnotationRecord &record,
                           const PipelineConfig &config) {
  std::vector<std::string> warnings;
  JudgmentDoc doc = PrepareDoc(record, config, &warnings);
  PipelineOutput out = RunStages(std::move(doc), config);
  out.warnings.insert(out.warnings.begin(), warnings.begin(), warnings.end());
  return out;
}

std::vector<PipelineOutput> PostprocessAll(
    std::span<const AnnotationRecord> records, const PipelineConfig &config,
    int threads) {
  std::vector<PipelineOutput> out(records.size());
  if (threads <= 1 || records.size() <= 1) {
    for (size_t i = 0; i < records.size(); ++i) {
      out[i] = Postprocess(records[i], config);
    }
    return out;
  }
  std::atomic<size_t> next{0};
  std::vector<std::exception_ptr> errors(records.size());
  auto worker = [&] {
    for (size_t i = next++; i < records.size(); i = next++) {
      try {
        out[i] = Postprocess(records[i], config);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  {
    std::vector<std::jthread> pool;
    const size_t n = std::min<size_t>(threads, records.size());
    for (size_t t = 0; t < n; ++t) pool.emplace_back(worker);
  }
  for (const std::exception_ptr &e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

ordered_json OutputToJson(const PipelineOutput &output) {
  const JudgmentDoc &doc = output.doc;
  Utf8Index index(doc.text);
  const int length = index.size();
  auto text_of = [&](const EntitySpan &s) -> std::string {
    if (s.start < 0 || s.end > length || s.start > s.end) return "";
    return std::string(index.Slice(s.start, s.end));
  };

  ordered_json out;
  out["id"] = doc.doc_id;
  out["preamble_end"] = doc.preamble_end;
  ordered_json sentences = ordered_json::array();
  for (const TextRange &s : doc.sentence_bounds) {
    sentences.push_back({s.start, s.end});
  }
  out["sentences"] = std::move(sentences);

  ordered_json spans = ordered_json::array();
  for (const EntitySpan &s : doc.spans) {
    ordered_json j;
    j["id"] = s.id;
    j["start"] = s.start;
    j["end"] = s.end;
    j["label"] = LabelName(s.label);
    j["text"] = text_of(s);
    spans.push_back(std::move(j));
  }
  out["spans"] = std::move(spans);

  ordered_json violations = ordered_json::array();
  for (const Violation &v : output.violations) {
    violations.push_back(
        {{"severity", v.severity == Severity::kError ? "error" : "warning"},
         {"rule", v.rule},
         {"subject", v.subject},
         {"message", v.message}});
  }
  out["violations"] = std::move(violations);
  out["skipped"] = output.skipped;

  ordered_json reconciliations = ordered_json::array();
  for (const ReconciliationRecord &r : output.reconciliations) {
    ordered_json j;
    j["span"] = r.span_id;
    j["from"] = LabelName(r.old_label);
    j["to"] = LabelName(r.new_label);
    j["matched"] = r.matched_span_id;
    reconciliations.push_back(std::move(j));
  }
  out["reconciliations"] = std::move(reconciliations);

  auto head_text = [&](const std::string &id) -> std::string {
    const EntitySpan *span = FindSpan(doc, id);
    return span ? text_of(*span) : "";
  };
  ordered_json precedents = ordered_json::array();
  for (const PrecedentCluster &c : output.precedent_clusters) {
    ordered_json j;
    j["head"] = c.head_span_id;
    j["head_text"] = head_text(c.head_span_id);
    j["members"] = c.member_span_ids;
    j["citation_keys"] = c.citation_keys;
    j["party_keys"] = c.party_keys;
    precedents.push_back(std::move(j));
  }
  out["precedent_clusters"] = std::move(precedents);

  ordered_json referents = ordered_json::array();
  for (const ReferentLink &r : output.referents) {
    ordered_json j;
    j["span"] = r.span_id;
    j["from"] = LabelName(r.old_label);
    j["antecedent"] = r.antecedent_span_id;
    referents.push_back(std::move(j));
  }
  out["precedent_referents"] = std::move(referents);

  ordered_json statutes = ordered_json::array();
  for (const StatuteCluster &c : output.statute_clusters) {
    ordered_json j;
    j["head"] = c.head_span_id;
    j["canonical_name"] = c.canonical_name;
    j["members"] = c.member_span_ids;
    j["aliases"] = c.aliases;
    statutes.push_back(std::move(j));
  }
  out["statute_clusters"] = std::move(statutes);

  ordered_json pairs = ordered_json::array();
  for (const ProvisionStatutePair &p : output.provision_statute_pairs) {
    ordered_json j;
    j["provision"] = p.provision_span_id;
    j["statute"] = p.statute ? ordered_json(*p.statute) : ordered_json();
    j["mode"] = LinkModeName(p.mode);
    j["evidence"] =
        p.evidence_span_id ? ordered_json(*p.evidence_span_id) : ordered_json();
    pairs.push_back(std::move(j));
  }
  out["provision_statute_pairs"] = std::move(pairs);
  out["warnings"] = output.warnings;
  return out;
}

}  // namespace legalner
