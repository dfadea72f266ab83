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

// Command-line front end.
//
//   legalner import      --in FILE                  canonical JSONL
//   legalner segment     --in FILE                  preamble split, sentences
//   legalner stats       --in FILE [--in FILE ...]  counts and published deltas
//   legalner classify    --in FILE | --text TEXT    case type per record
//   legalner select      --in FILE                  sentences to annotate
//   legalner postprocess --in FILE [--threads N]    full pipeline
//   legalner evaluate    --gold FILE --pred FILE    strict/type-match scores
//
// Every subcommand takes --config (JSON, see config.h) and --out; output is
// JSON (one object) or JSON Lines (one object per record).

#include <cmath>
#include <fstream>
#include <iostream>
#include <map>
#include <set>

#include "CLI11.hpp"
#include "json.hpp"
#include "legalner/case_type.h"
#include "legalner/config.h"
#include "legalner/corpus.h"
#include "legalner/evaluation.h"
#include "legalner/pipeline.h"
#include "legalner/segmentation.h"
#include "legalner/selection.h"

namespace {

using nlohmann::ordered_json;
using namespace legalner;

struct CommonFlags {
  std::string config_path;
  std::string out_path;
};

void AddCommon(CLI::App *cmd, CommonFlags *flags) {
  cmd->add_option("--config", flags->config_path, "JSON configuration file");
  cmd->add_option("--out", flags->out_path, "Output file (default stdout)");
}

// Writes to --out or stdout.
class Output {
 public:
  explicit Output(const std::string &path) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary);
      if (!file_) throw std::runtime_error("cannot write " + path);
    }
  }
  std::ostream &stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

std::vector<AnnotationRecord> Load(const std::string &path,
                                   const PipelineConfig &config) {
  ImportResult result = ImportCorpus(path, config.field_mapping);
  for (const std::string &w : result.warnings) {
    std::cerr << path << ": " << w << "\n";
  }
  return std::move(result.records);
}

ordered_json CountsToJson(const LabelCounts &c) {
  ordered_json j;
  j["tp"] = c.tp;
  j["fp"] = c.fp;
  j["fn"] = c.fn;
  j["support"] = c.support;
  j["precision"] = c.precision();
  j["recall"] = c.recall();
  j["f1"] = c.f1();
  return j;
}

ordered_json ReportToJson(const EvalReport &report) {
  ordered_json j;
  j["scheme"] = SchemeName(report.scheme);
  ordered_json labels = ordered_json::object();
  for (EntityLabel label : kAllLabels) {
    labels[std::string(LabelName(label))] = CountsToJson(report.at(label));
  }
  j["labels"] = std::move(labels);
  j["overall"] = CountsToJson(report.overall());
  return j;
}

ordered_json TableToJson(const std::vector<EntityTableRow> &rows) {
  ordered_json out = ordered_json::array();
  for (const EntityTableRow &r : rows) {
    ordered_json j;
    j["entity"] = r.entity;
    j["count"] = r.count;
    j["avg_len"] = r.avg_len;
    j["f1"] = std::round(r.f1 * 10) / 10;
    j["type_match_f1"] = std::round(r.type_match_f1 * 10) / 10;
    out.push_back(std::move(j));
  }
  return out;
}

// Gold and predicted units paired by id. A unit missing from the predictions
// has no predicted spans; a prediction without gold is an error.
std::vector<EvalUnit> PairUnits(const std::vector<AnnotationRecord> &gold,
                                const std::vector<AnnotationRecord> &pred) {
  std::map<std::string, const AnnotationRecord *> by_id;
  for (const AnnotationRecord &p : pred) {
    if (!by_id.emplace(p.doc_id, &p).second) {
      throw std::runtime_error("duplicate prediction id " + p.doc_id);
    }
  }
  std::vector<EvalUnit> units;
  std::set<std::string> gold_ids;
  for (const AnnotationRecord &g : gold) {
    gold_ids.insert(g.doc_id);
    EvalUnit unit{g.doc_id, g.unit_type, g.spans, {}};
    if (auto it = by_id.find(g.doc_id); it != by_id.end()) {
      if (it->second->text != g.text) {
        throw std::runtime_error("text of prediction " + g.doc_id +
                                 " differs from gold");
      }
      unit.pred = it->second->spans;
    }
    units.push_back(std::move(unit));
  }
  for (const AnnotationRecord &p : pred) {
    if (!gold_ids.count(p.doc_id)) {
      throw std::runtime_error("prediction " + p.doc_id + " has no gold unit");
    }
  }
  return units;
}

ordered_json EvaluateUnits(const std::vector<EvalUnit> &units,
                           const std::string &scheme) {
  EvalReport strict = ScoreUnits(units, Scheme::kStrict);
  EvalReport type_match = ScoreUnits(units, Scheme::kTypeMatch);
  ordered_json j;
  j["units"] = units.size();
  if (scheme == "strict" || scheme == "both") j["strict"] = ReportToJson(strict);
  if (scheme == "typematch" || scheme == "both") {
    j["typematch"] = ReportToJson(type_match);
  }
  j["table"] = TableToJson(PerEntityTable(strict, type_match));
  return j;
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"Post-processing, evaluation and corpus tools for legal NER"};
  app.require_subcommand(1);

  CommonFlags flags;
  std::vector<std::string> inputs;
  std::string input;

  CLI::App *import_cmd = app.add_subcommand("import", "Validate and convert");
  import_cmd->add_option("--in", input, "Input file")->required();
  std::string preset;
  import_cmd->add_option("--preset", preset, "Field mapping preset")
      ->check(CLI::IsMember({"canonical", "label_studio"}));
  AddCommon(import_cmd, &flags);

  CLI::App *segment_cmd = app.add_subcommand("segment", "Split and segment");
  segment_cmd->add_option("--in", input, "Input file")->required();
  AddCommon(segment_cmd, &flags);

  CLI::App *stats_cmd = app.add_subcommand("stats", "Corpus statistics");
  stats_cmd->add_option("--in", inputs, "Input files")->required();
  AddCommon(stats_cmd, &flags);

  CLI::App *classify_cmd = app.add_subcommand("classify", "Case type");
  std::string text;
  auto *classify_in = classify_cmd->add_option("--in", input, "Input file");
  classify_cmd->add_option("--text", text, "Raw text")->excludes(classify_in);
  AddCommon(classify_cmd, &flags);

  CLI::App *select_cmd = app.add_subcommand("select", "Pick sentences");
  select_cmd->add_option("--in", input, "Records with predicted spans")
      ->required();
  AddCommon(select_cmd, &flags);

  CLI::App *post_cmd = app.add_subcommand("postprocess", "Run the pipeline");
  post_cmd->add_option("--in", input, "Input file")->required();
  int threads = 1;
  post_cmd->add_option("--threads", threads, "Worker threads")
      ->check(CLI::PositiveNumber);
  AddCommon(post_cmd, &flags);

  CLI::App *eval_cmd = app.add_subcommand("evaluate", "Score predictions");
  std::string gold_path, pred_path, scheme = "both";
  bool separate = false, as_text = false;
  eval_cmd->add_option("--gold", gold_path, "Gold records")->required();
  eval_cmd->add_option("--pred", pred_path, "Predicted records")->required();
  eval_cmd->add_option("--scheme", scheme, "strict, typematch or both")
      ->check(CLI::IsMember({"strict", "typematch", "both"}));
  eval_cmd->add_flag("--separate", separate,
                     "Also report preambles and judgment sentences apart");
  eval_cmd->add_flag("--table", as_text, "Print the entity table as text");
  AddCommon(eval_cmd, &flags);

  CLI11_PARSE(app, argc, argv);

  try {
    PipelineConfig config = PipelineConfig::Load(flags.config_path);
    Output out(flags.out_path);
    std::ostream &os = out.stream();

    if (*import_cmd) {
      FieldMapping mapping = config.field_mapping;
      if (preset == "label_studio") mapping = FieldMapping::LabelStudio();
      if (preset == "canonical") mapping = FieldMapping::Canonical();
      ImportResult result = ImportCorpus(input, mapping);
      for (const std::string &w : result.warnings) std::cerr << w << "\n";
      os << ExportCorpus(result.records);
    } else if (*segment_cmd) {
      for (const AnnotationRecord &record : Load(input, config)) {
        JudgmentDoc doc = PrepareDoc(record, config);
        ordered_json j;
        j["id"] = doc.doc_id;
        j["preamble_end"] = doc.preamble_end;
        ordered_json sentences = ordered_json::array();
        for (const TextRange &s : doc.sentence_bounds) {
          sentences.push_back({s.start, s.end});
        }
        j["sentences"] = std::move(sentences);
        os << j.dump() << "\n";
      }
    } else if (*stats_cmd) {
      std::vector<AnnotationRecord> records;
      for (const std::string &path : inputs) {
        for (AnnotationRecord &r : Load(path, config)) {
          records.push_back(std::move(r));
        }
      }
      CorpusStats stats = ComputeStats(records);
      ordered_json j;
      j["splits"] = StatsToJson(stats);
      ordered_json deltas = ordered_json::array();
      for (const StatDelta &d : CompareWithPublished(stats)) {
        ordered_json item;
        item["split"] = d.split;
        item["item"] = d.item;
        item["expected"] = d.expected;
        item["actual"] = d.actual;
        item["delta"] = d.delta();
        deltas.push_back(std::move(item));
      }
      j["published_deltas"] = std::move(deltas);
      os << j.dump(2) << "\n";
    } else if (*classify_cmd) {
      auto emit = [&](const std::string &id, const std::string &body) {
        CaseTypeResult result = ClassifyCaseType(body, config.case_types);
        ordered_json j;
        j["id"] = id;
        j["case_type"] = CaseTypeName(result.type);
        ordered_json matched = ordered_json::array();
        for (const auto &[type, keyword] : result.matched_keywords) {
          matched.push_back({{"case_type", CaseTypeName(type)},
                             {"keyword", keyword}});
        }
        j["matched_keywords"] = std::move(matched);
        os << j.dump() << "\n";
      };
      if (!input.empty()) {
        for (const AnnotationRecord &r : Load(input, config)) {
          emit(r.doc_id, r.text);
        }
      } else {
        emit("text", text);
      }
    } else if (*select_cmd) {
      std::vector<AnnotationRecord> records = Load(input, config);
      std::vector<SelectionCandidate> candidates =
          CandidatesFromRecords(records, config.segmentation);
      SelectionResult result = SelectSentences(candidates, config.selection);
      std::map<ExclusionReason, int> reasons;
      for (const auto &[index, reason] : result.excluded) ++reasons[reason];
      for (const auto &[reason, count] : reasons) {
        std::cerr << "excluded " << ExclusionReasonName(reason) << ": "
                  << count << "\n";
      }
      for (size_t i : result.selected) {
        const SelectionCandidate &c = candidates[i];
        AnnotationRecord r;
        r.doc_id = c.id;
        r.unit_type = c.unit_type;
        r.text = c.text;
        r.spans = c.spans;
        os << RecordToJson(r).dump() << "\n";
      }
    } else if (*post_cmd) {
      std::vector<AnnotationRecord> records = Load(input, config);
      for (const PipelineOutput &o : PostprocessAll(records, config, threads)) {
        os << OutputToJson(o).dump() << "\n";
      }
    } else if (*eval_cmd) {
      std::vector<EvalUnit> units =
          PairUnits(Load(gold_path, config), Load(pred_path, config));
      if (as_text) {
        EvalReport strict = ScoreUnits(units, Scheme::kStrict);
        EvalReport type_match = ScoreUnits(units, Scheme::kTypeMatch);
        os << FormatEntityTable(PerEntityTable(strict, type_match));
      } else {
        ordered_json j = EvaluateUnits(units, scheme);
        if (separate) {
          std::vector<EvalUnit> preambles, sentences;
          for (const EvalUnit &u : units) {
            (u.unit_type == DocType::kPreamble ? preambles : sentences)
                .push_back(u);
          }
          j["preamble"] = EvaluateUnits(preambles, scheme);
          j["judgment"] = EvaluateUnits(sentences, scheme);
        }
        os << j.dump(2) << "\n";
      }
    }
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
