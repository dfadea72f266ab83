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

#include "legalner/corpus.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "legalner/text_util.h"

namespace legalner {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

const json *Resolve(const json &root, const std::string &pointer) {
  if (pointer.empty()) return nullptr;
  try {
    json::json_pointer ptr(pointer);
    if (!root.contains(ptr)) return nullptr;
    const json &value = root.at(ptr);
    return value.is_null() ? nullptr : &value;
  } catch (const json::exception &) {
    return nullptr;
  }
}

std::string Upper(std::string_view s) {
  std::string out(s);
  for (char &c : out) {
    if (c >= 'a' && c <= 'z') c = static_cast<char>(c - 32);
  }
  return out;
}

std::optional<DocType> UnitTypeFromFileName(std::string_view name) {
  std::string upper = Upper(name);
  if (upper.find("PREAMBLE") != std::string::npos) return DocType::kPreamble;
  if (upper.find("JUDGEMENT") != std::string::npos ||
      upper.find("JUDGMENT") != std::string::npos) {
    return DocType::kJudgmentSentence;
  }
  return std::nullopt;
}

std::optional<Split> SplitFromFileName(std::string_view name) {
  std::string upper = Upper(name);
  size_t slash = upper.find_last_of('/');
  if (slash != std::string::npos) upper = upper.substr(slash + 1);
  for (Split split : {Split::kTrain, Split::kDev, Split::kTest}) {
    if (FindWholePhrase(upper, Upper(SplitName(split))) != std::string::npos ||
        upper.find("_" + Upper(SplitName(split)) + "_") != std::string::npos) {
      return split;
    }
  }
  return std::nullopt;
}

std::string ExtractUrl(const std::string &value) {
  size_t pos = value.find("http");
  if (pos == std::string::npos) return value;
  size_t end = pos;
  while (end < value.size() && !IsSpace(static_cast<unsigned char>(value[end]))) {
    ++end;
  }
  return value.substr(pos, end - pos);
}

std::string AsIdString(const json &value) {
  if (value.is_string()) return value.get<std::string>();
  return value.dump();
}

int AsOffset(const json *value, long index, const char *what) {
  if (value == nullptr || !value->is_number_integer()) {
    throw ImportError(index, std::string("span ") + what +
                                 " is missing or not an integer");
  }
  return value->get<int>();
}

struct RawSpan {
  int start;
  int end;
  std::string label;
  std::string id;
};

std::vector<RawSpan> ReadSpans(const json &record, const FieldMapping &m,
                               long index) {
  std::vector<RawSpan> out;
  const json *spans = Resolve(record, m.spans);
  if (spans == nullptr) return out;
  if (!spans->is_array()) throw ImportError(index, "spans is not an array");
  for (const json &element : *spans) {
    RawSpan raw;
    if (!m.span_start.empty()) {
      raw.start = AsOffset(Resolve(element, m.span_start), index, "start");
      raw.end = AsOffset(Resolve(element, m.span_end), index, "end");
      const json *label = Resolve(element, m.span_label);
      if (label == nullptr || !label->is_string()) {
        throw ImportError(index, "span label is missing");
      }
      raw.label = label->get<std::string>();
      if (const json *id = Resolve(element, m.span_id)) raw.id = AsIdString(*id);
    } else if (element.is_array() && element.size() >= 3) {
      if (!element[0].is_number_integer() || !element[1].is_number_integer() ||
          !element[2].is_string()) {
        throw ImportError(index, "span triple must be [int, int, string]");
      }
      raw.start = element[0].get<int>();
      raw.end = element[1].get<int>();
      raw.label = element[2].get<std::string>();
      if (element.size() > 3 && element[3].is_string()) {
        raw.id = element[3].get<std::string>();
      }
    } else if (element.is_object()) {
      raw.start = AsOffset(Resolve(element, "/start"), index, "start");
      raw.end = AsOffset(Resolve(element, "/end"), index, "end");
      const json *label = Resolve(element, "/label");
      if (label == nullptr || !label->is_string()) {
        throw ImportError(index, "span label is missing");
      }
      raw.label = label->get<std::string>();
      if (const json *id = Resolve(element, "/id")) raw.id = AsIdString(*id);
    } else {
      throw ImportError(index, "unrecognized span element " + element.dump());
    }
    out.push_back(std::move(raw));
  }
  return out;
}

AnnotationRecord ReadRecord(const json &value, const FieldMapping &m,
                            long index, std::string_view file_name,
                            std::vector<std::string> *warnings) {
  if (!value.is_object()) throw ImportError(index, "record is not an object");
  AnnotationRecord record;
  const std::string where = "record " + std::to_string(index);

  const json *id = Resolve(value, m.id);
  record.doc_id = id != nullptr ? AsIdString(*id) : "record-" +
                                                        std::to_string(index);
  const json *text = Resolve(value, m.text);
  if (text == nullptr || !text->is_string()) {
    throw ImportError(index, "text field '" + m.text + "' is missing");
  }
  record.text = text->get<std::string>();

  if (const json *unit = Resolve(value, m.unit_type)) {
    auto type = unit->is_string() ? DocTypeFromName(unit->get<std::string>())
                                  : std::nullopt;
    if (!type) throw ImportError(index, "unknown unit type " + unit->dump());
    record.unit_type = *type;
  } else if (m.default_unit_type) {
    record.unit_type = *m.default_unit_type;
  } else if (auto inferred = UnitTypeFromFileName(file_name)) {
    record.unit_type = *inferred;
  } else {
    throw ImportError(index, "unit type is neither declared nor inferable");
  }

  if (const json *split = Resolve(value, m.split)) {
    auto s = split->is_string() ? SplitFromName(split->get<std::string>())
                                : std::nullopt;
    if (!s) throw ImportError(index, "unknown split " + split->dump());
    record.split = s;
  } else if (m.default_split) {
    record.split = m.default_split;
  } else {
    record.split = SplitFromFileName(file_name);
  }

  if (const json *url = Resolve(value, m.source_url); url && url->is_string()) {
    record.source_url = ExtractUrl(url->get<std::string>());
  }
  if (const json *pe = Resolve(value, m.preamble_end)) {
    if (!pe->is_number_integer()) {
      throw ImportError(index, "preamble_end is not an integer");
    }
    record.preamble_end = pe->get<int>();
  }
  if (const json *meta = Resolve(value, m.meta); meta && meta->is_object()) {
    auto field = [&](const char *key) -> std::optional<std::string> {
      auto it = meta->find(key);
      if (it == meta->end() || !it->is_string()) return std::nullopt;
      return it->get<std::string>();
    };
    record.meta.court = field("court");
    record.meta.decision_date = field("decision_date");
    record.meta.case_type = field("case_type");
  }

  const std::u32string decoded = DecodeUtf8(record.text);
  const int length = static_cast<int>(decoded.size());
  if (record.preamble_end &&
      (*record.preamble_end < 0 || *record.preamble_end > length)) {
    throw ImportError(index, "preamble_end " +
                                 std::to_string(*record.preamble_end) +
                                 " outside text of length " +
                                 std::to_string(length));
  }

  for (RawSpan &raw : ReadSpans(value, m, index)) {
    if (raw.start < 0 || raw.end > length || raw.start >= raw.end) {
      throw ImportError(index, "span (" + std::to_string(raw.start) + ", " +
                                   std::to_string(raw.end) + ", " + raw.label +
                                   ") out of bounds for text of length " +
                                   std::to_string(length));
    }
    auto label = LabelFromName(raw.label);
    if (!label) {
      throw ImportError(index, "unknown entity label '" + raw.label + "'");
    }
    int start = raw.start, end = raw.end;
    while (start < end && IsSpace(decoded[start])) ++start;
    while (end > start && IsSpace(decoded[end - 1])) --end;
    if (start == end) {
      throw ImportError(index, "span (" + std::to_string(raw.start) + ", " +
                                   std::to_string(raw.end) +
                                   ") contains only whitespace");
    }
    if (start != raw.start || end != raw.end) {
      warnings->push_back(where + ": trimmed span (" +
                          std::to_string(raw.start) + ", " +
                          std::to_string(raw.end) + ") to (" +
                          std::to_string(start) + ", " + std::to_string(end) +
                          ")");
    }
    record.spans.push_back({raw.id, start, end, *label, m.source});
  }
  record.spans = SortedSpans(std::move(record.spans));
  for (size_t k = 0; k < record.spans.size(); ++k) {
    if (record.spans[k].id.empty()) record.spans[k].id = "T" + std::to_string(k);
  }

  // Regions of a full judgment are unknown until it is split.
  const bool region_known = record.unit_type != DocType::kFullJudgment ||
                            record.preamble_end.has_value();
  std::string errors;
  for (const Violation &v : ValidateDoc(ToJudgmentDoc(record))) {
    if (!region_known && v.rule == "label outside validity domain") continue;
    if (v.severity == Severity::kWarning) {
      warnings->push_back(where + ": " + v.rule + ": " + v.subject + ": " +
                          v.message);
    } else {
      if (!errors.empty()) errors += "; ";
      errors += v.rule + ": " + v.subject + " (" + v.message + ")";
    }
  }
  if (!errors.empty()) throw ImportError(index, errors);
  return record;
}

}  // namespace

std::string_view SplitName(Split split) {
  switch (split) {
    case Split::kTrain: return "train";
    case Split::kDev: return "dev";
    case Split::kTest: return "test";
  }
  return "";
}

std::optional<Split> SplitFromName(std::string_view name) {
  std::string lower = ToLowerAscii(name);
  for (Split split : {Split::kTrain, Split::kDev, Split::kTest}) {
    if (SplitName(split) == lower) return split;
  }
  return std::nullopt;
}

JudgmentDoc ToJudgmentDoc(const AnnotationRecord &record) {
  JudgmentDoc doc;
  doc.doc_id = record.doc_id;
  doc.text = record.text;
  doc.spans = record.spans;
  doc.meta = record.meta;
  const std::u32string decoded = DecodeUtf8(record.text);
  const int length = static_cast<int>(decoded.size());
  switch (record.unit_type) {
    case DocType::kPreamble:
      doc.preamble_end = length;
      break;
    case DocType::kJudgmentSentence: {
      int b = 0, e = length;
      while (b < e && IsSpace(decoded[b])) ++b;
      while (e > b && IsSpace(decoded[e - 1])) --e;
      if (b < e) doc.sentence_bounds.push_back({b, e});
      break;
    }
    case DocType::kFullJudgment:
      doc.preamble_end = record.preamble_end.value_or(0);
      break;
  }
  return doc;
}

ImportError::ImportError(long record_index, const std::string &message)
    : std::runtime_error(record_index < 0
                             ? message
                             : "record " + std::to_string(record_index) +
                                   ": " + message),
      record_index_(record_index) {}

FieldMapping FieldMapping::Canonical() { return FieldMapping(); }

FieldMapping FieldMapping::LabelStudio() {
  FieldMapping m;
  m.layout = Layout::kJsonArray;
  m.id = "/id";
  m.text = "/data/text";
  m.spans = "/annotations/0/result";
  m.span_start = "/value/start";
  m.span_end = "/value/end";
  m.span_label = "/value/labels/0";
  m.span_id = "/id";
  m.unit_type = "";
  m.split = "";
  m.source_url = "/data/meta/source";
  m.preamble_end = "";
  m.meta = "";
  return m;
}

FieldMapping FieldMapping::FromJson(const json &config) {
  if (!config.is_object()) {
    throw std::invalid_argument("field mapping must be a JSON object");
  }
  FieldMapping m;
  if (auto preset = config.find("preset"); preset != config.end()) {
    std::string name = preset->get<std::string>();
    if (name == "label_studio") {
      m = LabelStudio();
    } else if (name != "canonical") {
      throw std::invalid_argument("unknown mapping preset '" + name + "'");
    }
  }
  std::map<std::string, std::string *> pointers = {
      {"id", &m.id},
      {"text", &m.text},
      {"spans", &m.spans},
      {"span_start", &m.span_start},
      {"span_end", &m.span_end},
      {"span_label", &m.span_label},
      {"span_id", &m.span_id},
      {"unit_type", &m.unit_type},
      {"split", &m.split},
      {"source_url", &m.source_url},
      {"preamble_end", &m.preamble_end},
      {"meta", &m.meta},
  };
  for (const auto &[key, value] : config.items()) {
    if (key == "preset") continue;
    if (auto it = pointers.find(key); it != pointers.end()) {
      *it->second = value.get<std::string>();
    } else if (key == "layout") {
      std::string layout = value.get<std::string>();
      if (layout == "auto") {
        m.layout = Layout::kAuto;
      } else if (layout == "jsonl") {
        m.layout = Layout::kJsonLines;
      } else if (layout == "json_array") {
        m.layout = Layout::kJsonArray;
      } else {
        throw std::invalid_argument("unknown layout '" + layout + "'");
      }
    } else if (key == "default_unit_type") {
      auto type = DocTypeFromName(value.get<std::string>());
      if (!type) throw std::invalid_argument("bad default_unit_type");
      m.default_unit_type = type;
    } else if (key == "default_split") {
      auto split = SplitFromName(value.get<std::string>());
      if (!split) throw std::invalid_argument("bad default_split");
      m.default_split = split;
    } else if (key == "source") {
      std::string source = value.get<std::string>();
      if (source == "gold") {
        m.source = SpanSource::kGold;
      } else if (source == "predicted") {
        m.source = SpanSource::kPredicted;
      } else {
        throw std::invalid_argument("source must be gold or predicted");
      }
    } else {
      throw std::invalid_argument("unknown field mapping key '" + key + "'");
    }
  }
  return m;
}

ImportResult ImportCorpusString(std::string_view content,
                                const FieldMapping &mapping,
                                std::string_view file_name) {
  ImportResult result;
  size_t first = content.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return result;

  FieldMapping::Layout layout = mapping.layout;
  if (layout == FieldMapping::Layout::kAuto) {
    layout = content[first] == '[' ? FieldMapping::Layout::kJsonArray
                                   : FieldMapping::Layout::kJsonLines;
  }

  if (layout == FieldMapping::Layout::kJsonArray) {
    json array;
    try {
      array = json::parse(content);
    } catch (const json::exception &e) {
      throw ImportError(-1, std::string("malformed JSON: ") + e.what());
    }
    if (!array.is_array()) throw ImportError(-1, "expected a JSON array");
    for (size_t i = 0; i < array.size(); ++i) {
      result.records.push_back(ReadRecord(array[i], mapping, i, file_name,
                                          &result.warnings));
    }
    return result;
  }

  long index = 0;
  size_t pos = 0;
  while (pos < content.size()) {
    size_t eol = content.find('\n', pos);
    if (eol == std::string_view::npos) eol = content.size();
    std::string_view line = content.substr(pos, eol - pos);
    pos = eol + 1;
    if (line.find_first_not_of(" \t\r") == std::string_view::npos) continue;
    json value;
    try {
      value = json::parse(line);
    } catch (const json::exception &e) {
      throw ImportError(index, std::string("malformed JSON: ") + e.what());
    }
    result.records.push_back(
        ReadRecord(value, mapping, index, file_name, &result.warnings));
    ++index;
  }
  return result;
}

ImportResult ImportCorpus(const std::string &path,
                          const FieldMapping &mapping) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ImportError(-1, "cannot open " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return ImportCorpusString(buffer.str(), mapping, path);
}

ordered_json RecordToJson(const AnnotationRecord &record) {
  ordered_json out;
  out["id"] = record.doc_id;
  out["unit_type"] = DocTypeName(record.unit_type);
  if (record.split) out["split"] = SplitName(*record.split);
  out["text"] = record.text;
  if (record.preamble_end) out["preamble_end"] = *record.preamble_end;
  ordered_json spans = ordered_json::array();
  for (const EntitySpan &s : record.spans) {
    spans.push_back({s.start, s.end, LabelName(s.label)});
  }
  out["spans"] = std::move(spans);
  ordered_json meta = ordered_json::object();
  if (record.source_url) meta["source_url"] = *record.source_url;
  if (record.meta.court) meta["court"] = *record.meta.court;
  if (record.meta.decision_date) {
    meta["decision_date"] = *record.meta.decision_date;
  }
  if (record.meta.case_type) meta["case_type"] = *record.meta.case_type;
  out["meta"] = std::move(meta);
  return out;
}

std::string ExportCorpus(std::span<const AnnotationRecord> records) {
  std::string out;
  for (const AnnotationRecord &record : records) {
    out += RecordToJson(record).dump();
    out.push_back('\n');
  }
  return out;
}

CorpusStats ComputeStats(std::span<const AnnotationRecord> records) {
  CorpusStats stats;
  for (const AnnotationRecord &record : records) {
    std::string key =
        record.split ? std::string(SplitName(*record.split)) : "unspecified";
    SplitStats &s = stats.splits[key];
    switch (record.unit_type) {
      case DocType::kPreamble: ++s.preamble_count; break;
      case DocType::kJudgmentSentence: ++s.sentence_count; break;
      case DocType::kFullJudgment: ++s.full_judgment_count; break;
    }
    const int preamble_end = record.unit_type == DocType::kPreamble
                                 ? CodePointLength(record.text)
                                 : record.unit_type == DocType::kFullJudgment
                                       ? record.preamble_end.value_or(0)
                                       : 0;
    for (const EntitySpan &span : record.spans) {
      ++s.entity_count;
      const int label = LabelIndex(span.label);
      if (RegionOf(span.range(), preamble_end) == Region::kPreamble) {
        ++s.preamble_counts[label];
      } else {
        ++s.judgment_counts[label];
      }
      s.chars[label] += span.length();
    }
  }
  return stats;
}

const std::vector<PublishedSplit> &PublishedCounts() {
  static const std::vector<PublishedSplit> kCounts = [] {
    using L = std::optional<long>;
    const L na = std::nullopt;
    PublishedSplit train{"train", 1560, 9435, 29964};
    train.judgment_counts = {L(1293), L(464), L(324), L(567), na,
                             L(1885), L(1441), L(1398), L(1804), L(2384),
                             L(1351), L(1040), L(881), L(2653)};
    train.preamble_counts = {L(1074), L(2604), L(3538), L(1758), L(3505),
                             na, na, na, na, na, na, na, na, na};
    PublishedSplit dev{"dev", 125, 949, 3216};
    PublishedSplit test{"test", 441, 4060, 13365};
    test.total_counts = {L(1231), L(835), L(1125), L(580), L(1813),
                         L(1111), L(920), L(711), L(971), L(1220),
                         L(634), L(683), L(446), L(1085)};
    test.avg_len = {L(25), L(20), L(34), L(15), L(16), L(11), L(18),
                    L(8), L(17), L(14), L(62), L(23), L(12), L(12)};
    return std::vector<PublishedSplit>{train, dev, test};
  }();
  return kCounts;
}

std::vector<StatDelta> CompareWithPublished(const CorpusStats &stats) {
  std::vector<StatDelta> out;
  for (const PublishedSplit &p : PublishedCounts()) {
    auto it = stats.splits.find(p.split);
    if (it == stats.splits.end()) continue;
    const SplitStats &s = it->second;
    out.push_back({p.split, "preambles", p.preambles, s.preamble_count});
    out.push_back({p.split, "judgment_sentences", p.sentences,
                   s.sentence_count});
    out.push_back({p.split, "entities", p.entities, s.entity_count});
    long total_chars = 0;
    for (EntityLabel label : kAllLabels) {
      const int i = LabelIndex(label);
      const std::string name(LabelName(label));
      total_chars += s.chars[i];
      if (p.judgment_counts[i]) {
        out.push_back({p.split, name + "/judgment", *p.judgment_counts[i],
                       s.judgment_counts[i]});
      }
      if (p.preamble_counts[i]) {
        out.push_back({p.split, name + "/preamble", *p.preamble_counts[i],
                       s.preamble_counts[i]});
      }
      const long count = s.judgment_counts[i] + s.preamble_counts[i];
      if (p.total_counts[i]) {
        out.push_back({p.split, name + "/count", *p.total_counts[i], count});
      }
      if (p.avg_len[i]) {
        long avg = count == 0 ? 0
                              : std::lround(static_cast<double>(s.chars[i]) /
                                            count);
        out.push_back({p.split, name + "/avg_len", *p.avg_len[i], avg});
      }
    }
    if (p.split == "test") {
      long avg = s.entity_count == 0
                     ? 0
                     : std::lround(static_cast<double>(total_chars) /
                                   s.entity_count);
      out.push_back({p.split, "overall/avg_len", 20, avg});
    }
  }
  return out;
}

ordered_json StatsToJson(const CorpusStats &stats) {
  ordered_json out = ordered_json::object();
  for (const auto &[split, s] : stats.splits) {
    ordered_json j;
    j["preambles"] = s.preamble_count;
    j["judgment_sentences"] = s.sentence_count;
    j["full_judgments"] = s.full_judgment_count;
    j["entities"] = s.entity_count;
    ordered_json labels = ordered_json::object();
    for (EntityLabel label : kAllLabels) {
      const int i = LabelIndex(label);
      labels[std::string(LabelName(label))] = {
          {"judgment", s.judgment_counts[i]},
          {"preamble", s.preamble_counts[i]}};
    }
    j["labels"] = std::move(labels);
    out[split] = std::move(j);
  }
  return out;
}

}  // namespace legalner
