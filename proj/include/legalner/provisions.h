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

#ifndef LEGALNER_PROVISIONS_H_
#define LEGALNER_PROVISIONS_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "legalner/coref.h"
#include "legalner/document.h"

namespace legalner {

enum class LinkMode : uint8_t {
  kExplicit,         // statute named after the provision in its sentence
  kImplicitUnique,   // the only statute this provision is ever tied to
  kImplicitNearest,  // statute of the closest preceding sentence
  kUnresolved,
};

std::string_view LinkModeName(LinkMode mode);

struct ProvisionStatutePair {
  std::string provision_span_id;
  std::optional<std::string> statute;  // canonical cluster name
  LinkMode mode = LinkMode::kUnresolved;
  std::optional<std::string> evidence_span_id;

  friend bool operator==(const ProvisionStatutePair &,
                         const ProvisionStatutePair &) = default;
};

struct ProvisionOptions {
  // Bind a statute only to the provision right before it. When false, every
  // provision between the previous statute of the sentence and this one is
  // bound, which handles "Sections 420 and 468 of IPC".
  bool strict_explicit = false;
};

// Canonical provision key: "Sec. 420" and "section 420" both become
// "section 420"; "Art. 14 of the Constitution" becomes "article 14
// constitution".
std::string ProvisionKey(std::string_view text);

// Assigns a statute to every PROVISION span, in document order. Sentences
// come from doc.sentence_bounds (the preamble counts as one extra leading
// sentence; a document without sentences is a single sentence).
std::vector<ProvisionStatutePair> LinkProvisions(
    const JudgmentDoc &doc, const std::vector<StatuteCluster> &clusters,
    const ProvisionOptions &options = {});

}  // namespace legalner

#endif  // LEGALNER_PROVISIONS_H_
