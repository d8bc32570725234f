// Copyright 2026 The fngen Authors.
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

#ifndef FNGEN_PATTERNS_H_
#define FNGEN_PATTERNS_H_

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "fngen/types.hpp"

namespace fngen {

// One frame element realization inside a valence pattern: which element,
// what phrase category it surfaces as, and its grammatical role.
struct FERealization {
  std::string fe_name;
  PhraseCat cat = PhraseCat::NP;
  SynRole role = SynRole::None;

  bool operator==(const FERealization& other) const;
  bool operator<(const FERealization& other) const;
};

// A valence pattern: frame plus verb type, voice and the multiset of FE
// realizations, with an occurrence count. The fes vector is kept in
// canonical order (sorted by element name, then category, then role).
struct ValencePattern {
  std::string frame;
  VerbType verb_type = VerbType::V;
  Voice voice = Voice::Act;
  std::vector<FERealization> fes;
  long freq = 1;

  // Equality and ordering ignore freq: two patterns are the same pattern
  // regardless of how often each was seen.
  bool same_pattern(const ValencePattern& other) const;
  bool operator<(const ValencePattern& other) const;
};

// Sorts fes into canonical order.
void canonicalize(ValencePattern* pattern);
ValencePattern canonical(ValencePattern pattern);

// Checks the pattern's internal constraints: canonical fes order, role and
// category compatibility (roles only on NPs, Agent only in passives), at
// most one FE per role apart from None, freq >= 1.
std::vector<std::string> pattern_violations(const ValencePattern& pattern);

// A set of canonical patterns keyed by identity with aggregated frequencies.
struct PatternSet {
  std::string fn_id;
  std::map<ValencePattern, long> patterns;

  // Inserts a canonical pattern, summing frequencies on collision.
  void add(const ValencePattern& pattern);
  size_t size() const { return patterns.size(); }

  // Patterns in sorted order with freq filled in from the map value.
  std::vector<ValencePattern> sorted() const;
};

std::string serialize_patterns(const PatternSet& set);
PatternSet parse_patterns(const std::string& text,
                          const std::string& source_name,
                          const std::string& fn_id);
PatternSet load_patterns(const std::filesystem::path& path);
void save_patterns(const PatternSet& set, const std::filesystem::path& path);

// "Desiring/V2_Act Experiencer/NP_Subj Focal_participant/NP_DObj" style
// one-line rendering used by reports and error messages.
std::string pattern_to_string(const ValencePattern& pattern);

}  // namespace fngen

#endif  // FNGEN_PATTERNS_H_
