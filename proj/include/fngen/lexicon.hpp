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

#ifndef FNGEN_LEXICON_H_
#define FNGEN_LEXICON_H_

#include <filesystem>
#include <string>
#include <vector>

#include "fngen/types.hpp"

namespace fngen {

// Principal parts, indexed per language. English verbs carry five forms,
// Swedish six (the two s-forms realize the morphological passive).
enum class EnForm { Base = 0, Pres3sg, Past, PastParticiple, PresParticiple };
enum class SvForm {
  Infinitive = 0,
  Present,
  Past,
  Supine,
  SPassivePresent,
  SPassivePast,
};

size_t inflection_form_count(Language lang);  // 5 for en, 6 for sv

// One verb sense bound to a frame. The complement marker is the particle
// inserted before a VP complement (English "to", Swedish "att" or empty);
// it is lexical because verbs disagree about it even within a language.
struct LexiconEntry {
  std::string lemma;
  VerbType verb_type = VerbType::V;
  std::string frame;
  Language language = Language::En;
  std::vector<std::string> forms;
  std::string complement_marker;

  // "want_VV_Desiring" style unique name.
  std::string name() const {
    return lemma + "_" + verb_type_name(verb_type) + "_" + frame;
  }

  const std::string& form(EnForm f) const {
    return forms[static_cast<size_t>(f)];
  }
  const std::string& form(SvForm f) const {
    return forms[static_cast<size_t>(f)];
  }
};

// Checks form count against the language, nonempty forms, and (across the
// list) unique generated names per language.
std::vector<std::string> lexicon_violations(
    const std::vector<LexiconEntry>& entries);

std::vector<LexiconEntry> parse_lexicon(const std::string& text,
                                        const std::string& source_name);
std::vector<LexiconEntry> load_lexicon(const std::filesystem::path& path);
std::string serialize_lexicon(const std::vector<LexiconEntry>& entries);

}  // namespace fngen

#endif  // FNGEN_LEXICON_H_
