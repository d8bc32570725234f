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

#include "fngen/lexicon.hpp"

#include <set>

#include "fngen/jsonl.hpp"

namespace fngen {

size_t inflection_form_count(Language lang) {
  return lang == Language::En ? 5 : 6;
}

std::vector<std::string> lexicon_violations(
    const std::vector<LexiconEntry>& entries) {
  std::vector<std::string> violations;
  std::set<std::pair<Language, std::string>> names;
  for (const auto& entry : entries) {
    if (entry.forms.size() != inflection_form_count(entry.language)) {
      violations.push_back(entry.name() + ": expected " +
                           std::to_string(inflection_form_count(
                               entry.language)) +
                           " forms, got " + std::to_string(entry.forms.size()));
    }
    for (const auto& form : entry.forms) {
      if (form.empty()) {
        violations.push_back(entry.name() + ": empty inflection form");
        break;
      }
    }
    if (!names.insert({entry.language, entry.name()}).second) {
      violations.push_back("duplicate lexicon name: " + entry.name());
    }
  }
  return violations;
}

std::vector<LexiconEntry> parse_lexicon(const std::string& text,
                                        const std::string& source_name) {
  std::vector<LexiconEntry> entries;
  for (const auto& record : parse_jsonl(text, source_name)) {
    require_fields(record, {"lemma", "vtype", "frame", "lang", "forms"},
                   {"lemma", "vtype", "frame", "lang", "forms", "compl"});
    LexiconEntry entry;
    entry.lemma = get_string(record, "lemma");
    auto vtype = verb_type_from_name(get_string(record, "vtype"));
    if (!vtype) {
      throw ParseError(record.source + ": unknown verb type \"" +
                       get_string(record, "vtype") + "\"");
    }
    entry.verb_type = *vtype;
    entry.frame = get_string(record, "frame");
    auto lang = lang_from_code(get_string(record, "lang"));
    if (!lang) {
      throw ParseError(record.source + ": unknown language \"" +
                       get_string(record, "lang") + "\"");
    }
    entry.language = *lang;
    const auto& forms = record.value.at("forms");
    if (!forms.is_array()) {
      throw ParseError(record.source + ": forms must be an array");
    }
    for (const auto& form : forms) {
      if (!form.is_string()) {
        throw ParseError(record.source + ": forms must be strings");
      }
      entry.forms.push_back(form.get<std::string>());
    }
    if (record.value.contains("compl")) {
      entry.complement_marker = get_string(record, "compl");
    }
    entries.push_back(std::move(entry));
  }
  auto violations = lexicon_violations(entries);
  if (!violations.empty()) {
    throw ValidationError(source_name + ": " + violations.front());
  }
  return entries;
}

std::vector<LexiconEntry> load_lexicon(const std::filesystem::path& path) {
  return parse_lexicon(read_text_file(path), path.filename().string());
}

std::string serialize_lexicon(const std::vector<LexiconEntry>& entries) {
  std::string out;
  for (const auto& entry : entries) {
    nlohmann::json record = {{"lemma", entry.lemma},
                             {"vtype", verb_type_name(entry.verb_type)},
                             {"frame", entry.frame},
                             {"lang", lang_code(entry.language)},
                             {"forms", entry.forms}};
    if (!entry.complement_marker.empty()) {
      record["compl"] = entry.complement_marker;
    }
    out += record.dump();
    out += '\n';
  }
  return out;
}

}  // namespace fngen
